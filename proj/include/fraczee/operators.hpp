#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "fraczee/monomial.hpp"

namespace fraczee {

struct DerivStep {
  Axis axis = Axis::x;
  double order = 0.0;

  friend bool operator==(const DerivStep&, const DerivStep&) = default;
};

// One term of a linear operator:
//
//   i^phase * outer * D_n ... D_1 ( inner * f )
//
// where `derivs` lists D_1 .. D_n in the order they act. `outer` carries the
// real coefficient. `inner` is a pure monomial multiplier applied before any
// derivative; it is folded into `outer` whenever it commutes with the chain.
// `unit_power` records the (hbar/mc)^p factor that natural units set to 1.
struct OperatorTerm {
  PowerTerm outer{1.0, {}};
  int phase = 0;
  std::vector<DerivStep> derivs;
  Exponents inner{};
  double unit_power = 0.0;

  friend bool operator==(const OperatorTerm&, const OperatorTerm&) = default;
};

// Finite linear combination of OperatorTerms, kept in canonical form:
// phases reduced to {0, 1} with i^2 folded into the sign, zero-order steps
// removed, steps stably sorted by axis (different axes commute), equal terms
// merged and near-zero coefficients dropped.
class OperatorExpr {
 public:
  OperatorExpr() = default;
  explicit OperatorExpr(std::vector<OperatorTerm> terms, double drop_tol = kDefaultDropTol);

  static OperatorExpr identity();
  static OperatorExpr derivative(Axis axis, double order);
  static OperatorExpr multiplication(const PowerTerm& factor);

  const std::vector<OperatorTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  double max_abs_coeff() const noexcept;

  OperatorExpr operator-() const;
  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(double s);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(double s, OperatorExpr a) { return a *= s; }

  // i^phase * this
  OperatorExpr rotated(int phase) const;
  // factor * this (left multiplication by a monomial)
  OperatorExpr premultiplied(const PowerTerm& factor) const;

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

  std::string to_string() const;

 private:
  std::vector<OperatorTerm> terms_;
};

ComplexPoly apply(const OperatorExpr& op, const ComplexPoly& f);

// Applies a product of operators, rightmost factor first: (A B C) f = A(B(C f)).
ComplexPoly apply_product(std::span<const OperatorExpr> factors, const ComplexPoly& f);

// [a, b] f = a(b f) - b(a f)
ComplexPoly commutator(const OperatorExpr& a, const OperatorExpr& b, const ComplexPoly& f);

// Operator builders, natural units (hbar = c = 1, m = 1 unless given).
// Angular momenta use K_c = -i (a d_b^beta - b d_a^beta) for cyclic (a, b, c),
// the sign that makes the standard L_z = K_z at beta = 1.

// -1/(2 m^(2 alpha - 1)) sum_i d_i^alpha d_i^alpha, compositions kept as such.
OperatorExpr build_H(double alpha, double m = 1.0);
OperatorExpr build_K(Axis component, double beta);
OperatorExpr build_Kz(double beta);
// Fractional L_z(g) = i (y^g d_x^g - x^g d_y^g); L_z(1) is the standard L_z.
OperatorExpr build_Lz(double order);
// Total angular momentum J^(2 alpha - 1) = K^(2 alpha - 1).
OperatorExpr build_J(Axis component, double alpha);
OperatorExpr build_Jz(double alpha);
// Intrinsic part S = J^(2 alpha - 1) - K^1.
OperatorExpr build_S(Axis component, double alpha);
OperatorExpr build_Sz(double alpha);
// p_i^beta = i d_i^beta.
OperatorExpr build_p(Axis axis, double beta);
// delta p_i = i (d_i^(2 alpha - 1) - d_i).
OperatorExpr build_delta_p(Axis axis, double alpha);

// External fractional gauge potential for a constant field of strength B.
struct GaugeField {
  std::array<PolyExpr, 3> components;
  double alpha = 1.0;
  double strength = 0.0;
};

using VectorPoly = std::array<PolyExpr, 3>;
using ConnectionField = std::array<OperatorExpr, 3>;

// A = { -B/2 x^(1-a) y^(2a-1) z^(a-1), B/2 x^(2a-1) y^(1-a) z^(a-1), 0 }.
GaugeField gauge_field_A(double B, double alpha);

// Fractional curl: { d_y^a A_z - d_z^a A_y, d_z^a A_x - d_x^a A_z, d_x^a A_y - d_y^a A_x }.
VectorPoly curl_frac(const GaugeField& A);

struct FieldCheck {
  bool constant = false;
  // d_x^a d_y^a Bz, d_y^a d_x^a Bz, d_z^a Bz
  std::array<PolyExpr, 3> residuals;
  double max_residual = 0.0;
};

FieldCheck check_constant_field(const PolyExpr& Bz, double alpha, double tol = 1e-12);

// Charge connection, truncated after `terms` terms of its binomial series:
//   Gamma_i = sum_{k>=1} binom(a, k) (d_i^(k-a) A_i) d_i^(a-k)
ConnectionField gamma_connection(const GaugeField& A, unsigned terms);
// Its variational partner:
//   Omega_i = -sum_{k>=1} binom(a, k) (-1)^k d_i^(a-k) o (d_i^(k-a) A_i)
ConnectionField omega_connection(const GaugeField& A, unsigned terms);

// The interaction part (grad_a . Gamma + Omega . grad_a) f.
ComplexPoly zeeman_interaction(const GaugeField& A, const ComplexPoly& f, unsigned terms = 1);
// Its reduced form 2 i a Gamma(2-a) (B/2) z^(a-1) L_z(2a-1) f.
ComplexPoly zeeman_interaction_reduced(const GaugeField& A, const ComplexPoly& f);

}  // namespace fraczee
