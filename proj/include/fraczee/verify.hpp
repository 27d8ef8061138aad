#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fraczee/monomial.hpp"

namespace fraczee {

enum class Comparison { less, greater };

struct CheckItem {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Comparison comparison = Comparison::less;
  bool passed = false;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;

  bool passed() const noexcept;
  // Appends an item, evaluating value < threshold (or >).
  void add(std::string name, double value, double threshold,
           Comparison cmp = Comparison::less);
  void append(const CheckReport& other);
};

inline constexpr double kIdentityTol = 1e-10;
inline constexpr double kExactTol = 1e-12;

// Quadrature against the power rule on nu x alpha x x.
CheckReport verify_quad(int nodes = 64);

// Curl of the external potential, its closed form and the constancy conditions.
CheckReport verify_zeeman_field(const std::vector<double>& alphas = {0.112, 0.5, 0.9},
                                double B = 1.0);

// Truncation of the connection series, Gamma = Omega, the single-term form and
// the reduction of the interaction to L_z(2a-1).
CheckReport verify_connection(const std::vector<double>& alphas = {0.112, 0.5, 0.9},
                              double B = 1.0, std::uint64_t seed = 7);

// [J_z, H] = 0, [L_z, H] != 0, the [iK, H] identity, the J algebra and the
// composition of derivatives, on random monomials with exponents in [2, 6].
CheckReport verify_commutators(const std::vector<double>& alphas = {0.3, 0.5, 0.75, 0.9},
                               unsigned monomials = 50, std::uint64_t seed = 2024);

// Residuals of [J_a, J_b] - (2a-1) J_c p_c^(2(a-1)) for the three cyclic pairs.
CheckReport verify_J_algebra(double alpha, const PolyExpr& f);

// S_z at alpha = 1, J - L - S = 0 and S = -(r x delta p).
CheckReport verify_spin_algebra(const std::vector<double>& alphas = {0.3, 0.5, 0.75, 0.9, 1.0});

CheckReport verify_all();

}  // namespace fraczee
