#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fraczee {

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2, t = 3 };

inline constexpr std::size_t kAxisCount = 4;
inline constexpr std::array<Axis, kAxisCount> kAllAxes = {Axis::x, Axis::y, Axis::z, Axis::t};
inline constexpr std::array<Axis, 3> kSpatialAxes = {Axis::x, Axis::y, Axis::z};

// Coefficients below this magnitude are removed after every arithmetic step.
inline constexpr double kDefaultDropTol = 1e-12;

constexpr std::size_t index(Axis a) noexcept { return static_cast<std::size_t>(a); }
char axis_name(Axis a) noexcept;
std::optional<Axis> axis_from_name(std::string_view name) noexcept;

// Exponents indexed by Axis; an absent axis has exponent 0.
using Exponents = std::array<double, kAxisCount>;

// Rounds away the floating point dust left by exponent arithmetic such as
// (1 - a) + (a - 1), so equal exponent vectors compare equal bit for bit.
double snap(double value) noexcept;

struct PowerTerm {
  double coeff = 0.0;
  Exponents exponents{};

  double exponent(Axis a) const noexcept { return exponents[index(a)]; }

  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

// Finite sum of signed power terms with real exponents. Always normalized:
// exponent vectors are unique, sorted descending, and no coefficient is
// smaller in magnitude than the drop tolerance used to build it.
class PolyExpr {
 public:
  PolyExpr() = default;
  explicit PolyExpr(std::vector<PowerTerm> terms, double drop_tol = kDefaultDropTol);

  static PolyExpr constant(double c);
  static PolyExpr monomial(double coeff, const Exponents& exponents);
  static PolyExpr variable(Axis a, double exponent = 1.0, double coeff = 1.0);

  const std::vector<PowerTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  double max_abs_coeff() const noexcept;

  // Coefficient of the term with exactly these exponents, 0 when absent.
  double coeff_of(const Exponents& exponents) const noexcept;

  PolyExpr operator-() const;
  PolyExpr& operator+=(const PolyExpr& other);
  PolyExpr& operator-=(const PolyExpr& other);
  PolyExpr& operator*=(double s);

  friend PolyExpr operator+(PolyExpr a, const PolyExpr& b) { return a += b; }
  friend PolyExpr operator-(PolyExpr a, const PolyExpr& b) { return a -= b; }
  friend PolyExpr operator*(PolyExpr a, double s) { return a *= s; }
  friend PolyExpr operator*(double s, PolyExpr a) { return a *= s; }
  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);

  PolyExpr times(const PowerTerm& factor) const;

  friend bool operator==(const PolyExpr&, const PolyExpr&) = default;

  // Canonical rendering, e.g. "x^2 - 2*y" or "1.1283791671*x^0.5".
  std::string to_string() const;

 private:
  std::vector<PowerTerm> terms_;
};

// Pair of real polynomials standing for re + i*im. Operators carrying factors
// of i map real operands into this space.
struct ComplexPoly {
  PolyExpr re;
  PolyExpr im;

  ComplexPoly() = default;
  ComplexPoly(PolyExpr real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  ComplexPoly(PolyExpr real, PolyExpr imag) : re(std::move(real)), im(std::move(imag)) {}

  bool empty() const noexcept { return re.empty() && im.empty(); }
  double max_abs_coeff() const noexcept;

  // Multiplies by i^phase.
  ComplexPoly rotated(int phase) const;

  ComplexPoly& operator+=(const ComplexPoly& o);
  ComplexPoly& operator-=(const ComplexPoly& o);
  ComplexPoly& operator*=(double s);
  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
  friend ComplexPoly operator*(double s, ComplexPoly a) { return a *= s; }
  friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

  std::string to_string() const;
};

// Riemann-Liouville derivative with lower terminal 0, applied termwise by the
// power rule
//   d^order x^nu = Gamma(1+nu) / Gamma(1+nu-order) x^(nu-order).
// A negative order is a fractional integral. Terms whose coefficient vanishes
// through a pole of the denominator are dropped; any surviving term with
// nu - order < -1 raises DomainError.
PolyExpr rl_derive(const PolyExpr& e, Axis axis, double order,
                   double drop_tol = kDefaultDropTol);
ComplexPoly rl_derive(const ComplexPoly& e, Axis axis, double order,
                      double drop_tol = kDefaultDropTol);

using Point = std::map<Axis, double>;

// Sum of coeff * prod sign(x)|x|^e. Axes with exponent 0 may be omitted from
// the point. Throws DomainError for a zero coordinate under a negative
// exponent or a missing axis.
double eval(const PolyExpr& e, const Point& point);

// Polynomial grammar: signed sum of products `c * x^e * y^e`, see parse_expr.
PolyExpr parse_expr(std::string_view src);

// "x=1,y=0.5" -> point.
Point parse_point(std::string_view src);

}  // namespace fraczee
