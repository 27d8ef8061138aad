#include "fraczee/monomial.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fraczee/error.hpp"
#include "fraczee/specfun.hpp"

namespace fraczee {
namespace {

bool descending(const PowerTerm& a, const PowerTerm& b) {
  return a.exponents > b.exponents;
}

std::string format_number(double v) {
  return fmt::format("{:.11g}", v);
}

std::string describe(const PowerTerm& t) {
  return PolyExpr({t}, 0.0).to_string();
}

}  // namespace

char axis_name(Axis a) noexcept {
  static constexpr std::array<char, kAxisCount> names = {'x', 'y', 'z', 't'};
  return names[index(a)];
}

std::optional<Axis> axis_from_name(std::string_view name) noexcept {
  if (name.size() != 1) {
    return std::nullopt;
  }
  for (Axis a : kAllAxes) {
    if (axis_name(a) == name.front()) {
      return a;
    }
  }
  return std::nullopt;
}

double snap(double value) noexcept {
  if (!std::isfinite(value) || std::abs(value) > 1e3) {
    return value;
  }
  return std::nearbyint(value * 1e12) / 1e12 + 0.0;
}

PolyExpr::PolyExpr(std::vector<PowerTerm> terms, double drop_tol) : terms_(std::move(terms)) {
  for (auto& t : terms_) {
    for (double& e : t.exponents) {
      e = snap(e);
    }
  }
  std::sort(terms_.begin(), terms_.end(), descending);
  std::vector<PowerTerm> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [drop_tol](const PowerTerm& t) {
    return t.coeff == 0.0 || std::abs(t.coeff) < drop_tol;
  });
  terms_ = std::move(merged);
}

PolyExpr PolyExpr::constant(double c) { return PolyExpr({PowerTerm{c, {}}}); }

PolyExpr PolyExpr::monomial(double coeff, const Exponents& exponents) {
  return PolyExpr({PowerTerm{coeff, exponents}});
}

PolyExpr PolyExpr::variable(Axis a, double exponent, double coeff) {
  Exponents e{};
  e[index(a)] = exponent;
  return monomial(coeff, e);
}

double PolyExpr::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& t : terms_) {
    m = std::max(m, std::abs(t.coeff));
  }
  return m;
}

double PolyExpr::coeff_of(const Exponents& exponents) const noexcept {
  Exponents key = exponents;
  for (double& e : key) {
    e = snap(e);
  }
  for (const auto& t : terms_) {
    if (t.exponents == key) {
      return t.coeff;
    }
  }
  return 0.0;
}

PolyExpr PolyExpr::operator-() const {
  PolyExpr r = *this;
  for (auto& t : r.terms_) {
    t.coeff = -t.coeff;
  }
  return r;
}

PolyExpr& PolyExpr::operator+=(const PolyExpr& other) {
  std::vector<PowerTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  *this = PolyExpr(std::move(all));
  return *this;
}

PolyExpr& PolyExpr::operator-=(const PolyExpr& other) { return *this += -other; }

PolyExpr& PolyExpr::operator*=(double s) {
  std::vector<PowerTerm> all = terms_;
  for (auto& t : all) {
    t.coeff *= s;
  }
  *this = PolyExpr(std::move(all));
  return *this;
}

PolyExpr PolyExpr::times(const PowerTerm& factor) const {
  std::vector<PowerTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    PowerTerm p{t.coeff * factor.coeff, t.exponents};
    for (std::size_t i = 0; i < kAxisCount; ++i) {
      p.exponents[i] += factor.exponents[i];
    }
    out.push_back(p);
  }
  return PolyExpr(std::move(out));
}

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
  std::vector<PowerTerm> out;
  out.reserve(a.size() * b.size());
  for (const auto& tb : b.terms()) {
    const auto partial = a.times(tb);
    out.insert(out.end(), partial.terms().begin(), partial.terms().end());
  }
  return PolyExpr(std::move(out));
}

std::string PolyExpr::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0.0;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    for (Axis a : kAllAxes) {
      const double e = t.exponent(a);
      if (e == 0.0) {
        continue;
      }
      if (!factors.empty()) {
        factors += '*';
      }
      factors += axis_name(a);
      if (e != 1.0) {
        factors += '^' + format_number(e);
      }
    }
    const double mag = std::abs(t.coeff);
    if (factors.empty()) {
      out += format_number(mag);
    } else if (mag == 1.0) {
      out += factors;
    } else {
      out += format_number(mag) + '*' + factors;
    }
  }
  return out;
}

double ComplexPoly::max_abs_coeff() const noexcept {
  return std::max(re.max_abs_coeff(), im.max_abs_coeff());
}

ComplexPoly ComplexPoly::rotated(int phase) const {
  switch (((phase % 4) + 4) % 4) {
    case 1:
      return {-im, re};
    case 2:
      return {-re, -im};
    case 3:
      return {im, -re};
    default:
      return *this;
  }
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(double s) {
  re *= s;
  im *= s;
  return *this;
}

std::string ComplexPoly::to_string() const {
  if (im.empty()) {
    return re.to_string();
  }
  if (re.empty()) {
    return "i*(" + im.to_string() + ")";
  }
  return "(" + re.to_string() + ") + i*(" + im.to_string() + ")";
}

PolyExpr rl_derive(const PolyExpr& e, Axis axis, double order, double drop_tol) {
  if (!std::isfinite(order)) {
    throw DomainError("rl_derive: non-finite order");
  }
  if (order == 0.0) {
    return e;
  }
  std::vector<PowerTerm> out;
  out.reserve(e.size());
  for (const auto& t : e.terms()) {
    const double nu = t.exponent(axis);
    const double denom_arg = snap(1.0 + nu - order);
    if (is_gamma_pole(denom_arg)) {
      continue;  // 1/Gamma at a pole: the term vanishes identically
    }
    if (is_gamma_pole(snap(1.0 + nu))) {
      throw DomainError(fmt::format("rl_derive: exponent {} on {} is not integrable at 0 in term {}",
                                    nu, axis_name(axis), describe(t)));
    }
    const double new_exp = snap(nu - order);
    if (new_exp < -1.0) {
      throw DomainError(fmt::format("rl_derive: order {} on {} violates nu - order >= -1 in term {}",
                                    order, axis_name(axis), describe(t)));
    }
    PowerTerm d = t;
    if (order > 0.0 && order == std::floor(order) && order <= 64.0) {
      // Integer order: the Gamma ratio is the falling factorial nu (nu-1) ...
      d.coeff = t.coeff;
      for (double j = 0.0; j < order; j += 1.0) {
        d.coeff *= nu - j;
      }
    } else {
      d.coeff = t.coeff * gamma(1.0 + nu) * rgamma(denom_arg);
    }
    d.exponents[index(axis)] = new_exp;
    out.push_back(d);
  }
  return PolyExpr(std::move(out), drop_tol);
}

ComplexPoly rl_derive(const ComplexPoly& e, Axis axis, double order, double drop_tol) {
  return {rl_derive(e.re, axis, order, drop_tol), rl_derive(e.im, axis, order, drop_tol)};
}

double eval(const PolyExpr& e, const Point& point) {
  double sum = 0.0;
  for (const auto& t : e.terms()) {
    double v = t.coeff;
    for (Axis a : kAllAxes) {
      const double ex = t.exponent(a);
      if (ex == 0.0) {
        continue;
      }
      const auto it = point.find(a);
      if (it == point.end()) {
        throw DomainError(fmt::format("eval: no coordinate for axis {}", axis_name(a)));
      }
      const double x = it->second;
      if (x == 0.0) {
        if (ex < 0.0) {
          throw DomainError(fmt::format("eval: zero {} raised to negative exponent {}",
                                        axis_name(a), ex));
        }
        v = 0.0;
        continue;
      }
      if (ex == std::floor(ex)) {
        v *= std::pow(x, ex);
      } else {
        v *= std::copysign(std::pow(std::abs(x), ex), x);
      }
    }
    sum += v;
  }
  return sum;
}

}  // namespace fraczee
