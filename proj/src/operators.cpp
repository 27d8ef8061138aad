#include "fraczee/operators.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include <fmt/format.h>

#include "fraczee/error.hpp"
#include "fraczee/specfun.hpp"

namespace fraczee {
namespace {

bool steps_less(const std::vector<DerivStep>& a, const std::vector<DerivStep>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const DerivStep& l, const DerivStep& r) {
        return std::tie(l.axis, l.order) < std::tie(r.axis, r.order);
      });
}

// Ordering on everything but the coefficient.
bool key_less(const OperatorTerm& a, const OperatorTerm& b) {
  if (a.phase != b.phase) return a.phase < b.phase;
  if (a.outer.exponents != b.outer.exponents) return a.outer.exponents < b.outer.exponents;
  if (a.derivs != b.derivs) return steps_less(a.derivs, b.derivs);
  if (a.inner != b.inner) return a.inner < b.inner;
  return a.unit_power < b.unit_power;
}

bool same_key(const OperatorTerm& a, const OperatorTerm& b) {
  return a.phase == b.phase && a.outer.exponents == b.outer.exponents && a.derivs == b.derivs &&
         a.inner == b.inner && a.unit_power == b.unit_power;
}

void canonicalize(OperatorTerm& t) {
  t.phase = ((t.phase % 4) + 4) % 4;
  if (t.phase >= 2) {
    t.phase -= 2;
    t.outer.coeff = -t.outer.coeff;
  }
  for (auto& s : t.derivs) {
    s.order = snap(s.order);
  }
  std::erase_if(t.derivs, [](const DerivStep& s) { return s.order == 0.0; });
  std::stable_sort(t.derivs.begin(), t.derivs.end(),
                   [](const DerivStep& l, const DerivStep& r) { return l.axis < r.axis; });
  for (double& e : t.inner) {
    e = snap(e);
  }
  for (double& e : t.outer.exponents) {
    e = snap(e);
  }
  t.unit_power = snap(t.unit_power);
  const bool commutes = std::none_of(t.derivs.begin(), t.derivs.end(), [&](const DerivStep& s) {
    return t.inner[index(s.axis)] != 0.0;
  });
  if (commutes) {
    for (std::size_t i = 0; i < kAxisCount; ++i) {
      t.outer.exponents[i] = snap(t.outer.exponents[i] + t.inner[i]);
    }
    t.inner = {};
  }
}

std::string monomial_factors(const Exponents& e) {
  if (std::all_of(e.begin(), e.end(), [](double v) { return v == 0.0; })) {
    return {};
  }
  return PolyExpr::monomial(1.0, e).to_string();
}

ComplexPoly times(const ComplexPoly& f, const PowerTerm& factor) {
  return {f.re.times(factor), f.im.times(factor)};
}

OperatorTerm make_term(double coeff, int phase, Exponents outer, std::vector<DerivStep> derivs,
                       double unit_power = 0.0) {
  OperatorTerm t;
  t.outer = PowerTerm{coeff, outer};
  t.phase = phase;
  t.derivs = std::move(derivs);
  t.unit_power = unit_power;
  return t;
}

Exponents unit_exponent(Axis a, double e) {
  Exponents ex{};
  ex[index(a)] = e;
  return ex;
}

// Cyclic partners (a, b) of component c: K_c = -i (a d_b - b d_a).
std::pair<Axis, Axis> cyclic_pair(Axis c) {
  switch (c) {
    case Axis::x:
      return {Axis::y, Axis::z};
    case Axis::y:
      return {Axis::z, Axis::x};
    case Axis::z:
      return {Axis::x, Axis::y};
    default:
      throw DomainError("angular momentum components are spatial only");
  }
}

void require_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError(fmt::format("{}: alpha {} outside (0, 1]", who, alpha));
  }
}

}  // namespace

OperatorExpr::OperatorExpr(std::vector<OperatorTerm> terms, double drop_tol)
    : terms_(std::move(terms)) {
  for (auto& t : terms_) {
    canonicalize(t);
  }
  std::stable_sort(terms_.begin(), terms_.end(), key_less);
  std::vector<OperatorTerm> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && same_key(merged.back(), t)) {
      merged.back().outer.coeff += t.outer.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [drop_tol](const OperatorTerm& t) {
    return t.outer.coeff == 0.0 || std::abs(t.outer.coeff) < drop_tol;
  });
  terms_ = std::move(merged);
}

OperatorExpr OperatorExpr::identity() { return OperatorExpr({OperatorTerm{}}); }

OperatorExpr OperatorExpr::derivative(Axis axis, double order) {
  return OperatorExpr({make_term(1.0, 0, {}, {{axis, order}})});
}

OperatorExpr OperatorExpr::multiplication(const PowerTerm& factor) {
  return OperatorExpr({make_term(factor.coeff, 0, factor.exponents, {})});
}

double OperatorExpr::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& t : terms_) {
    m = std::max(m, std::abs(t.outer.coeff));
  }
  return m;
}

OperatorExpr OperatorExpr::operator-() const { return rotated(2); }

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  std::vector<OperatorTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  *this = OperatorExpr(std::move(all));
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) { return *this += -o; }

OperatorExpr& OperatorExpr::operator*=(double s) {
  std::vector<OperatorTerm> all = terms_;
  for (auto& t : all) {
    t.outer.coeff *= s;
  }
  *this = OperatorExpr(std::move(all));
  return *this;
}

OperatorExpr OperatorExpr::rotated(int phase) const {
  std::vector<OperatorTerm> all = terms_;
  for (auto& t : all) {
    t.phase += phase;
  }
  return OperatorExpr(std::move(all));
}

OperatorExpr OperatorExpr::premultiplied(const PowerTerm& factor) const {
  std::vector<OperatorTerm> all = terms_;
  for (auto& t : all) {
    t.outer.coeff *= factor.coeff;
    for (std::size_t i = 0; i < kAxisCount; ++i) {
      t.outer.exponents[i] += factor.exponents[i];
    }
  }
  return OperatorExpr(std::move(all));
}

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (std::size_t n = 0; n < terms_.size(); ++n) {
    const auto& t = terms_[n];
    const bool negative = t.outer.coeff < 0.0;
    if (n == 0) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    std::vector<std::string> parts;
    const double mag = std::abs(t.outer.coeff);
    if (mag != 1.0) {
      parts.push_back(fmt::format("{:.11g}", mag));
    }
    if (t.phase == 1) {
      parts.emplace_back("i");
    }
    if (t.unit_power != 0.0) {
      parts.push_back(fmt::format("(hbar/mc)^{:.11g}", t.unit_power));
    }
    if (auto m = monomial_factors(t.outer.exponents); !m.empty()) {
      parts.push_back(std::move(m));
    }
    for (auto it = t.derivs.rbegin(); it != t.derivs.rend(); ++it) {
      parts.push_back(fmt::format("d_{}^{:.11g}", axis_name(it->axis), it->order));
    }
    if (auto m = monomial_factors(t.inner); !m.empty()) {
      parts.push_back("[" + m + " *]");
    }
    if (parts.empty()) {
      parts.emplace_back("1");
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
      out += (p == 0 ? "" : "*") + parts[p];
    }
  }
  return out;
}

ComplexPoly apply(const OperatorExpr& op, const ComplexPoly& f) {
  ComplexPoly sum;
  for (const auto& t : op.terms()) {
    ComplexPoly g = f;
    if (std::any_of(t.inner.begin(), t.inner.end(), [](double e) { return e != 0.0; })) {
      g = times(g, PowerTerm{1.0, t.inner});
    }
    for (const auto& s : t.derivs) {
      g = rl_derive(g, s.axis, s.order);
    }
    sum += times(g, t.outer).rotated(t.phase);
  }
  return sum;
}

ComplexPoly apply_product(std::span<const OperatorExpr> factors, const ComplexPoly& f) {
  ComplexPoly g = f;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    g = apply(*it, g);
  }
  return g;
}

ComplexPoly commutator(const OperatorExpr& a, const OperatorExpr& b, const ComplexPoly& f) {
  return apply(a, apply(b, f)) - apply(b, apply(a, f));
}

OperatorExpr build_H(double alpha, double m) {
  if (!(m > 0.0)) {
    throw DomainError("build_H: mass must be positive");
  }
  const double c = -0.5 / std::pow(m, 2.0 * alpha - 1.0);
  std::vector<OperatorTerm> terms;
  for (Axis a : kSpatialAxes) {
    terms.push_back(make_term(c, 0, {}, {{a, alpha}, {a, alpha}}));
  }
  return OperatorExpr(std::move(terms));
}

OperatorExpr build_K(Axis component, double beta) {
  const auto [a, b] = cyclic_pair(component);
  return OperatorExpr({
      make_term(-1.0, 1, unit_exponent(a, 1.0), {{b, beta}}, beta),
      make_term(1.0, 1, unit_exponent(b, 1.0), {{a, beta}}, beta),
  });
}

OperatorExpr build_Kz(double beta) { return build_K(Axis::z, beta); }

OperatorExpr build_Lz(double order) {
  return OperatorExpr({
      make_term(1.0, 1, unit_exponent(Axis::y, order), {{Axis::x, order}}, order),
      make_term(-1.0, 1, unit_exponent(Axis::x, order), {{Axis::y, order}}, order),
  });
}

OperatorExpr build_J(Axis component, double alpha) {
  return build_K(component, 2.0 * alpha - 1.0);
}

OperatorExpr build_Jz(double alpha) { return build_J(Axis::z, alpha); }

OperatorExpr build_S(Axis component, double alpha) {
  return build_J(component, alpha) - build_K(component, 1.0);
}

OperatorExpr build_Sz(double alpha) { return build_S(Axis::z, alpha); }

OperatorExpr build_p(Axis axis, double beta) {
  return OperatorExpr({make_term(1.0, 1, {}, {{axis, beta}}, beta)});
}

OperatorExpr build_delta_p(Axis axis, double alpha) {
  return build_p(axis, 2.0 * alpha - 1.0) - build_p(axis, 1.0);
}

GaugeField gauge_field_A(double B, double alpha) {
  require_alpha(alpha, "gauge_field_A");
  GaugeField A;
  A.alpha = alpha;
  A.strength = B;
  A.components[0] = PolyExpr::monomial(-0.5 * B, {1.0 - alpha, 2.0 * alpha - 1.0, alpha - 1.0, 0.0});
  A.components[1] = PolyExpr::monomial(0.5 * B, {2.0 * alpha - 1.0, 1.0 - alpha, alpha - 1.0, 0.0});
  return A;
}

VectorPoly curl_frac(const GaugeField& A) {
  const double a = A.alpha;
  const auto& [ax, ay, az] = A.components;
  return {rl_derive(az, Axis::y, a) - rl_derive(ay, Axis::z, a),
          rl_derive(ax, Axis::z, a) - rl_derive(az, Axis::x, a),
          rl_derive(ay, Axis::x, a) - rl_derive(ax, Axis::y, a)};
}

FieldCheck check_constant_field(const PolyExpr& Bz, double alpha, double tol) {
  FieldCheck c;
  c.residuals[0] = rl_derive(rl_derive(Bz, Axis::y, alpha), Axis::x, alpha);
  c.residuals[1] = rl_derive(rl_derive(Bz, Axis::x, alpha), Axis::y, alpha);
  c.residuals[2] = rl_derive(Bz, Axis::z, alpha);
  for (const auto& r : c.residuals) {
    c.max_residual = std::max(c.max_residual, r.max_abs_coeff());
  }
  c.constant = c.max_residual < tol;
  return c;
}

ConnectionField gamma_connection(const GaugeField& A, unsigned terms) {
  const double a = A.alpha;
  ConnectionField out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Axis axis = kSpatialAxes[i];
    std::vector<OperatorTerm> parts;
    for (unsigned k = 1; k <= terms; ++k) {
      const double c = frac_binomial(a, k);
      if (c == 0.0) {
        continue;
      }
      const double kk = static_cast<double>(k);
      const PolyExpr g = rl_derive(A.components[i], axis, kk - a);
      for (const auto& t : g.terms()) {
        parts.push_back(make_term(c * t.coeff, 0, t.exponents, {{axis, a - kk}}));
      }
    }
    out[i] = OperatorExpr(std::move(parts));
  }
  return out;
}

ConnectionField omega_connection(const GaugeField& A, unsigned terms) {
  const double a = A.alpha;
  ConnectionField out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Axis axis = kSpatialAxes[i];
    std::vector<OperatorTerm> parts;
    for (unsigned k = 1; k <= terms; ++k) {
      const double c = frac_binomial(a, k);
      if (c == 0.0) {
        continue;
      }
      const double kk = static_cast<double>(k);
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      const PolyExpr g = rl_derive(A.components[i], axis, kk - a);
      for (const auto& t : g.terms()) {
        OperatorTerm op = make_term(-c * sign * t.coeff, 0, {}, {{axis, a - kk}});
        op.inner = t.exponents;
        parts.push_back(std::move(op));
      }
    }
    out[i] = OperatorExpr(std::move(parts));
  }
  return out;
}

ComplexPoly zeeman_interaction(const GaugeField& A, const ComplexPoly& f, unsigned terms) {
  const auto gam = gamma_connection(A, terms);
  const auto omg = omega_connection(A, terms);
  ComplexPoly sum;
  for (std::size_t i = 0; i < 3; ++i) {
    const Axis axis = kSpatialAxes[i];
    sum += rl_derive(apply(gam[i], f), axis, A.alpha);
    sum += apply(omg[i], rl_derive(f, axis, A.alpha));
  }
  return sum;
}

ComplexPoly zeeman_interaction_reduced(const GaugeField& A, const ComplexPoly& f) {
  const double a = A.alpha;
  const double c = a * gamma(2.0 - a) * 0.5 * A.strength;
  const PowerTerm factor{2.0 * c, unit_exponent(Axis::z, a - 1.0)};
  return apply(build_Lz(2.0 * a - 1.0).premultiplied(factor).rotated(1), f);
}

}  // namespace fraczee
