#include "fraczee/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "fraczee/operators.hpp"
#include "fraczee/rl_numeric.hpp"
#include "fraczee/specfun.hpp"

namespace fraczee {

namespace {

std::vector<PolyExpr> random_monomials(unsigned count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::round((2.0 + 4.0 * u) * 1000.0) / 1000.0;
  };
  std::vector<PolyExpr> out;
  out.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    const double ex = draw();
    const double ey = draw();
    const double ez = draw();
    out.push_back(PolyExpr::monomial(1.0, {ex, ey, ez, 0.0}));
  }
  return out;
}

OperatorTerm chain(double coeff, int phase, std::vector<DerivStep> derivs) {
  OperatorTerm t;
  t.outer.coeff = coeff;
  t.phase = phase;
  t.derivs = std::move(derivs);
  return t;
}

// c (d_x^p d_y^q - d_x^q d_y^p), times i^phase.
OperatorExpr antisym_pair(double c, int phase, double p, double q) {
  return OperatorExpr({chain(c, phase, {{Axis::x, p}, {Axis::y, q}}),
                       chain(-c, phase, {{Axis::x, q}, {Axis::y, p}})});
}

std::string alpha_tag(double alpha) { return fmt::format("alpha={:g}", alpha); }

}  // namespace

bool CheckReport::passed() const noexcept {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

void CheckReport::add(std::string name, double value, double threshold, Comparison cmp) {
  const bool ok = cmp == Comparison::less ? value < threshold : value > threshold;
  items.push_back({std::move(name), value, threshold, cmp, ok});
}

void CheckReport::append(const CheckReport& other) {
  for (const auto& i : other.items) {
    items.push_back(i);
    items.back().name = other.suite + ": " + i.name;
  }
}

CheckReport verify_quad(int nodes) {
  CheckReport r{"quad", {}};
  for (double nu : {0.0, 0.5, 1.0, 2.3}) {
    for (double alpha : {0.112, 0.3, 0.5, 0.9}) {
      const PolyExpr d = rl_derive(PolyExpr::variable(Axis::x, nu), Axis::x, alpha);
      for (double x : {0.5, 1.0, 2.0}) {
        const double exact = eval(d, {{Axis::x, x}});
        const double q = rl_derivative_quad(
            [nu](double s) { return nu == 0.0 ? 1.0 : std::pow(s, nu); }, alpha, x, nodes);
        r.add(fmt::format("nu={:g} alpha={:g} x={:g}", nu, alpha, x),
              std::abs(q - exact) / std::abs(exact), 1e-6);
      }
    }
  }
  return r;
}

CheckReport verify_zeeman_field(const std::vector<double>& alphas, double B) {
  CheckReport r{"zeeman-field", {}};
  for (double a : alphas) {
    const VectorPoly curl = curl_frac(gauge_field_A(B, a));
    const double c = 0.5 * B * gamma(2.0 * a) / gamma(a);
    const PolyExpr expected({{c, {snap(1.0 - a), snap(a - 1.0), snap(a - 1.0), 0.0}},
                             {c, {snap(a - 1.0), snap(1.0 - a), snap(a - 1.0), 0.0}}});
    const std::string tag = alpha_tag(a);
    r.add(tag + " B_z closed form", (curl[2] - expected).max_abs_coeff(), kExactTol);
    r.add(tag + " B_x, B_y vanish",
          std::max(curl[0].max_abs_coeff(), curl[1].max_abs_coeff()), kExactTol);
    r.add(tag + " constancy conditions", check_constant_field(curl[2], a).max_residual,
          kExactTol);
  }
  const VectorPoly classical = curl_frac(gauge_field_A(B, 1.0));
  r.add("alpha=1 B = (0, 0, B)",
        std::max({classical[0].max_abs_coeff(), classical[1].max_abs_coeff(),
                  (classical[2] - PolyExpr::constant(B)).max_abs_coeff()}),
        kExactTol);
  r.add("alpha=0.5 rejects B_z = z",
        check_constant_field(PolyExpr::variable(Axis::z), 0.5).max_residual, kExactTol,
        Comparison::greater);
  return r;
}

CheckReport verify_connection(const std::vector<double>& alphas, double B, std::uint64_t seed) {
  CheckReport r{"connection", {}};
  const auto family = random_monomials(10, seed);
  for (double a : alphas) {
    const GaugeField A = gauge_field_A(B, a);
    const auto g1 = gamma_connection(A, 1);
    const auto g5 = gamma_connection(A, 5);
    const auto o1 = omega_connection(A, 1);
    const auto o5 = omega_connection(A, 5);

    const double c = a * gamma(2.0 - a) * 0.5 * B;
    auto closed = [&](Axis axis, double coeff, Exponents outer) {
      OperatorTerm t;
      t.outer = {coeff, outer};
      t.derivs = {{axis, a - 1.0}};
      return OperatorExpr({t});
    };
    const ConnectionField expected{
        closed(Axis::x, -c, {0.0, 2.0 * a - 1.0, a - 1.0, 0.0}),
        closed(Axis::y, c, {2.0 * a - 1.0, 0.0, a - 1.0, 0.0}),
        OperatorExpr{},
    };

    double trunc = 0.0;
    double equal = 0.0;
    double form = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      trunc = std::max({trunc, (g1[i] - g5[i]).max_abs_coeff(), (o1[i] - o5[i]).max_abs_coeff()});
      equal = std::max(equal, (g1[i] - o1[i]).max_abs_coeff());
      form = std::max(form, (g1[i] - expected[i]).max_abs_coeff());
    }
    const std::string tag = alpha_tag(a);
    r.add(tag + " series K=1 vs K=5", trunc, kExactTol);
    r.add(tag + " Gamma - Omega", equal, kExactTol);
    r.add(tag + " single-term form", form, kExactTol);

    double reduction = 0.0;
    for (const auto& f : family) {
      const ComplexPoly full = zeeman_interaction(A, f, 5);
      const ComplexPoly reduced = zeeman_interaction_reduced(A, f);
      reduction = std::max(reduction, (full - reduced).max_abs_coeff());
    }
    r.add(tag + " interaction = 2i c z^(a-1) L_z(2a-1)", reduction, kIdentityTol);
  }
  return r;
}

CheckReport verify_commutators(const std::vector<double>& alphas, unsigned monomials,
                               std::uint64_t seed) {
  CheckReport r{"commutators", {}};
  const auto family = random_monomials(monomials, seed);
  const PolyExpr x3y3z3 = PolyExpr::monomial(1.0, {3.0, 3.0, 3.0, 0.0});
  for (double a : alphas) {
    const std::string tag = alpha_tag(a);
    const OperatorExpr H = build_H(a);
    const OperatorExpr Jz = build_Jz(a);
    const OperatorExpr Lz = build_Lz(1.0);

    double jz = 0.0;
    std::array<double, 2> kkk{};
    double semigroup = 0.0;
    constexpr std::array<double, 2> betas{0.5, 1.0};
    for (const auto& f : family) {
      jz = std::max(jz, commutator(Jz, H, f).max_abs_coeff());
      for (std::size_t b = 0; b < betas.size(); ++b) {
        const ComplexPoly lhs = commutator(build_Kz(betas[b]).rotated(1), H, f);
        const ComplexPoly rhs = apply(antisym_pair(a, 0, 2.0 * a - 1.0, betas[b]), f);
        kkk[b] = std::max(kkk[b], (lhs - rhs).max_abs_coeff());
      }
      for (Axis ax : kSpatialAxes) {
        const PolyExpr composed = rl_derive(rl_derive(f, ax, a - 1.0), ax, a);
        const PolyExpr direct = rl_derive(f, ax, 2.0 * a - 1.0);
        const PolyExpr twice = rl_derive(rl_derive(f, ax, a), ax, a);
        const PolyExpr twice_direct = rl_derive(f, ax, 2.0 * a);
        semigroup = std::max({semigroup, (composed - direct).max_abs_coeff(),
                              (twice - twice_direct).max_abs_coeff()});
      }
    }
    r.add(tag + " [J_z, H] on random monomials", jz, kIdentityTol);
    for (std::size_t b = 0; b < betas.size(); ++b) {
      r.add(fmt::format("{} [iK_z^{:g}, H] identity", tag, betas[b]), kkk[b], kIdentityTol);
    }
    r.add(tag + " derivative composition", semigroup, kIdentityTol);

    // The z^3 factor keeps the z part of H inside the power rule domain.
    const ComplexPoly lz = commutator(Lz, H, x3y3z3);
    r.add(tag + " [L_z, H] x^3 y^3 z^3 nonzero", lz.max_abs_coeff(), 1e-6, Comparison::greater);
    const ComplexPoly lz_rhs = apply(antisym_pair(-a, 1, 2.0 * a - 1.0, 1.0), x3y3z3);
    r.add(tag + " [L_z, H] x^3 y^3 z^3 closed form", (lz - lz_rhs).max_abs_coeff(),
          kIdentityTol);

    r.append(verify_J_algebra(a, x3y3z3));
  }
  r.add("alpha=1 [L_z, H] on random monomials",
        [&] {
          double m = 0.0;
          for (const auto& f : family) {
            m = std::max(m, commutator(build_Lz(1.0), build_H(1.0), f).max_abs_coeff());
          }
          return m;
        }(),
        kExactTol);
  r.append(verify_J_algebra(1.0, PolyExpr::monomial(1.0, {2.0, 2.0, 2.0, 0.0})));
  return r;
}

CheckReport verify_J_algebra(double alpha, const PolyExpr& f) {
  CheckReport r{"J-algebra " + alpha_tag(alpha), {}};
  constexpr std::array<std::array<Axis, 3>, 3> cyclic{{
      {Axis::x, Axis::y, Axis::z},
      {Axis::y, Axis::z, Axis::x},
      {Axis::z, Axis::x, Axis::y},
  }};
  double lhs_norm = 0.0;
  for (const auto& [a, b, c] : cyclic) {
    const ComplexPoly lhs = commutator(build_J(a, alpha), build_J(b, alpha), f);
    const std::array<OperatorExpr, 2> rhs_ops{build_J(c, alpha),
                                              build_p(c, 2.0 * (alpha - 1.0))};
    const ComplexPoly rhs = (2.0 * alpha - 1.0) * apply_product(rhs_ops, f);
    lhs_norm = std::max(lhs_norm, lhs.max_abs_coeff());
    r.add(fmt::format("[J_{}, J_{}] - (2a-1) J_{} p_{}^(2a-2)", axis_name(a), axis_name(b),
                      axis_name(c), axis_name(c)),
          (lhs - rhs).max_abs_coeff(), kIdentityTol);
  }
  if (alpha != 0.5) {
    r.add("algebra is non-trivial", lhs_norm, kIdentityTol, Comparison::greater);
  }
  return r;
}

CheckReport verify_spin_algebra(const std::vector<double>& alphas) {
  CheckReport r{"spin-algebra", {}};
  r.add("S_z vanishes at alpha=1", build_Sz(1.0).max_abs_coeff(), kExactTol);
  r.add("L_z(1) = K_z^1", (build_Lz(1.0) - build_Kz(1.0)).max_abs_coeff(), kExactTol);
  for (double a : alphas) {
    const std::string tag = alpha_tag(a);
    double split = 0.0;
    double cross = 0.0;
    for (Axis c : kSpatialAxes) {
      split = std::max(split, (build_J(c, a) - build_K(c, 1.0) - build_S(c, a)).max_abs_coeff());
    }
    const OperatorExpr r_cross_dp =
        build_delta_p(Axis::y, a).premultiplied({1.0, {1.0, 0.0, 0.0, 0.0}}) -
        build_delta_p(Axis::x, a).premultiplied({1.0, {0.0, 1.0, 0.0, 0.0}});
    cross = (build_Sz(a) + r_cross_dp).max_abs_coeff();
    r.add(tag + " J - L - S", split, kExactTol);
    r.add(tag + " S_z = -(x dp_y - y dp_x)", cross, kExactTol);
    if (a != 1.0) {
      r.add(tag + " S_z nonzero", build_Sz(a).max_abs_coeff(), kExactTol, Comparison::greater);
    }
  }
  return r;
}

CheckReport verify_all() {
  CheckReport r{"all", {}};
  r.append(verify_quad());
  r.append(verify_zeeman_field());
  r.append(verify_connection());
  r.append(verify_commutators());
  r.append(verify_spin_algebra());
  return r;
}

}  // namespace fraczee
