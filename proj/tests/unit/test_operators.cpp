#include <doctest.h>

#include <cmath>
#include <random>

#include "fraczee/error.hpp"
#include "fraczee/operators.hpp"
#include "fraczee/specfun.hpp"
#include "fraczee/verify.hpp"
#include "gamma_oracle.hpp"

using namespace fraczee;

namespace {

PolyExpr mono(double c, double ex, double ey, double ez) {
  return PolyExpr::monomial(c, {ex, ey, ez, 0.0});
}

std::vector<PolyExpr> family(unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(2.0, 6.0);
  std::vector<PolyExpr> out;
  for (unsigned i = 0; i < n; ++i) {
    out.push_back(mono(1.0, std::round(u(rng) * 100) / 100, std::round(u(rng) * 100) / 100,
                       std::round(u(rng) * 100) / 100));
  }
  return out;
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("apply examples") {
    CHECK(apply(OperatorExpr::identity(), parse_expr("x^2")).re == parse_expr("x^2"));
    CHECK(apply(OperatorExpr::derivative(Axis::x, 1.0), parse_expr("x*y")).re == parse_expr("y"));
    const OperatorExpr dd = OperatorExpr({OperatorTerm{{1.0, {}}, 0, {{Axis::x, 0.5}, {Axis::y, 0.5}}, {}, 0.0}});
    const ComplexPoly r = apply(dd, parse_expr("x*y"));
    const double c = 2.0 / std::sqrt(M_PI);
    CHECK((r.re - mono(c * c, 0.5, 0.5, 0.0)).max_abs_coeff() < 1e-14);
    CHECK(r.im.empty());
  }

  TEST_CASE("canonical form") {
    const OperatorExpr a = OperatorExpr::derivative(Axis::y, 0.5) + OperatorExpr::derivative(Axis::y, 0.5);
    REQUIRE(a.terms().size() == 1);
    CHECK(a.terms()[0].outer.coeff == 2.0);
    CHECK((a - a).is_zero());
    const OperatorExpr i2 = OperatorExpr::identity().rotated(2);
    CHECK(i2 == -OperatorExpr::identity());
    CHECK(OperatorExpr::identity().rotated(4) == OperatorExpr::identity());
    // Derivatives on different axes commute and are stored in axis order.
    const OperatorExpr xy({OperatorTerm{{1.0, {}}, 0, {{Axis::y, 1.0}, {Axis::x, 0.5}}, {}, 0.0}});
    const OperatorExpr yx({OperatorTerm{{1.0, {}}, 0, {{Axis::x, 0.5}, {Axis::y, 1.0}}, {}, 0.0}});
    CHECK(xy == yx);
  }

  TEST_CASE("canonical commutator [d_x, x] is the identity") {
    const OperatorExpr dx = OperatorExpr::derivative(Axis::x, 1.0);
    const OperatorExpr x = OperatorExpr::multiplication({1.0, {1, 0, 0, 0}});
    for (int n = 0; n < 6; ++n) {
      const PolyExpr f = PolyExpr::variable(Axis::x, n);
      CHECK(commutator(dx, x, f) == ComplexPoly(f));
    }
  }

  TEST_CASE("Hamiltonian") {
    const ComplexPoly h = apply(build_H(1.0), parse_expr("x^2"));
    CHECK(h.re == PolyExpr::constant(-1.0));
    // The y and z parts of H act on the constant factor 1 and leave
    // y^(-2a), z^(-2a) terms; the constant comes from the x part alone.
    for (double a : {0.3, 0.4, 0.5}) {
      const ComplexPoly g = apply(build_H(a, 2.0), PolyExpr::variable(Axis::x, 2 * a));
      const double expect = -0.5 / std::pow(2.0, 2 * a - 1) * oracle::gamma_d(1 + 2 * a);
      CHECK(g.re.coeff_of({}) == doctest::Approx(expect).epsilon(1e-13));
    }
    const OperatorExpr classical = build_H(1.0);
    CHECK(classical.terms().size() == 3);
  }

  TEST_CASE("angular momenta") {
    // K_z^1 = -i (x d_y - y d_x) acts on x as i y.
    const ComplexPoly k = apply(build_Kz(1.0), parse_expr("x"));
    CHECK(k.re.empty());
    CHECK(k.im == parse_expr("y"));
    CHECK(build_Kz(1.0) == build_Lz(1.0));
    CHECK(build_Sz(1.0).is_zero());
    for (double a : {0.2, 0.5, 0.75}) {
      CHECK((build_Jz(a) - build_Lz(1.0) - build_Sz(a)).is_zero());
      CHECK(build_J(Axis::x, a) == build_K(Axis::x, 2 * a - 1));
    }
    CHECK_THROWS_AS(build_K(Axis::t, 1.0), DomainError);
  }

  TEST_CASE("[J_z, H] vanishes, [L_z, H] does not") {
    for (double a : {0.3, 0.5, 0.75, 0.9}) {
      for (const auto& f : family(20, 101)) {
        CHECK(commutator(build_Jz(a), build_H(a), f).max_abs_coeff() < 1e-10);
      }
      CHECK(commutator(build_Lz(1.0), build_H(a), mono(1, 3, 3, 3)).max_abs_coeff() > 1e-6);
    }
  }

  TEST_CASE("[iK, H] identity and its sign") {
    const double a = 0.6;
    const double beta = 0.8;
    const OperatorExpr rhs({OperatorTerm{{a, {}}, 0, {{Axis::x, 2 * a - 1}, {Axis::y, beta}}, {}, 0},
                            OperatorTerm{{-a, {}}, 0, {{Axis::x, beta}, {Axis::y, 2 * a - 1}}, {}, 0}});
    for (const auto& f : family(10, 7)) {
      const ComplexPoly lhs = commutator(build_Kz(beta).rotated(1), build_H(a), f);
      CHECK((lhs - apply(rhs, f)).max_abs_coeff() < 1e-10);
      // The opposite overall sign of K would flip the commutator.
      const ComplexPoly flipped = commutator(build_Kz(beta).rotated(3), build_H(a), f);
      CHECK((flipped - apply(rhs, f)).max_abs_coeff() > 1e-6);
    }
  }

  TEST_CASE("gauge field") {
    const GaugeField classical = gauge_field_A(2.0, 1.0);
    CHECK(classical.components[0] == parse_expr("-y"));
    CHECK(classical.components[1] == parse_expr("x"));
    CHECK(classical.components[2].empty());
    const GaugeField half = gauge_field_A(1.0, 0.5);
    CHECK(half.components[0] == parse_expr("-0.5*x^0.5*z^-0.5"));
    CHECK(half.components[1] == parse_expr("0.5*y^0.5*z^-0.5"));
    const GaugeField zero = gauge_field_A(0.0, 0.3);
    for (const auto& c : zero.components) CHECK(c.empty());
    CHECK_THROWS_AS(gauge_field_A(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(gauge_field_A(1.0, 1.5), DomainError);
  }

  TEST_CASE("fractional curl") {
    for (double a : {0.112, 0.5, 0.9}) {
      const VectorPoly B = curl_frac(gauge_field_A(1.0, a));
      CHECK(B[0].empty());
      CHECK(B[1].empty());
      const double c = 0.5 * oracle::gamma_d(2 * a) / oracle::gamma_d(a);
      REQUIRE(B[2].size() == 2);
      CHECK(B[2].coeff_of({snap(1 - a), snap(a - 1), snap(a - 1), 0}) == doctest::Approx(c).epsilon(1e-12));
      CHECK(B[2].coeff_of({snap(a - 1), snap(1 - a), snap(a - 1), 0}) == doctest::Approx(c).epsilon(1e-12));
      CHECK(check_constant_field(B[2], a).constant);
    }
    const VectorPoly cl = curl_frac(gauge_field_A(3.0, 1.0));
    CHECK(cl[2] == PolyExpr::constant(3.0));
    GaugeField none;
    none.alpha = 0.5;
    for (const auto& c : curl_frac(none)) CHECK(c.empty());
  }

  TEST_CASE("constant field check") {
    CHECK(check_constant_field(PolyExpr{}, 0.5).constant);
    CHECK_FALSE(check_constant_field(PolyExpr::variable(Axis::z), 0.5).constant);
    const FieldCheck fz = check_constant_field(PolyExpr::variable(Axis::z), 0.5);
    CHECK_FALSE(fz.residuals[2].empty());
  }

  TEST_CASE("connections") {
    for (double a : {0.112, 0.5, 0.9}) {
      const GaugeField A = gauge_field_A(1.7, a);
      const auto g1 = gamma_connection(A, 1);
      const auto g5 = gamma_connection(A, 5);
      const auto o1 = omega_connection(A, 1);
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(g1[i] == g5[i]);
        CHECK(g1[i] == o1[i]);
      }
      CHECK(g1[2].is_zero());
      REQUIRE(g1[0].terms().size() == 1);
      const double c = a * oracle::gamma_d(2 - a) * 0.85;
      CHECK(g1[0].terms()[0].outer.coeff == doctest::Approx(-c).epsilon(1e-12));
      for (const auto& f : family(5, 3)) {
        const ComplexPoly diff = zeeman_interaction(A, f, 3) - zeeman_interaction_reduced(A, f);
        CHECK(diff.max_abs_coeff() < 1e-10);
      }
    }
    GaugeField none;
    none.alpha = 0.5;
    for (const auto& g : gamma_connection(none, 3)) CHECK(g.is_zero());
  }

  TEST_CASE("J algebra") {
    for (double a : {0.75, 1.0}) {
      const CheckReport r = verify_J_algebra(a, a == 1.0 ? mono(1, 2, 2, 2) : mono(1, 3, 3, 3));
      CHECK(r.passed());
    }
    // The deformation is visible: [J_x, J_y] alone is nonzero.
    const ComplexPoly lhs = commutator(build_J(Axis::x, 0.75), build_J(Axis::y, 0.75), mono(1, 3, 3, 3));
    CHECK(lhs.max_abs_coeff() > 1e-6);
  }

  TEST_CASE("rendering") {
    CHECK(build_Lz(1.0).to_string().find("d_x") != std::string::npos);
    CHECK(OperatorExpr().to_string() == "0");
  }
}
