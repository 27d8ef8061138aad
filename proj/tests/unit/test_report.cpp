#include <doctest.h>

#include <set>
#include <sstream>

#include "fixture.hpp"
#include "fraczee/error.hpp"
#include "fraczee/report.hpp"

using namespace fraczee;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string l;
  while (std::getline(ss, l)) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("number formatting") {
    CHECK(format_mev(945.7649) == "945.76");
    CHECK(format_mev(-0.001) == "0.00");
    CHECK(format_sig6(0.1261100049) == "0.12611");
    CHECK(format_sig6(132.5674) == "132.567");
    CHECK(round_sig6(1.23456789) == 1.23457);
  }

  TEST_CASE("table CSV") {
    const auto rows = evaluate(kReferenceParams, builtin_table());
    const auto l = lines(table_csv(rows));
    REQUIRE(l.size() == 54);
    CHECK(l[0] == "name,L,M,E_exp,E_th,dE_percent");
    CHECK(l[5] == "φ(1020),2,2,1019.00,945.78,-7.18584");
    CHECK(lines(table_csv({})).size() == 1);
  }

  TEST_CASE("dE column against the printed table") {
    // The printed dE values were computed from masses more precise than the
    // printed E_exp, so the bound allows for E_exp being rounded to 0.5 MeV.
    const auto fixture = load_fixture();
    const auto rows = evaluate(kReferenceParams, builtin_table());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!fixture[i].delta_e || fixture[i].name == "Λ⁰_b") continue;
      const double bound = 0.02 + 100.0 * rows[i].e_th * 0.5 / (rows[i].e_exp * rows[i].e_exp) + 0.005;
      CHECK_MESSAGE(std::abs(rows[i].delta_percent - *fixture[i].delta_e) < bound, rows[i].name);
    }
  }

  TEST_CASE("plot data") {
    const auto l = lines(plot_tsv(kReferenceParams, builtin_table(), 1, 9));
    CHECK(l[0] == "series\tname\tL\tM\tmass_mev");
    std::set<std::string> series;
    int experiment = 0;
    for (std::size_t i = 1; i < l.size(); ++i) {
      const std::string s = l[i].substr(0, l[i].find('\t'));
      if (s == "experiment") ++experiment;
      else series.insert(s);
    }
    CHECK(series.size() == 9);
    CHECK(series.contains("theory L=1"));
    CHECK(series.contains("theory L=9"));
    CHECK(experiment == 49);
    CHECK(lines(plot_tsv(kReferenceParams, builtin_table(), 5, 4)).size() == 1);
  }

  TEST_CASE("fit JSON") {
    FitResult r = assess(kReferenceParams, std::vector<ParticleRecord>(builtin_table().begin() + 5,
                                                                       builtin_table().begin() + 9));
    const std::string j = fit_result_json(r);
    CHECK(j.find("\"params\"") != std::string::npos);
    CHECK(j.find("\"rms_percent\"") != std::string::npos);
    CHECK(j.find("\"per_particle\"") != std::string::npos);
    CHECK(j.find("\"evals\"") != std::string::npos);
    CHECK(j.find("\"converged\"") != std::string::npos);
    CHECK(j == fit_result_json(r));
    const FitParams back = params_from_json(j);
    CHECK(back.alpha == 0.112);
    CHECK(back.m0 == -17171.6);
    CHECK_THROWS_AS(params_from_json("{\"alpha\": 1}"), DataError);
    CHECK_THROWS_AS(params_from_json("not json"), DataError);
    CHECK(params_from_json("{\"alpha\":0.5,\"m0\":1,\"a0\":2,\"b0\":3}").b0 == 3.0);
  }

  TEST_CASE("check report JSON") {
    CheckReport r{"demo", {}};
    r.add("small", 1e-13, 1e-10);
    r.add("large", 2.0, 1e-6, Comparison::greater);
    CHECK(r.passed());
    r.add("bad", 1.0, 1e-10);
    CHECK_FALSE(r.passed());
    const std::string j = check_report_json(r);
    CHECK(j.find("\"passed\": false") != std::string::npos);
    CHECK(j.find("\"comparison\": \">\"") != std::string::npos);
  }
}
