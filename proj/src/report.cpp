#include "fraczee/report.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>
#include <json.hpp>

#include "fraczee/error.hpp"

namespace fraczee {

using nlohmann::json;

double round_mev(double v) { return std::round(v * 100.0) / 100.0 + 0.0; }

double round_sig6(double v) {
  if (!std::isfinite(v) || v == 0.0) return v + 0.0;
  return std::stod(fmt::format("{:.6g}", v));
}

std::string format_mev(double v) { return fmt::format("{:.2f}", round_mev(v)); }

std::string format_sig6(double v) { return fmt::format("{:.6g}", round_sig6(v)); }

std::string fit_result_json(const FitResult& r) {
  json rows = json::array();
  for (const auto& p : r.per_particle) {
    rows.push_back({{"name", p.name},
                    {"L", p.L},
                    {"M", p.M},
                    {"E_exp", round_mev(p.e_exp)},
                    {"E_th", round_mev(p.e_th)},
                    {"dE_percent", round_sig6(p.delta_percent)}});
  }
  const json j = {
      {"params",
       {{"alpha", round_sig6(r.params.alpha)},
        {"m0", round_mev(r.params.m0)},
        {"a0", round_mev(r.params.a0)},
        {"b0", round_mev(r.params.b0)}}},
      {"rms_percent", round_sig6(r.rms_percent)},
      {"mean_abs_percent", round_sig6(r.mean_abs_percent)},
      {"per_particle", rows},
      {"evals", r.evals},
      {"converged", r.converged},
  };
  return j.dump(2) + "\n";
}

std::string check_report_json(const CheckReport& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    items.push_back({{"name", i.name},
                     {"value", round_sig6(i.value)},
                     {"threshold", round_sig6(i.threshold)},
                     {"comparison", i.comparison == Comparison::less ? "<" : ">"},
                     {"passed", i.passed}});
  }
  const json j = {{"suite", r.suite}, {"passed", r.passed()}, {"items", items}};
  return j.dump(2) + "\n";
}

FitParams params_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("params: ") + e.what(), 0);
  }
  const json& p = j.contains("params") ? j.at("params") : j;
  try {
    return {p.at("alpha").get<double>(), p.at("m0").get<double>(), p.at("a0").get<double>(),
            p.at("b0").get<double>()};
  } catch (const json::exception& e) {
    throw DataError(std::string("params: ") + e.what(), 0);
  }
}

std::string table_csv(std::span<const ParticleFit> rows) {
  std::string out = "name,L,M,E_exp,E_th,dE_percent\n";
  for (const auto& r : rows) {
    const bool quote = r.name.find_first_of(",\"") != std::string::npos;
    std::string name = r.name;
    if (quote) {
      std::string q = "\"";
      for (char c : name) {
        q += c;
        if (c == '"') q += '"';
      }
      name = q + "\"";
    }
    out += fmt::format("{},{},{},{},{},{}\n", name, r.L, r.M, format_mev(r.e_exp),
                       format_mev(r.e_th), format_sig6(r.delta_percent));
  }
  return out;
}

std::string plot_tsv(const FitParams& p, std::span<const ParticleRecord> records,
                     unsigned l_min, unsigned l_max) {
  std::string out = "series\tname\tL\tM\tmass_mev\n";
  for (unsigned L = l_min; L <= l_max; ++L) {
    for (unsigned M = 0; M <= L; ++M) {
      out += fmt::format("theory L={}\t\t{}\t{}\t{}\n", L, L, M,
                         format_mev(mass(p, {L, static_cast<int>(M)})));
    }
  }
  for (const auto& r : records) {
    if (r.L < l_min || r.L > l_max) continue;
    out += fmt::format("experiment\t{}\t{}\t{}\t{}\n", r.name, r.L, r.M, format_mev(r.mass_exp));
  }
  return out;
}

std::string predictions_tsv(std::span<const Prediction> rows) {
  std::string out = "L\tM\tmass_mev\n";
  for (const auto& r : rows) {
    out += fmt::format("{}\t{}\t{}\n", r.mult.L, r.mult.M, format_mev(r.mass));
  }
  return out;
}

}  // namespace fraczee
