// fraczee: fractional derivatives, operator checks and the Zeeman mass fit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 domain error, 4 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fraczee/dataset.hpp"
#include "fraczee/error.hpp"
#include "fraczee/fit.hpp"
#include "fraczee/monomial.hpp"
#include "fraczee/report.hpp"
#include "fraczee/rl_numeric.hpp"
#include "fraczee/spectrum.hpp"
#include "fraczee/verify.hpp"

namespace fs = std::filesystem;
using namespace fraczee;

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kIo = 4 };

struct ParamFlags {
  FitParams p = kReferenceParams;
  std::string fit_json;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--alpha", p.alpha, "Fractional order alpha")->capture_default_str();
    cmd->add_option("--m0", p.m0, "Mass offset m0 [MeV]")->capture_default_str();
    cmd->add_option("--a0", p.a0, "L^2 coefficient a0 [MeV]")->capture_default_str();
    cmd->add_option("--b0", p.b0, "L_z coefficient b0 [MeV]")->capture_default_str();
    cmd->add_option("--fit", fit_json, "Take parameters from a fit JSON report");
  }

  FitParams resolve() const {
    if (fit_json.empty()) return p;
    std::ifstream in(fit_json);
    if (!in) throw IoError("cannot open " + fit_json);
    std::stringstream ss;
    ss << in.rdbuf();
    return params_from_json(ss.str());
  }
};

std::vector<ParticleRecord> load_data(const std::string& spec) {
  if (spec == "builtin") return builtin_table();
  return load_records(spec, format_for(spec));
}

std::set<Group> parse_groups(const std::vector<std::string>& names) {
  std::set<Group> out;
  for (const auto& n : names) {
    const auto g = group_from_string(n);
    if (!g) throw CLI::ValidationError("--groups", "unknown group '" + n + "'");
    out.insert(*g);
  }
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

// --config: "key = value" lines become --key=value right after the subcommand,
// so flags given on the command line come later and win.
std::vector<std::string> expand_config(std::vector<std::string> args, const CLI::App& app) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!path) return args;

  std::ifstream in(*path);
  if (!in) throw IoError("cannot open config " + *path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DataError("config: expected key = value", lineno);
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }

  for (std::size_t i = 0; i < args.size(); ++i) {
    const CLI::App* sub = nullptr;
    try {
      sub = const_cast<CLI::App&>(app).get_subcommand(args[i]);
    } catch (const CLI::OptionNotFound&) {
      continue;
    }
    std::vector<std::string> injected;
    for (const auto& [k, v] : entries) {
      if (sub->get_option_no_throw("--" + k) != nullptr) injected.push_back("--" + k + "=" + v);
    }
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(i) + 1, injected.begin(),
                injected.end());
    break;
  }
  return args;
}

int run_derive(const std::string& expr, const std::string& axis_name_str, double order,
               const std::string& at, int nodes) {
  const auto axis = axis_from_name(axis_name_str);
  if (!axis) throw CLI::ValidationError("--axis", "expected one of x, y, z, t");
  const PolyExpr f = parse_expr(expr);
  const PolyExpr d = rl_derive(f, *axis, order);
  std::cout << d.to_string() << "\n";
  if (at.empty()) return kOk;

  const Point point = parse_point(at);
  const double value = eval(d, point);
  std::cout << fmt::format("value: {:.10g}\n", value);
  if (order > 0.0 && order < 1.0) {
    if (!point.contains(*axis)) {
      throw DomainError(fmt::format("--at must give {}", axis_name(*axis)));
    }
    const auto slice = [&](double s) {
      Point q = point;
      q[*axis] = s;
      return eval(f, q);
    };
    const double q = rl_derivative_quad(slice, order, point.at(*axis), nodes);
    const double dev = value == 0.0 ? std::abs(q) : std::abs(q - value) / std::abs(value);
    std::cout << fmt::format("quad: {:.10g} (relative deviation {:.3g})\n", q, dev);
    if (!(dev < 1e-6)) return kVerifyFailed;
  }
  return kOk;
}

int run_verify(const std::string& suite, const std::string& out) {
  CheckReport r;
  if (suite == "quad") r = verify_quad();
  else if (suite == "zeeman-field") r = verify_zeeman_field();
  else if (suite == "connection") r = verify_connection();
  else if (suite == "commutators") r = verify_commutators();
  else if (suite == "spin-algebra") r = verify_spin_algebra();
  else r = verify_all();
  emit(out, check_report_json(r));
  for (const auto& i : r.items) {
    if (!i.passed) std::cerr << "FAIL " << i.name << " (" << i.value << ")\n";
  }
  return r.passed() ? kOk : kVerifyFailed;
}

struct FitFlags {
  std::string data = "builtin";
  std::vector<std::string> groups{"baryon"};
  unsigned l_min = 3;
  unsigned l_max = 9;
  bool all_l = false;
  unsigned starts = 32;
  std::uint64_t seed = 42;
  unsigned max_evals = 20000;
  double tol = 1e-9;
  std::string out;
};

int run_fit(const FitFlags& f, bool seed_given) {
  FitConfig cfg;
  cfg.include_groups = parse_groups(f.groups);
  cfg.l_range = f.all_l ? std::nullopt : std::optional{std::pair{f.l_min, f.l_max}};
  cfg.starts = f.starts;
  cfg.seed = seed_given ? f.seed : seed_from_env(f.seed);
  cfg.max_evals = f.max_evals;
  cfg.tol = f.tol;
  const auto records = load_data(f.data);
  const FitResult r = fit(records, cfg);
  emit(f.out, fit_result_json(r));
  std::cerr << fmt::format(
      "alpha={:.6g} m0={:.2f} a0={:.2f} b0={:.2f} rms={:.6g}% mean|dE|={:.6g}% on {} records\n",
      r.params.alpha, r.params.m0, r.params.a0, r.params.b0, r.rms_percent,
      r.mean_abs_percent, r.per_particle.size());
  return kOk;
}

Multiplet parse_mult(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    throw CLI::ValidationError("--mult", "expected L:M, got '" + s + "'");
  }
  try {
    const long L = std::stol(s.substr(0, colon));
    const long M = std::stol(s.substr(colon + 1));
    if (L < 0) throw DomainError("L must be non-negative");
    Multiplet m{static_cast<unsigned>(L), static_cast<int>(M)};
    validate(m);
    return m;
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--mult", "expected L:M, got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional calculus toolkit and fractional Zeeman mass fit", "fraczee"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.add_option("--config", "key = value file; command-line flags override it");

  // derive
  auto* derive = app.add_subcommand("derive", "Riemann-Liouville derivative of a polynomial");
  std::string d_expr, d_axis = "x", d_at;
  double d_order = 1.0;
  int d_nodes = kDefaultQuadNodes;
  derive->add_option("expr", d_expr, "Expression, e.g. \"x^2 - 3*x*y^0.5\"")->required();
  derive->add_option("--axis", d_axis)->capture_default_str();
  derive->add_option("--order", d_order)->capture_default_str();
  derive->add_option("--at", d_at, "Evaluation point, e.g. x=1,y=0.5");
  derive->add_option("--nodes", d_nodes, "Quadrature nodes for the cross-check")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Run an identity suite, print a JSON report");
  std::string v_suite, v_out;
  verify->add_option("suite", v_suite)
      ->required()
      ->check(CLI::IsMember({"quad", "zeeman-field", "connection", "commutators",
                             "spin-algebra", "all"}));
  verify->add_option("--out", v_out, "Write the report here instead of stdout");

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "Mass levels for all multiplets in an L range");
  ParamFlags s_params;
  unsigned s_lmin = 1, s_lmax = 9;
  s_params.add_to(spec);
  spec->add_option("--l-min", s_lmin)->capture_default_str();
  spec->add_option("--l-max", s_lmax)->capture_default_str();

  // fit
  auto* fitcmd = app.add_subcommand("fit", "Fit (alpha, m0, a0, b0) to particle masses");
  FitFlags ff;
  fitcmd->add_option("--data", ff.data, "builtin, or a .csv/.json file")->capture_default_str();
  fitcmd->add_option("--groups", ff.groups, "meson, baryon, theoretical")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->capture_default_str();
  fitcmd->add_option("--l-min", ff.l_min)->capture_default_str();
  fitcmd->add_option("--l-max", ff.l_max)->capture_default_str();
  fitcmd->add_flag("--all-l", ff.all_l, "Do not restrict L");
  fitcmd->add_option("--starts", ff.starts)->capture_default_str()->check(CLI::PositiveNumber);
  auto* seed_opt =
      fitcmd->add_option("--seed", ff.seed, "Default 42, or FRACZEE_SEED")->capture_default_str();
  fitcmd->add_option("--max-evals", ff.max_evals, "Per start")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  fitcmd->add_option("--tol", ff.tol, "Simplex diameter")->capture_default_str();
  fitcmd->add_option("--out", ff.out, "Write the JSON report here instead of stdout");

  // predict
  auto* pred = app.add_subcommand("predict", "Masses for the given multiplets");
  ParamFlags p_params;
  std::vector<std::string> p_mults;
  p_params.add_to(pred);
  pred->add_option("--mult", p_mults, "Multiplet L:M, repeatable")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  // report
  auto* rep = app.add_subcommand("report", "Write a comparison table and plot data");
  ParamFlags r_params;
  std::string r_data = "builtin", r_dir = ".";
  std::vector<std::string> r_groups{"meson", "baryon", "theoretical"};
  unsigned r_lmin = 1, r_lmax = 9;
  r_params.add_to(rep);
  rep->add_option("--data", r_data)->capture_default_str();
  rep->add_option("--groups", r_groups)
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->capture_default_str();
  rep->add_option("--l-min", r_lmin)->capture_default_str();
  rep->add_option("--l-max", r_lmax)->capture_default_str();
  rep->add_option("--out-dir", r_dir)->capture_default_str();

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args), app);
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (*derive) return run_derive(d_expr, d_axis, d_order, d_at, d_nodes);
    if (*verify) return run_verify(v_suite, v_out);
    if (*spec) {
      const auto mults = multiplets(s_lmin, s_lmax);
      std::cout << predictions_tsv(predict(s_params.resolve(), mults));
      return kOk;
    }
    if (*fitcmd) return run_fit(ff, seed_opt->count() > 0);
    if (*pred) {
      std::vector<Multiplet> mults;
      for (const auto& m : p_mults) mults.push_back(parse_mult(m));
      std::cout << predictions_tsv(predict(p_params.resolve(), mults));
      return kOk;
    }
    if (*rep) {
      const FitParams p = r_params.resolve();
      const auto groups = parse_groups(r_groups);
      std::vector<ParticleRecord> rows;
      for (const auto& r : load_data(r_data)) {
        if (groups.contains(r.group) && r.L >= r_lmin && r.L <= r_lmax) rows.push_back(r);
      }
      fs::create_directories(r_dir);
      write_file(fs::path(r_dir) / "table.csv", table_csv(evaluate(p, rows)));
      write_file(fs::path(r_dir) / "fig1.tsv", plot_tsv(p, rows, r_lmin, r_lmax));
      std::cout << "wrote " << (fs::path(r_dir) / "table.csv").string() << " and "
                << (fs::path(r_dir) / "fig1.tsv").string() << "\n";
      return kOk;
    }
    return kUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
}
