#include "fraczee/fit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <random>
#include <string_view>
#include <thread>

#include "fraczee/error.hpp"
#include "fraczee/nelder_mead.hpp"

namespace fraczee {

namespace {

// Optimiser coordinates: alpha as is, masses in units of 10 GeV.
constexpr std::array<double, 4> kScale{1.0, 1e4, 1e4, 1e4};
constexpr std::array<double, 4> kInitialStep{0.05, 0.2, 0.2, 0.2};
constexpr unsigned kMaxRestarts = 8;

FitParams from_scaled(std::span<const double> u) {
  return {u[0] * kScale[0], u[1] * kScale[1], u[2] * kScale[2], u[3] * kScale[3]};
}

std::vector<double> to_scaled(const FitParams& p) {
  return {p.alpha / kScale[0], p.m0 / kScale[1], p.a0 / kScale[2], p.b0 / kScale[3]};
}

double percent_dev(const FitParams& p, const ParticleRecord& r) {
  const double e = mass(p, Multiplet{r.L, static_cast<int>(r.M)});
  return 100.0 * (e - r.mass_exp) / r.mass_exp;
}

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct StartOutcome {
  FitParams params;
  double value = std::numeric_limits<double>::infinity();
  unsigned evals = 0;
  bool converged = false;
};

StartOutcome run_start(const FitParams& start, std::span<const ParticleRecord> records,
                       const FitConfig& cfg) {
  const Objective f = [&](std::span<const double> u) {
    const FitParams p = from_scaled(u);
    if (!(p.alpha > 0.0 && p.alpha <= 1.0)) {
      return std::numeric_limits<double>::infinity();
    }
    return objective(p, records);
  };
  NelderMeadOptions opts;
  opts.tol = cfg.tol;
  opts.initial_step.assign(kInitialStep.begin(), kInitialStep.end());

  StartOutcome out;
  std::vector<double> x = to_scaled(start);
  unsigned budget = cfg.max_evals;
  for (unsigned restart = 0; restart <= kMaxRestarts && budget > 0; ++restart) {
    opts.max_evals = budget;
    const NelderMeadResult r = nelder_mead(f, x, opts);
    out.evals += r.evals;
    budget = r.evals >= budget ? 0 : budget - r.evals;
    const bool improved = r.fx < out.value - 1e-12 * (1.0 + std::abs(out.value)) ||
                          !std::isfinite(out.value);
    out.converged = r.converged;
    if (r.fx <= out.value) {
      out.value = r.fx;
      x = r.x;
    }
    if (!r.converged || !improved) {
      break;
    }
  }
  out.params = from_scaled(x);
  return out;
}

}  // namespace

void validate(const FitConfig& cfg) {
  if (cfg.starts == 0) throw DomainError("fit: starts must be at least 1");
  if (cfg.max_evals == 0) throw DomainError("fit: max_evals must be at least 1");
  if (!(cfg.tol > 0.0)) throw DomainError("fit: tol must be positive");
  if (cfg.l_range && cfg.l_range->first > cfg.l_range->second) {
    throw DomainError("fit: l-min exceeds l-max");
  }
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("FRACZEE_SEED");
  if (env == nullptr) return fallback;
  const std::string_view s(env);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return fallback;
  return v;
}

std::vector<ParticleRecord> select_records(std::span<const ParticleRecord> records,
                                           const FitConfig& cfg) {
  std::vector<ParticleRecord> out;
  for (const auto& r : records) {
    if (!cfg.include_groups.contains(r.group)) continue;
    if (cfg.l_range && (r.L < cfg.l_range->first || r.L > cfg.l_range->second)) continue;
    out.push_back(r);
  }
  return out;
}

double objective(const FitParams& p, std::span<const ParticleRecord> records) {
  if (records.empty()) throw FitError("objective: empty record list");
  double sum = 0.0;
  for (const auto& r : records) {
    const double d = percent_dev(p, r);
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(records.size()));
}

double mean_abs_percent(const FitParams& p, std::span<const ParticleRecord> records) {
  if (records.empty()) throw FitError("mean_abs_percent: empty record list");
  double sum = 0.0;
  for (const auto& r : records) sum += std::abs(percent_dev(p, r));
  return sum / static_cast<double>(records.size());
}

std::vector<ParticleFit> evaluate(const FitParams& p, std::span<const ParticleRecord> records) {
  std::vector<ParticleFit> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    const double e = mass(p, Multiplet{r.L, static_cast<int>(r.M)});
    out.push_back({r.name, r.L, r.M, r.mass_exp, e, 100.0 * (e - r.mass_exp) / r.mass_exp});
  }
  return out;
}

FitResult assess(const FitParams& p, std::span<const ParticleRecord> records) {
  FitResult res;
  res.params = p;
  res.rms_percent = objective(p, records);
  res.mean_abs_percent = mean_abs_percent(p, records);
  res.per_particle = evaluate(p, records);
  res.converged = true;
  return res;
}

FitResult fit(std::span<const ParticleRecord> records, const FitConfig& cfg) {
  validate(cfg);
  const std::vector<ParticleRecord> data = select_records(records, cfg);
  if (data.size() < 5) {
    throw FitError("fit: need at least 5 records, got " + std::to_string(data.size()));
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<FitParams> starts(cfg.starts);
  for (auto& s : starts) {
    s.alpha = 1.0 - 0.99 * unit_draw(rng);
    s.m0 = -30000.0 * unit_draw(rng);
    s.a0 = 30000.0 * unit_draw(rng);
    s.b0 = 30000.0 * unit_draw(rng);
  }

  std::vector<StartOutcome> outcomes(starts.size());
  std::vector<std::exception_ptr> failures(starts.size());
  unsigned nthreads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  nthreads = std::clamp<unsigned>(nthreads, 1, static_cast<unsigned>(starts.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < starts.size(); i += nthreads) {
          try {
            outcomes[i] = run_start(starts[i], data, cfg);
          } catch (...) {
            failures[i] = std::current_exception();
          }
        }
      });
    }
  }

  for (const auto& e : failures) {
    if (e) std::rethrow_exception(e);
  }

  std::optional<std::size_t> best;
  unsigned evals = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    evals += outcomes[i].evals;
    if (!outcomes[i].converged) continue;
    if (!best || outcomes[i].value < outcomes[*best].value) best = i;
  }
  if (!best) {
    throw FitError("fit: no start converged within " + std::to_string(cfg.max_evals) +
                   " evaluations");
  }

  FitResult res = assess(outcomes[*best].params, data);
  res.evals = evals;
  res.converged = true;
  res.best_start = static_cast<unsigned>(*best);
  return res;
}

std::vector<Prediction> predict(const FitParams& p, std::span<const Multiplet> mults) {
  std::vector<Prediction> out;
  out.reserve(mults.size());
  for (const auto& m : mults) out.push_back({m, mass(p, m)});
  return out;
}

std::vector<Multiplet> multiplets(unsigned l_min, unsigned l_max) {
  std::vector<Multiplet> out;
  for (unsigned L = l_min; L <= l_max; ++L) {
    for (unsigned M = 0; M <= L; ++M) out.push_back({L, static_cast<int>(M)});
  }
  return out;
}

}  // namespace fraczee
