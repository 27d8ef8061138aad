#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fraczee/dataset.hpp"
#include "fraczee/spectrum.hpp"

namespace fraczee {

struct FitConfig {
  std::set<Group> include_groups{Group::baryon};
  std::optional<std::pair<unsigned, unsigned>> l_range{std::pair{3u, 9u}};
  unsigned starts = 32;
  std::uint64_t seed = 42;
  unsigned max_evals = 20000;  // per start
  double tol = 1e-9;           // simplex diameter in scaled coordinates
  unsigned threads = 0;        // 0: hardware concurrency
};

// Throws DomainError on starts == 0, max_evals == 0, tol <= 0 or an inverted L range.
void validate(const FitConfig& cfg);

// Seed from FRACZEE_SEED when set and parseable, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

struct ParticleFit {
  std::string name;
  unsigned L = 0;
  unsigned M = 0;
  double e_exp = 0.0;
  double e_th = 0.0;
  double delta_percent = 0.0;  // 100 (E_th - E_exp) / E_exp
};

struct FitResult {
  FitParams params;
  double rms_percent = 0.0;
  double mean_abs_percent = 0.0;
  std::vector<ParticleFit> per_particle;
  unsigned evals = 0;
  bool converged = false;
  unsigned best_start = 0;
};

std::vector<ParticleRecord> select_records(std::span<const ParticleRecord> records,
                                           const FitConfig& cfg);

// r.m.s. of the percent deviations. Throws FitError on an empty list.
double objective(const FitParams& p, std::span<const ParticleRecord> records);

// Mean of |percent deviation|. Throws FitError on an empty list.
double mean_abs_percent(const FitParams& p, std::span<const ParticleRecord> records);

std::vector<ParticleFit> evaluate(const FitParams& p, std::span<const ParticleRecord> records);

// Fits the records chosen by select_records(records, cfg). Needs at least five
// of them. Throws FitError when no start converges.
FitResult fit(std::span<const ParticleRecord> records, const FitConfig& cfg);

// Result for fixed parameters, no optimisation.
FitResult assess(const FitParams& p, std::span<const ParticleRecord> records);

struct Prediction {
  Multiplet mult;
  double mass = 0.0;
};

std::vector<Prediction> predict(const FitParams& p, std::span<const Multiplet> mults);

// All multiplets (L, M) with M = 0..L for L in [l_min, l_max].
std::vector<Multiplet> multiplets(unsigned l_min, unsigned l_max);

}  // namespace fraczee
