#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fraczee {

struct NelderMeadOptions {
  unsigned max_evals = 20000;
  // Converged once every vertex lies within `tol` (max-norm) of the best one.
  double tol = 1e-9;
  // Offsets of the initial simplex along each coordinate.
  std::vector<double> initial_step;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  unsigned evals = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

// Downhill simplex with dimension-adaptive coefficients (Gao & Han). Non-finite
// objective values are treated as +infinity.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts);

}  // namespace fraczee
