#include "fraczee/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fraczee/error.hpp"

namespace fraczee {

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  if (n == 0 || opts.initial_step.size() != n) {
    throw DomainError("nelder_mead: initial_step must match the dimension");
  }
  const double dn = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / dn;
  const double contract = 0.75 - 1.0 / (2.0 * dn);
  const double shrink = 1.0 - 1.0 / dn;

  NelderMeadResult res;
  auto eval = [&](const std::vector<double>& x) {
    ++res.evals;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] += opts.initial_step[i];
  }
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    fv[i] = eval(simplex[i]);
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  auto along = [&](std::vector<double>& out, double t) {
    // out = centroid + t * (centroid - worst)
    const auto& worst = simplex[order[n]];
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = centroid[j] + t * (centroid[j] - worst[j]);
    }
  };

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const auto& best = simplex[order[0]];

    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        diameter = std::max(diameter, std::abs(simplex[order[i]][j] - best[j]));
      }
    }
    if (diameter < opts.tol) {
      res.converged = true;
      break;
    }
    if (res.evals >= opts.max_evals) {
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        centroid[j] += simplex[order[i]][j] / dn;
      }
    }
    const std::size_t w = order[n];
    const double f_best = fv[order[0]];
    const double f_second = fv[order[n - 1]];
    const double f_worst = fv[w];

    along(xr, reflect);
    const double fr = eval(xr);
    if (fr < f_best) {
      along(xe, reflect * expand);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[w] = xe;
        fv[w] = fe;
      } else {
        simplex[w] = xr;
        fv[w] = fr;
      }
      continue;
    }
    if (fr < f_second) {
      simplex[w] = xr;
      fv[w] = fr;
      continue;
    }
    if (fr < f_worst) {
      along(xc, reflect * contract);  // outside contraction
      const double fc = eval(xc);
      if (fc <= fr) {
        simplex[w] = xc;
        fv[w] = fc;
        continue;
      }
    } else {
      along(xc, -contract);  // inside contraction
      const double fc = eval(xc);
      if (fc < f_worst) {
        simplex[w] = xc;
        fv[w] = fc;
        continue;
      }
    }
    const auto anchor = simplex[order[0]];
    for (std::size_t i = 1; i <= n; ++i) {
      auto& v = simplex[order[i]];
      for (std::size_t j = 0; j < n; ++j) {
        v[j] = anchor[j] + shrink * (v[j] - anchor[j]);
      }
      fv[order[i]] = eval(v);
    }
  }

  const auto best_it = std::min_element(fv.begin(), fv.end());
  res.x = simplex[static_cast<std::size_t>(best_it - fv.begin())];
  res.fx = *best_it;
  return res;
}

}  // namespace fraczee
