#include "fraczee/spectrum.hpp"

#include <cstdlib>

#include <fmt/format.h>

#include "fraczee/error.hpp"
#include "fraczee/specfun.hpp"

namespace fraczee {

void validate(const Multiplet& m) {
  if (static_cast<unsigned>(std::abs(m.M)) > m.L) {
    throw DomainError(fmt::format("multiplet: |M| = {} exceeds L = {}", std::abs(m.M), m.L));
  }
  if (m.sign != 1 && m.sign != -1) {
    throw DomainError("multiplet: sign must be +1 or -1");
  }
}

double casimir_L2(double alpha, unsigned L) {
  const double l = static_cast<double>(L);
  return gamma(1.0 + (l + 1.0) * alpha) * rgamma(1.0 + (l - 1.0) * alpha);
}

double casimir_Lz(double alpha, int M, int sign) {
  const double m = static_cast<double>(std::abs(M));
  return static_cast<double>(sign) * gamma(1.0 + m * alpha) * rgamma(1.0 + (m - 1.0) * alpha);
}

double mass(const FitParams& p, const Multiplet& mult) {
  validate(mult);
  return p.m0 + p.a0 * casimir_L2(p.alpha, mult.L) + p.b0 * casimir_Lz(p.alpha, mult.M, mult.sign);
}

std::vector<std::pair<Multiplet, double>> spectrum(const FitParams& p,
                                                   const std::vector<Multiplet>& mults) {
  std::vector<std::pair<Multiplet, double>> out;
  out.reserve(mults.size());
  for (const auto& m : mults) {
    out.emplace_back(m, mass(p, m));
  }
  return out;
}

}  // namespace fraczee
