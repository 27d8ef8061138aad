#include "fraczee/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fraczee/error.hpp"

namespace fraczee {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// sin(pi x) with the argument reduced first so large |x| keeps its accuracy.
double sin_pi(double x) {
  const double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  return std::sin(std::numbers::pi * r);
}

double lanczos(double x) {
  const double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  // t^(z+1/2) is split in two halves so it stays finite up to the double
  // range of Gamma itself.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * sum;
}

// Gamma(n) = (n-1)! for positive integers, exact up to 23.
constexpr double kMaxFactorialArg = 171.0;

double factorial_of(double n) {
  double f = 1.0;
  for (double k = 2.0; k < n; k += 1.0) {
    f *= k;
  }
  return f;
}

}  // namespace

bool is_gamma_pole(double x) noexcept { return x <= 0.0 && x == std::floor(x); }

double gamma(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("gamma: non-finite argument");
  }
  if (is_gamma_pole(x)) {
    throw PoleError("gamma: pole at " + std::to_string(x));
  }
  if (x < 0.5) {
    return std::numbers::pi / (sin_pi(x) * lanczos(1.0 - x));
  }
  if (x == std::floor(x) && x <= kMaxFactorialArg) {
    return factorial_of(x);
  }
  return lanczos(x);
}

double rgamma(double x) {
  if (is_gamma_pole(x)) {
    return 0.0;
  }
  if (x < 0.5) {
    // Reflection written for 1/Gamma directly; avoids the division blowing
    // up next to the poles.
    return sin_pi(x) * lanczos(1.0 - x) / std::numbers::pi;
  }
  if (x == std::floor(x) && x <= kMaxFactorialArg) {
    return 1.0 / factorial_of(x);
  }
  return 1.0 / lanczos(x);
}

double frac_binomial(double alpha, unsigned k) {
  if (k == 0) {
    return 1.0;
  }
  const double kk = static_cast<double>(k);
  const double denom = rgamma(1.0 + alpha - kk);
  if (denom == 0.0) {
    return 0.0;
  }
  return gamma(1.0 + alpha) * rgamma(1.0 + kk) * denom;
}

}  // namespace fraczee
