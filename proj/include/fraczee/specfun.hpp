#pragma once

namespace fraczee {

// Euler Gamma function. Lanczos (g = 7, 9 coefficients) with reflection below
// 0.5. Throws PoleError at 0, -1, -2, ...
double gamma(double x);

// 1 / Gamma(x), entire: exactly 0.0 at the non-positive integers.
double rgamma(double x);

// Generalized binomial Gamma(1+alpha) / (Gamma(1+k) Gamma(1+alpha-k)).
// Vanishes exactly where 1+alpha-k hits a pole.
double frac_binomial(double alpha, unsigned k);

// True when x is a non-positive integer (a pole of Gamma).
bool is_gamma_pole(double x) noexcept;

}  // namespace fraczee
