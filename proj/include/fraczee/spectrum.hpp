#pragma once

#include <utility>
#include <vector>

namespace fraczee {

// Parameters of the fractional Zeeman level formula, masses in MeV.
struct FitParams {
  double alpha = 1.0;
  double m0 = 0.0;
  double a0 = 0.0;
  double b0 = 0.0;

  friend bool operator==(const FitParams&, const FitParams&) = default;
};

// Published optimum for the baryon spectrum.
inline constexpr FitParams kReferenceParams{0.112, -17171.6, 10971.8, 8064.6};

struct Multiplet {
  unsigned L = 0;
  int M = 0;
  int sign = +1;

  friend bool operator==(const Multiplet&, const Multiplet&) = default;
};

// Validates |M| <= L and sign in {-1, +1}; throws DomainError otherwise.
void validate(const Multiplet& m);

// Gamma(1 + (L+1) alpha) / Gamma(1 + (L-1) alpha); L(L+1) at alpha = 1.
double casimir_L2(double alpha, unsigned L);

// sign * Gamma(1 + |M| alpha) / Gamma(1 + (|M|-1) alpha); sign*|M| at alpha = 1,
// sign / Gamma(1 - alpha) at M = 0.
double casimir_Lz(double alpha, int M, int sign = +1);

// m0 + a0 casimir_L2 + b0 casimir_Lz.
double mass(const FitParams& p, const Multiplet& mult);

std::vector<std::pair<Multiplet, double>> spectrum(const FitParams& p,
                                                   const std::vector<Multiplet>& mults);

}  // namespace fraczee
