#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fraczee/dataset.hpp"
#include "fraczee/fit.hpp"
#include "fraczee/spectrum.hpp"
#include "fraczee/verify.hpp"

namespace fraczee {

// Output conventions: masses with two decimals, everything dimensionless with
// six significant digits.
double round_mev(double v);
double round_sig6(double v);
std::string format_mev(double v);
std::string format_sig6(double v);

std::string fit_result_json(const FitResult& r);
std::string check_report_json(const CheckReport& r);

// Reads {"params": {"alpha", "m0", "a0", "b0"}} as written by fit_result_json,
// or a bare params object. Throws DataError.
FitParams params_from_json(std::string_view text);

// name,L,M,E_exp,E_th,dE_percent
std::string table_csv(std::span<const ParticleFit> rows);

// series, name, L, M, mass_mev. One "theory L=n" series per L in [l_min, l_max]
// with M = 0..L, then the experimental points whose L is in range.
std::string plot_tsv(const FitParams& p, std::span<const ParticleRecord> records,
                     unsigned l_min, unsigned l_max);

// L, M, mass_mev
std::string predictions_tsv(std::span<const Prediction> rows);

}  // namespace fraczee
