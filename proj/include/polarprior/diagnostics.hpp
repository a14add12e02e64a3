#pragma once

#include <vector>

#include "polarprior/stiefel.hpp"

namespace polarprior {

/// Minimum draws per chain accepted by the diagnostics.
inline constexpr Eigen::Index kMinDiagnosticDraws = 100;

/// Split-R-hat of one scalar quantity; `chains[c]` holds chain c's draws.
/// NaN when every split half is constant (within-chain variance zero).
double split_rhat(const std::vector<Vector>& chains);

/// Effective sample size from the multi-chain autocorrelation with Geyer's
/// initial monotone sequence. A constant quantity reports the total draw count.
double effective_sample_size(const std::vector<Vector>& chains);

struct DiagnosticSummary {
    Vector ess;
    Vector split_rhat;
    double accept_mean = 0.0;
};

/// `draws[c]` is a draws x dim matrix for chain c. Requires >= 2 chains with
/// at least 100 draws each (TooFewDraws otherwise).
DiagnosticSummary diagnose(const std::vector<Matrix>& draws, const std::vector<double>& accept_rates = {});

}  // namespace polarprior
