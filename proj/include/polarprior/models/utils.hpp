#pragma once

#include <string>
#include <vector>

#include "polarprior/hmc.hpp"
#include "polarprior/stiefel.hpp"

namespace polarprior {

/// Mann-Whitney AUC with ties counted as one half. Labels must be 0 or 1.
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

Matrix center_columns(const Matrix& y);

struct InverseGamma {
    double alpha;  // shape
    double beta;   // scale (rate of the reciprocal)
};

/// Shape and scale giving an inverse gamma with the requested mean and sd.
InverseGamma invgamma_from_mean_sd(double mean, double sd);
double invgamma_logpdf(double x, const InverseGamma& ig);

/// Column index of `name` in chain.names (or derived names when `derived`).
Eigen::Index column_of(const ChainOutput& chain, const std::string& name, bool derived = false);

/// Sample quantile with linear interpolation between order statistics.
double quantile(std::vector<double> values, double prob);

}  // namespace polarprior
