#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "polarprior/priors.hpp"

namespace polarprior {

struct CoupledIdentity {
    double lhs;  // ||sqrt(p) Q_X - X||_F^2 computed directly
    double rhs;  // p (k - 2 Tr(S_p^{1/2}) + Tr(S_p)), S_p = X^T X / p
};

CoupledIdentity coupled_frobenius_identity(const Matrix& x);

/// Exact 1-D empirical W2 via sorted pairing.
double w2_1d(std::vector<double> a, std::vector<double> b);

/// Exact empirical W2 between two equal-size point clouds in R^m (rows are
/// points), by solving the assignment problem.
double w2_empirical(const Matrix& a, const Matrix& b);

/// Minimum-cost perfect matching on a square cost matrix; returns the column
/// assigned to each row.
std::vector<Eigen::Index> solve_assignment(const Matrix& cost);

/// Recipe for the prior at a given p: entry law plus an optional stationary
/// correlation family (identity when absent).
struct PriorTemplate {
    EntryLaw entry_law = StandardNormal{};
    std::optional<CorrelationSpec> correlation;

    StructuredPriorSpec at(Eigen::Index p, Eigen::Index k) const;
};

using EntryIndex = std::pair<Eigen::Index, Eigen::Index>;

struct WassersteinSamples {
    Matrix x;        // replicates x m
    Matrix q_scaled; // replicates x m, entries of sqrt(p) Q_X
};

struct WassersteinReport {
    std::vector<Eigen::Index> p_grid;
    Eigen::Index k = 0;
    std::vector<EntryIndex> entries;
    std::size_t replicates = 0;
    std::uint64_t seed = 0;
    Matrix estimates;             // grid x m, per-entry 1-D W2
    Matrix mc_se;                 // grid x m, delta-method standard errors
    Vector coupled_bound;         // grid, sqrt(mean_r sum_e (sqrt(p) Q_e - X_e)^2)
    std::vector<WassersteinSamples> samples;  // filled only when requested

    /// W2 for entry e decreases along the grid, where an increase smaller than
    /// 2 combined standard errors is tolerated.
    bool decreasing_within_se(std::size_t entry = 0, double n_se = 2.0) const;
};

/// Replicate r at grid position g draws from make_rng(split_seed(seed, g), r).
WassersteinReport wasserstein_experiment(const PriorTemplate& prior, const std::vector<Eigen::Index>& p_grid, Eigen::Index k,
                                         const std::vector<EntryIndex>& entries, std::size_t replicates, std::uint64_t seed,
                                         bool keep_samples = false);

void write_report_text(std::ostream& out, const WassersteinReport& report);
void write_report_csv(std::ostream& out, const WassersteinReport& report);

struct RenormalizedCovariance {
    Matrix a_k;
    double c_omega;
};

/// A_k = (Z^T Omega Z - p I) / sqrt(k p c_Omega(p)).
RenormalizedCovariance renormalized_covariance(const Matrix& z, const CorrelationMatrix& omega);

double semicircle_cdf(double x);
/// Kolmogorov distance between the empirical law of `eigs` and the semicircle law on [-2, 2].
double semicircle_distance(std::vector<double> eigs);

/// ||X^T X / p - I||_2 / sqrt(c_Omega k / p).
double operator_norm_ratio(const Matrix& x, double c_omega);

/// ||Q_{L X R} - L Q_X R||_F for orthogonal L (p x p) and R (k x k).
double invariance_check(const Matrix& x, const Matrix& l, const Matrix& r);

/// Strict sign changes between consecutive entries; zero counts as positive.
std::size_t count_zero_crossings(const Vector& v);

/// Draws Z ~ N(0, I) (p x k), forms A_k with the given Omega and returns the
/// semicircle distance of its eigenvalues.
double semicircle_trial(const CorrelationMatrix& omega, Eigen::Index k, std::uint64_t seed);

/// Operator-norm ratios for `replicates` normal draws X = Omega^{1/2} Z.
std::vector<double> operator_norm_trials(const CorrelationMatrix& omega, Eigen::Index k, std::size_t replicates,
                                         std::uint64_t seed);

/// Zero crossings of `replicates` Gaussian-process draws on `points` grid
/// nodes with correlation `spec`.
std::vector<std::size_t> zero_crossing_trials(const CorrelationSpec& spec, Eigen::Index points, std::size_t replicates,
                                              std::uint64_t seed);

}  // namespace polarprior
