#pragma once

#include <vector>

#include "polarprior/csv.hpp"
#include "polarprior/hmc.hpp"
#include "polarprior/rng.hpp"

namespace polarprior {

struct Dyad {
    Eigen::Index i;
    Eigen::Index j;
};

/// Symmetric binary network with missing entries (NaN). The diagonal is ignored.
class NetworkData {
public:
    /// Validates entries in {0, 1, NaN} and symmetry of observed pairs.
    explicit NetworkData(Matrix adjacency);
    static NetworkData from_csv(const CsvMatrix& csv);

    const Matrix& adjacency() const noexcept { return y_; }
    Eigen::Index size() const noexcept { return y_.rows(); }
    bool observed(Eigen::Index i, Eigen::Index j) const { return !std::isnan(y_(i, j)); }
    /// Observed pairs with i < j.
    std::vector<Dyad> observed_dyads() const;
    /// Copy with the listed dyads (both orientations) set missing.
    NetworkData with_missing(const std::vector<Dyad>& dyads) const;

private:
    Matrix y_;
};

enum class EigenPrior {
    Sparse,   // z | theta, ell ~ Normal(0, theta / ell), theta ~ Beta(ell/2, (1 - ell)/2)
    Uniform,  // z ~ Normal(0, 1): uniform prior on Q
};

enum class Parameterization {
    Centered,     // sample z directly
    NonCentered,  // sample w ~ Normal(0, 1) with z = w * sqrt(theta / ell)
};

struct EigenmodelOptions {
    Eigen::Index k = 2;
    EigenPrior prior = EigenPrior::Sparse;
    Parameterization parameterization = Parameterization::NonCentered;
};

inline constexpr double kEllLower = 0.001;
inline constexpr double kEllUpper = 0.999;

/// Posterior of the probit network eigenmodel after polar expansion:
/// pi_ij = Phi(c + (Q Lambda Q^T)_ij) with Q = Q_Z, over observed dyads i < j.
/// Blocks: c, lambda (k), z or w (p x k), and for the sparse prior
/// theta (p x k, in (0, 1)) and ell (in (0.001, 0.999)).
class Eigenmodel {
public:
    Eigenmodel(NetworkData data, EigenmodelOptions options);

    const ParameterLayout& layout() const noexcept { return layout_; }
    const EigenmodelOptions& options() const noexcept { return options_; }
    const NetworkData& data() const noexcept { return data_; }

    double logpost(const Vector& u, Vector* grad) const;
    /// log likelihood part only, as a function of (c, lambda, Q).
    double loglik(double c, const Vector& lambda, const Matrix& q) const;
    /// Z on the expansion scale for an unconstrained vector.
    Matrix z_matrix(const Vector& u) const;
    /// Unconstrained vector for the given natural parameters. `theta` and
    /// `ell` are ignored under the uniform prior.
    Vector pack(double c, const Vector& lambda, const Matrix& z, const Matrix& theta, double ell) const;

    /// Starting point from the leading eigenpairs (by magnitude) of the
    /// probit-linearized adjacency matrix, with theta = 1/2 and ell = 1/2.
    Vector spectral_start() const;

    /// Posterior bundle; derived quantities are the entries of Q_Z named q[i,j].
    /// Chains start at spectral_start() plus N(0, 0.1^2) jitter per coordinate.
    ModelPosterior posterior() const;

private:
    NetworkData data_;
    EigenmodelOptions options_;
    ParameterLayout layout_;
    std::vector<Dyad> dyads_;
    std::vector<double> labels_;
};

/// Convenience wrapper with the sparse prior and centered z.
double eigenmodel_logpost(const Vector& u, const NetworkData& data, Eigen::Index k, Vector* grad);

/// Posterior mean of Phi(c + (Q Lambda Q^T)_ij) over all draws.
std::vector<double> eigenmodel_predict(const ChainOutput& chain, Eigen::Index p, Eigen::Index k,
                                       const std::vector<Dyad>& dyads);

/// Elementwise posterior median of Q Lambda Q^T.
Matrix eigenmodel_median_qlq(const ChainOutput& chain, Eigen::Index p, Eigen::Index k);

struct SimulatedNetwork {
    NetworkData data;
    Matrix q;
    Vector lambda;
    double c;
    double ell;
    Matrix probabilities;  // Phi(c + Q Lambda Q^T), zero diagonal
};

/// Q from the sparse prior with the given ell, then y_ij ~ Bernoulli(pi_ij).
SimulatedNetwork simulate_network(Eigen::Index p, const Vector& lambda, double c, double ell, Rng& rng);

}  // namespace polarprior
