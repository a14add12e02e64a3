#pragma once

#include <cstdint>

#include "polarprior/correlation.hpp"
#include "polarprior/hmc.hpp"
#include "polarprior/models/utils.hpp"
#include "polarprior/rng.hpp"

namespace polarprior {

/// Hyperparameters: 1/sigma^2 ~ Gamma(nu/2, rate nu s2 / 2),
/// d_i ~ Normal(0, tau^2) truncated to d_i > 0, rho ~ InverseGamma(alpha, beta).
struct SvdHyper {
    double nu_err = 2.0;
    double s2 = 1.0;
    double tau = 1.0;
    double alpha = 3.0;
    double beta = 2.0;
    double spacing = 2.0;  // grid step for Omega_ij = C_SE(spacing |i - j|)

    void validate() const;
    /// nu = 2, s2 = var(Y)/4, tau = ||Y||_F, rho prior from the mean and sd.
    static SvdHyper defaults_for(const Matrix& y_centered, double rho_mean, double rho_sd);
};

/// Y = U D V^T + sigma E with U = Q(x_u), V = Q(x_v).
/// Centered: blocks x_u (n x k), x_v (p x k), d, sigma2, rho; x_v has the
/// matrix-normal N(0, Omega(rho), I) expansion density.
/// NonCentered: x_v = Omega(rho)^{1/2} w_v with w_v ~ N(0, I); the block is
/// named w_v. Both target the same posterior for (U, D, V, sigma2, rho).
class SvdModel {
public:
    enum class Form { Centered, NonCentered };

    SvdModel(Matrix y_centered, Eigen::Index k, SvdHyper hyper, Form form = Form::Centered);

    const ParameterLayout& layout() const noexcept { return layout_; }
    const Matrix& data() const noexcept { return y_; }
    Eigen::Index k() const noexcept { return k_; }
    Form form() const noexcept { return form_; }

    double logpost(const Vector& u, Vector* grad) const;
    /// Gaussian log likelihood alone.
    double loglik(const Matrix& u_mat, const Vector& d, const Matrix& v_mat, double sigma2) const;
    /// (U, V) for an unconstrained vector.
    std::pair<Matrix, Matrix> factors(const Vector& u) const;

    /// Starting point from the truncated SVD of Y with rho at its prior mean.
    /// The non-centered w_v is a ridge-regularized preimage of the singular vectors.
    Vector spectral_start() const;

    /// Derived quantities are U (n x k) then V (p x k), column-major, named u[i,j] and v[i,j].
    /// Chains start at spectral_start() plus N(0, 0.1^2) jitter per coordinate.
    ModelPosterior posterior() const;

    static constexpr double kJitter = 1e-8;

private:
    Matrix y_;
    Eigen::Index k_;
    SvdHyper hyper_;
    Form form_;
    ParameterLayout layout_;
    Matrix lag2_;  // (spacing |i - j|)^2
    std::uint64_t id_;  // key for the per-thread Omega(rho) factor cache
};

double svd_model_logpost(const Vector& u, const Matrix& y_centered, Eigen::Index k, const SvdHyper& hyper, Vector* grad);

/// First k right singular vectors of the posterior mean of U D V^T; each
/// column is signed so its largest-magnitude entry is positive (first index wins ties).
SemiOrthogonalMatrix point_estimate_v(const ChainOutput& chain, Eigen::Index n, Eigen::Index p, Eigen::Index k);

/// Largest principal angle (radians) between the column spaces of a and b.
double principal_angle(const Matrix& a, const Matrix& b);

struct SimulatedSvd {
    Matrix y;        // centered
    Matrix u;
    Matrix v;
    Vector d;
    double sigma;
    double rho;
};

/// V = Q of k squared-exponential GP curves with length-scale rho on the grid
/// spacing * {0, .., p-1}; U uniform; sigma set so ||U D V^T||_F / (sigma sqrt(np)) = snr.
SimulatedSvd simulate_smooth_svd(Eigen::Index n, Eigen::Index p, const Vector& d, double rho, double spacing, double snr,
                                 Rng& rng);

}  // namespace polarprior
