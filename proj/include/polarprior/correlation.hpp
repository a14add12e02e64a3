#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "polarprior/stiefel.hpp"

namespace polarprior {

enum class CorrelationFamily { Identity, Power, SquaredExponential, Matern, Custom };

std::string to_string(CorrelationFamily family);
CorrelationFamily parse_correlation_family(const std::string& name);

/// Stationary correlation on a 1-D grid: Omega_ij = C(spacing * |i - j|),
/// optionally truncated to zero beyond `bandwidth` grid steps.
struct CorrelationSpec {
    CorrelationFamily family = CorrelationFamily::Identity;
    double rho = 1.0;
    double nu = 0.5;                 // Matern smoothness
    std::optional<int> bandwidth;    // banded variant when set
    double spacing = 1.0;
};

/// Matern correlation 2^(1-nu)/Gamma(nu) (sqrt(2 nu) d/rho)^nu K_nu(sqrt(2 nu) d/rho).
double matern_corr(double d, double rho, double nu);

/// C(d) for the family in `spec` (spacing and bandwidth not applied).
double correlation_function(const CorrelationSpec& spec, double d);

/// Symmetric unit-diagonal p x p correlation matrix with a lazily computed,
/// shared symmetric square root.
class CorrelationMatrix {
public:
    static constexpr double kPsdTolerance = 1e-8;
    static constexpr double kBandedPsdTolerance = 1e-6;

    static CorrelationMatrix identity(Eigen::Index p);
    static CorrelationMatrix build(const CorrelationSpec& spec, Eigen::Index p);
    /// Validates unit diagonal, symmetry and PSD (min eigenvalue >= -1e-8).
    static CorrelationMatrix from_entries(Matrix entries);

    /// Dense entries. The identity is stored implicitly until first requested.
    const Matrix& matrix() const;
    const CorrelationSpec& spec() const noexcept { return spec_; }
    Eigen::Index size() const noexcept { return p_; }
    bool is_identity() const noexcept { return spec_.family == CorrelationFamily::Identity && !spec_.bandwidth; }

    /// Symmetric square root; eigenvalues in [-1e-8 lambda_max, 0) are
    /// treated as roundoff and clamped to zero. Computed once per matrix
    /// (copies share the result); safe to call concurrently.
    const Matrix& sqrt() const;

    /// Tr(Omega^2) / p
    double c_omega() const;
    double spectral_norm() const;
    double min_eigenvalue() const;

private:
    CorrelationMatrix(Matrix entries, CorrelationSpec spec, Eigen::Index p);

    struct SqrtCache;
    Eigen::Index p_;
    bool implicit_;  // identity without stored entries
    Matrix entries_;
    CorrelationSpec spec_;
    std::shared_ptr<SqrtCache> cache_;
};

/// Dense row-major, header-free CSV.
void write_correlation_csv(std::ostream& out, const CorrelationMatrix& omega);
CorrelationMatrix read_correlation_csv(std::istream& in);

}  // namespace polarprior
