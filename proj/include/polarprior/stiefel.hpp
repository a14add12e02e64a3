#pragma once

#include <Eigen/Dense>

namespace polarprior {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// p x k matrix with orthonormal columns (k <= p).
class SemiOrthogonalMatrix {
public:
    static constexpr double kTolerance = 1e-10;

    /// Validates p >= k >= 1 and max|Q^T Q - I| <= 1e-10; throws NotOrthogonal
    /// or DimensionMismatch otherwise.
    explicit SemiOrthogonalMatrix(Matrix entries);

    const Matrix& matrix() const noexcept { return q_; }
    Eigen::Index rows() const noexcept { return q_.rows(); }
    Eigen::Index cols() const noexcept { return q_.cols(); }
    double operator()(Eigen::Index i, Eigen::Index j) const { return q_(i, j); }

private:
    Matrix q_;
};

/// Symmetric positive-definite matrix. Symmetry is enforced on construction;
/// positive definiteness is checked by the spectral operations that need it.
class SpdMatrix {
public:
    static constexpr double kSymmetryTolerance = 1e-12;

    explicit SpdMatrix(Matrix entries);

    const Matrix& matrix() const noexcept { return s_; }
    Eigen::Index size() const noexcept { return s_.rows(); }

private:
    Matrix s_;
};

struct PolarFactors {
    SemiOrthogonalMatrix q;
    SpdMatrix s_sqrt;
};

/// Eigendecomposition s = V diag(values) V^T with values ascending.
struct SymmetricEigen {
    Vector values;
    Matrix vectors;
};

SymmetricEigen symmetric_eigen(const Matrix& s);

/// Throws NotPositiveDefinite unless the smallest eigenvalue exceeds
/// 1e-12 times the largest.
void require_positive_definite(const SymmetricEigen& eig);

SpdMatrix sqrt_spd(const SpdMatrix& s);
SpdMatrix inv_sqrt_spd(const SpdMatrix& s);

/// Directional derivative of s -> s^{-1/2} along symmetric e
/// (Daleckii-Krein divided differences on the eigenbasis).
Matrix frechet_inv_sqrt(const SpdMatrix& s, const Matrix& e);
Matrix frechet_inv_sqrt(const SymmetricEigen& eig, const Matrix& e);

/// Directional derivative of s -> s^{1/2} along symmetric e.
Matrix frechet_sqrt(const SymmetricEigen& eig, const Matrix& e);

/// Threshold on sigma_min / sigma_max below which x is treated as rank deficient.
inline constexpr double kRankTolerance = 1e-10;

/// Q_X = X (X^T X)^{-1/2} and (X^T X)^{1/2}, computed from a thin SVD.
PolarFactors polar_project(const Matrix& x);

/// Gradient of g(Q(X)) with respect to X given dg/dQ evaluated at Q(X).
Matrix polar_pullback_grad(const Matrix& x, const Matrix& grad_q);

/// Q(X) together with what is needed to pull gradients back through it;
/// shares one eigendecomposition of X^T X between value and derivative.
class PolarJet {
public:
    explicit PolarJet(const Matrix& x);

    const Matrix& q() const noexcept { return q_; }
    Matrix pullback(const Matrix& grad_q) const;

private:
    Matrix x_;
    SymmetricEigen eig_;
    Matrix inv_sqrt_;
    Matrix q_;
};

}  // namespace polarprior
