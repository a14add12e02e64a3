#pragma once

#include <functional>

#include "polarprior/correlation.hpp"
#include "polarprior/hmc.hpp"
#include "polarprior/stiefel.hpp"

namespace polarprior {

/// Value of a term and, when `grad` is non-null, its gradient with respect
/// to the matrix argument.
using MatrixTerm = std::function<double(const Matrix& arg, Matrix* grad)>;

struct ExpansionValue {
    double value;
    Matrix grad_x;
    Matrix q;
};

/// log p(y | Q_X) + log p(X): the likelihood is evaluated at Q_X and its
/// gradient pulled back through the polar map; the prior acts on X directly.
ExpansionValue polar_expand(const Matrix& x, const MatrixTerm& likelihood_in_q, const MatrixTerm& prior_in_x);

/// Matrix-normal N(0, Omega, I) log density and gradient -Omega^{-1} X,
/// including -(k/2) log|Omega| - (pk/2) log(2 pi).
double matrix_normal_logpdf(const Matrix& x, const CorrelationMatrix& omega, Matrix* grad);

/// Posterior over the p x k expansion matrix "x" with prior N(0, Omega, I)
/// and the given likelihood of Q; the derived quantities are the entries of
/// Q_X (column-major, named q[i,j]).
ModelPosterior polar_expansion_model(Eigen::Index p, Eigen::Index k, const CorrelationMatrix& omega,
                                     MatrixTerm likelihood_in_q);

}  // namespace polarprior
