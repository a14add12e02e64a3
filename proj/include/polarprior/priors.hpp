#pragma once

#include <variant>

#include "polarprior/correlation.hpp"
#include "polarprior/rng.hpp"
#include "polarprior/shrinkage.hpp"
#include "polarprior/stiefel.hpp"

namespace polarprior {

struct StandardNormal {};
using EntryLaw = std::variant<StandardNormal, ShrinkageLaw>;

/// Law of X = Omega^{1/2} Z with i.i.d. entries of Z drawn from `entry_law`.
struct StructuredPriorSpec {
    Eigen::Index p;
    Eigen::Index k;
    EntryLaw entry_law;
    CorrelationMatrix omega;

    StructuredPriorSpec(Eigen::Index p, Eigen::Index k, EntryLaw entry_law, CorrelationMatrix omega);
    StructuredPriorSpec(Eigen::Index p, Eigen::Index k, EntryLaw entry_law);
};

/// Z is filled column by column; X = Omega^{1/2} Z with the symmetric root.
Matrix sample_matrix_x(const StructuredPriorSpec& spec, Rng& rng);
SemiOrthogonalMatrix sample_prior_q(const StructuredPriorSpec& spec, Rng& rng);

/// log f(Q | Sigma) = -(k/2) log|Sigma| - (p/2) log|Q^T Sigma^{-1} Q|,
/// relative to the uniform measure on the Stiefel manifold.
double macg_logpdf(const SemiOrthogonalMatrix& q, const SpdMatrix& sigma);

}  // namespace polarprior
