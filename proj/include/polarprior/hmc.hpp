#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "polarprior/rng.hpp"
#include "polarprior/transforms.hpp"

namespace polarprior {

/// Log density on the unconstrained scale (transform Jacobians included).
/// Writes the gradient into `grad` when it is non-null. Must be safe to call
/// concurrently.
using LogDensityFn = std::function<double(const Vector& u, Vector* grad)>;

struct ModelPosterior {
    ParameterLayout layout;
    LogDensityFn logpdf_grad;
    /// Optional starting point; the default is i.i.d. Normal(0, 0.1^2).
    std::function<Vector(Rng&)> initialize;
    /// Optional per-draw derived quantities (e.g. flattened Q), with names.
    std::function<Vector(const Vector& u)> derived;
    std::vector<std::string> derived_names;
};

enum class MassKind { Unit, Diagonal };

struct HmcConfig {
    std::size_t warmup = 1000;
    std::size_t draws = 1000;
    std::size_t chains = 4;
    double target_accept = 0.8;
    std::size_t max_leapfrog = 1024;
    std::uint64_t seed = 0;
    double init_stepsize = 0.1;
    MassKind mass = MassKind::Unit;
    double path_length = 1.0;
    double init_scale = 0.1;
    bool audit_gradient = true;

    void validate() const;
};

struct LeapfrogState {
    Vector q;
    Vector p;
    double logp;
    Vector grad;
};

/// Stormer-Verlet with kinetic energy p^T M^{-1} p / 2; `inv_mass` is the
/// diagonal of M^{-1}.
LeapfrogState leapfrog(LeapfrogState state, double stepsize, std::size_t nsteps, const LogDensityFn& fn,
                       const Vector& inv_mass);

struct ChainOutput {
    std::vector<std::string> names;
    std::vector<std::string> derived_names;
    std::size_t chains = 0;
    std::size_t draws_per_chain = 0;
    Matrix draws;    // (chains * draws) x dim, constrained scale, chain-major
    Matrix derived;  // (chains * draws) x derived dim
    std::vector<double> accept_rate;      // per chain, post-warmup
    std::vector<double> stepsize;         // per chain, adapted
    std::vector<Vector> stepsize_trace;   // per chain, one entry per warmup iteration
    std::vector<Vector> inv_mass;         // per chain
    std::vector<std::size_t> divergences; // per chain, post-warmup
    std::size_t divergence_count = 0;
    Vector ess;         // per parameter; NaN when diagnostics are unavailable
    Vector split_rhat;

    double mean_accept_rate() const;
    /// draws of chain c (draws_per_chain x dim)
    Matrix chain_draws(std::size_t c) const;
    Matrix chain_derived(std::size_t c) const;
};

/// Central-difference check of the gradient on `coords` random coordinates,
/// step 1e-5 * max(1, |u_i|). Returns the largest relative error
/// |a - fd| / max(|a|, |fd|, 1).
double gradient_audit(const LogDensityFn& fn, const Vector& u, std::size_t coords, Rng& rng);

/// Runs config.chains independent chains (in parallel); chain c uses
/// make_rng(config.seed, c).
ChainOutput hmc_sample(const ModelPosterior& model, const HmcConfig& config);

/// One row per draw: chain, iteration, then parameter and derived columns.
void write_draws_csv(std::ostream& out, const ChainOutput& chain);
/// One JSON object per line: a record per chain, then a record per parameter.
void write_diagnostics_jsonl(std::ostream& out, const ChainOutput& chain);

}  // namespace polarprior
