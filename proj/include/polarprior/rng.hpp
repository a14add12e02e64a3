#pragma once

#include <cstdint>
#include <random>

namespace polarprior {

using Rng = std::mt19937_64;

/// Derives an independent stream seed from (master, index) with a SplitMix64
/// finalizer, so replicate or chain i always sees the same stream regardless
/// of scheduling.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) noexcept;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }
inline Rng make_rng(std::uint64_t master, std::uint64_t index) {
    return Rng(split_seed(master, index));
}

double uniform01(Rng& rng);        // open interval (0, 1)
double standard_normal(Rng& rng);

/// log of a Gamma(shape, scale = 1) draw. Working on the log scale keeps
/// shapes far below one (where draws pile up near zero) representable.
double log_gamma_draw(Rng& rng, double shape);

double gamma_draw(Rng& rng, double shape, double scale);
double beta_draw(Rng& rng, double a, double b);

}  // namespace polarprior
