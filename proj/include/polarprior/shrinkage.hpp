#pragma once

#include <cstddef>
#include <vector>

#include "polarprior/rng.hpp"

namespace polarprior {

/// Entry law with density proportional to |z|^(ell-1) exp(-ell z^2 / 2),
/// ell in (0, 1]. ell = 1 is the standard normal; smaller ell puts a
/// spike at zero while keeping unit variance.
class ShrinkageLaw {
public:
    explicit ShrinkageLaw(double ell);
    double ell() const noexcept { return ell_; }

private:
    double ell_;
};

double shrinkage_logpdf(double z, const ShrinkageLaw& law);

/// One draw via Z^2 ~ Gamma(shape = ell/2, scale = 2/ell) and a fair sign.
double shrinkage_draw(const ShrinkageLaw& law, Rng& rng);
std::vector<double> shrinkage_sample(std::size_t n, const ShrinkageLaw& law, Rng& rng);

struct ScaleMixtureDraw {
    double z;
    double theta;
};

/// theta ~ Beta(ell/2, (1 - ell)/2), z | theta ~ Normal(0, theta / ell).
/// Only defined for ell strictly inside (0, 1).
std::vector<ScaleMixtureDraw> scale_mixture_sample(std::size_t n, const ShrinkageLaw& law, Rng& rng);

}  // namespace polarprior
