#pragma once

#include "fraclab/grid.hpp"

#include <cstdint>

namespace fraclab {

/// Seeded Gaussian noise rescaled to a prescribed L^q norm.
struct NoiseSpec {
    std::uint64_t seed = 0;
    double target_norm = 0.0;
    double norm_exponent = 2.0;   // q in (1, infinity]
};

/// i.i.d. standard normal draws from a seeded generator, zeroed outside
/// Omega on bounded grids, then rescaled so lp_norm(result, q) equals
/// target_norm exactly. Deterministic for a fixed (seed, grid, spec).
/// target_norm = 0 yields the zero field; negative targets are an error.
ScalarField gaussian_noise(const NoiseSpec& spec, const GridSpec& grid);

} // namespace fraclab
