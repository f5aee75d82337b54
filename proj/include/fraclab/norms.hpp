#pragma once

#include "fraclab/grid.hpp"

namespace fraclab {

/// Discrete L^p norm (sum |u_i|^p h^d)^(1/p); p = infinity gives max |u_i|.
/// On bounded grids only cells of Omega contribute.
/// Throws on non-finite field values or p < 1.
double lp_norm(const ScalarField& u, double p);

double l2_inner(const ScalarField& u, const ScalarField& v);

/// Peak signal-to-noise ratio in dB with peak = max(clean).
/// Returns +infinity when the two fields coincide.
double psnr(const ScalarField& clean, const ScalarField& other);

double mean_squared_error(const ScalarField& a, const ScalarField& b);

} // namespace fraclab
