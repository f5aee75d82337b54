#include "fraclab/norms.hpp"

#include "fraclab/reduce.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fraclab {

namespace {

void require_finite(const ScalarField& u) {
    if (!u.all_finite()) throw std::invalid_argument("non-finite field");
}

} // namespace

double lp_norm(const ScalarField& u, double p) {
    require_finite(u);
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (!u.grid.active(i)) continue;
            m = std::max(m, std::abs(u.values[i]));
        }
        return m;
    }
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1 or infinity");
    const double hd = u.grid.cell_measure();
    const double sum = deterministic_sum(u.size(), [&](std::size_t i) {
        if (!u.grid.active(i)) return 0.0;
        return std::pow(std::abs(u.values[i]), p) * hd;
    });
    return std::pow(sum, 1.0 / p);
}

double l2_inner(const ScalarField& u, const ScalarField& v) {
    if (!u.grid.same_layout(v.grid)) throw std::invalid_argument("l2_inner: grid mismatch");
    require_finite(u);
    require_finite(v);
    const double hd = u.grid.cell_measure();
    return deterministic_sum(u.size(), [&](std::size_t i) {
        if (!u.grid.active(i)) return 0.0;
        return u.values[i] * v.values[i] * hd;
    });
}

double mean_squared_error(const ScalarField& a, const ScalarField& b) {
    if (!a.grid.same_layout(b.grid)) throw std::invalid_argument("mean_squared_error: grid mismatch");
    std::size_t count = 0;
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a.grid.active(i)) continue;
        const double d = a.values[i] - b.values[i];
        acc += d * d;
        ++count;
    }
    return count ? acc / static_cast<double>(count) : 0.0;
}

double psnr(const ScalarField& clean, const ScalarField& other) {
    if (!clean.grid.same_layout(other.grid)) throw std::invalid_argument("psnr: grid mismatch");
    require_finite(clean);
    require_finite(other);
    double peak = 0.0;
    for (std::size_t i = 0; i < clean.size(); ++i)
        if (clean.grid.active(i)) peak = std::max(peak, clean.values[i]);
    if (!(peak > 0.0)) throw std::invalid_argument("psnr: clean field has no positive peak");
    const double mse = mean_squared_error(clean, other);
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / mse);
}

} // namespace fraclab
