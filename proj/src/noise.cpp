#include "fraclab/noise.hpp"

#include "fraclab/norms.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace fraclab {

namespace {

// Box-Muller on top of the raw engine; the standard library's
// normal_distribution is implementation-defined in its draw sequence, and
// noise fields must be reproducible byte for byte.
class NormalDraws {
public:
    explicit NormalDraws(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    double uniform01() {
        // 53-bit mantissa from the top bits of the 64-bit draw.
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace

ScalarField gaussian_noise(const NoiseSpec& spec, const GridSpec& grid) {
    if (spec.target_norm < 0.0)
        throw std::invalid_argument("gaussian_noise: target norm must be nonnegative");
    if (!(spec.norm_exponent > 1.0))
        throw std::invalid_argument("gaussian_noise: norm exponent must lie in (1, infinity]");

    ScalarField out(grid);
    if (spec.target_norm == 0.0) return out;

    NormalDraws draws(spec.seed);
    for (std::size_t i = 0; i < out.size(); ++i) out.values[i] = draws.next();
    out.clamp_to_domain();

    const double raw = lp_norm(out, spec.norm_exponent);
    if (!(raw > 0.0))
        throw std::runtime_error("gaussian_noise: degenerate draw, cannot rescale");
    const double scale = spec.target_norm / raw;
    for (double& v : out.values) v *= scale;
    return out;
}

} // namespace fraclab
