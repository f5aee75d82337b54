#include "fraclab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fraclab {

GridSpec::GridSpec(int dim, int n, double h, Topology t, std::vector<std::uint8_t> omega)
    : dim_(dim), n_(n), h_(h), topology_(t), omega_(std::move(omega)) {
    if (dim_ != 1 && dim_ != 2) throw std::invalid_argument("GridSpec: dim must be 1 or 2");
    if (n_ < 4) throw std::invalid_argument("GridSpec: need at least 4 cells per axis");
    if (!(h_ > 0.0) || !std::isfinite(h_)) throw std::invalid_argument("GridSpec: spacing must be positive");
}

GridSpec GridSpec::periodic(int dim, int n, double h) {
    return GridSpec(dim, n, h, Topology::Periodic, {});
}

GridSpec GridSpec::box(int dim, int n, double h) {
    return GridSpec(dim, n, h, Topology::Box, {});
}

GridSpec GridSpec::bounded(int dim, int n, double h, std::vector<std::uint8_t> omega) {
    GridSpec g(dim, n, h, Topology::Bounded, std::move(omega));
    if (g.omega_.size() != g.cell_count())
        throw std::invalid_argument("GridSpec: omega mask size mismatch");
    std::size_t members = 0;
    for (auto v : g.omega_) members += (v != 0);
    if (members == 0) throw std::invalid_argument("GridSpec: omega mask is empty");
    // Omega must keep at least one free cell layer inside the bounding box,
    // otherwise there is no exterior region to integrate against.
    auto touches = [&](int x, int y) {
        return g.omega_[g.index(x, y)] != 0;
    };
    if (dim == 1) {
        if (g.omega_[0] != 0 || g.omega_[n - 1] != 0)
            throw std::invalid_argument("GridSpec: omega touches the bounding box (no exterior layer)");
    } else {
        for (int x = 0; x < n; ++x)
            if (touches(x, 0) || touches(x, n - 1))
                throw std::invalid_argument("GridSpec: omega touches the bounding box (no exterior layer)");
        for (int y = 0; y < n; ++y)
            if (touches(0, y) || touches(n - 1, y))
                throw std::invalid_argument("GridSpec: omega touches the bounding box (no exterior layer)");
    }
    return g;
}

std::size_t GridSpec::cell_count() const {
    std::size_t c = static_cast<std::size_t>(n_);
    return dim_ == 1 ? c : c * c;
}

double GridSpec::cell_measure() const {
    return dim_ == 1 ? h_ : h_ * h_;
}

double GridSpec::period() const {
    if (topology_ != Topology::Periodic)
        throw std::logic_error("GridSpec: period() requires periodic topology");
    return n_ * h_;
}

std::size_t GridSpec::active_count() const {
    if (omega_.empty()) return cell_count();
    std::size_t c = 0;
    for (auto v : omega_) c += (v != 0);
    return c;
}

ScalarField::ScalarField(GridSpec g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.cell_count())
        throw std::invalid_argument("ScalarField: value count does not match grid");
}

void ScalarField::clamp_to_domain() {
    if (grid.topology() != Topology::Bounded) return;
    const auto& omega = grid.omega_mask();
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!omega[i]) values[i] = 0.0;
}

bool ScalarField::all_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

BinaryMask::BinaryMask(GridSpec g, std::vector<std::uint8_t> m)
    : grid(std::move(g)), members(std::move(m)) {
    if (members.size() != grid.cell_count())
        throw std::invalid_argument("BinaryMask: member count does not match grid");
}

std::size_t BinaryMask::count() const {
    std::size_t c = 0;
    for (auto v : members) c += (v != 0);
    return c;
}

double BinaryMask::measure() const {
    return static_cast<double>(count()) * grid.cell_measure();
}

BinaryMask BinaryMask::complement() const {
    BinaryMask out(grid);
    for (std::size_t i = 0; i < members.size(); ++i)
        out.members[i] = members[i] ? 0 : 1;
    return out;
}

BinaryMask disk_mask(const GridSpec& grid, double cx, double cy, double radius) {
    BinaryMask m(grid);
    const int n = grid.n_per_axis();
    if (grid.dim() == 1) {
        for (int x = 0; x < n; ++x)
            m.members[x] = std::abs(grid.coord(x) - cx) <= radius ? 1 : 0;
        return m;
    }
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            const double dx = grid.coord(x) - cx;
            const double dy = grid.coord(y) - cy;
            m.members[grid.index(x, y)] = (dx * dx + dy * dy <= radius * radius) ? 1 : 0;
        }
    return m;
}

BinaryMask rect_mask(const GridSpec& grid, int x0, int y0, int x1, int y1) {
    BinaryMask m(grid);
    const int n = grid.n_per_axis();
    if (grid.dim() == 1) {
        for (int x = std::max(0, x0); x <= std::min(n - 1, x1); ++x) m.members[x] = 1;
        return m;
    }
    for (int y = std::max(0, y0); y <= std::min(n - 1, y1); ++y)
        for (int x = std::max(0, x0); x <= std::min(n - 1, x1); ++x)
            m.members[grid.index(x, y)] = 1;
    return m;
}

BinaryMask centered_rect_mask(const GridSpec& grid, int margin_cells) {
    const int n = grid.n_per_axis();
    if (2 * margin_cells >= n)
        throw std::invalid_argument("centered_rect_mask: margin too large");
    if (grid.dim() == 1)
        return rect_mask(grid, margin_cells, 0, n - 1 - margin_cells, 0);
    return rect_mask(grid, margin_cells, margin_cells, n - 1 - margin_cells, n - 1 - margin_cells);
}

GridSpec bounded_square_domain(int dim, int n, double h, int margin_cells) {
    GridSpec tmp = GridSpec::box(dim, n, h);
    BinaryMask omega = centered_rect_mask(tmp, margin_cells);
    return GridSpec::bounded(dim, n, h, omega.members);
}

ScalarField indicator_field(const BinaryMask& m) {
    ScalarField f(m.grid);
    for (std::size_t i = 0; i < m.members.size(); ++i)
        f.values[i] = m.members[i] ? 1.0 : 0.0;
    return f;
}

} // namespace fraclab
