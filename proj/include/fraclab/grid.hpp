#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraclab {

/// Domain topology of a computational grid.
///  - Periodic: torus of period L = n*h per axis.
///  - Bounded:  domain Omega given by an explicit cell mask, fields vanish
///              identically outside Omega (zero exterior data on all of R^d).
///  - Box:      plain rectangular index box with no exterior semantics
///              (used for measurement spaces and convolution stencils).
enum class Topology { Periodic, Bounded, Box };

/**
 * Uniform cell-centered grid in d = 1 or 2 dimensions.
 *
 * Cells are indexed 0..n-1 per axis with centers at (k + 1/2) * h.
 * Linear index is row-major: idx = y * n + x for d = 2.
 */
class GridSpec {
public:
    static GridSpec periodic(int dim, int n, double h);
    static GridSpec bounded(int dim, int n, double h, std::vector<std::uint8_t> omega);
    static GridSpec box(int dim, int n, double h);

    int dim() const { return dim_; }
    int n_per_axis() const { return n_; }
    double spacing() const { return h_; }
    Topology topology() const { return topology_; }

    std::size_t cell_count() const;
    double cell_measure() const;              // h^dim
    double period() const;                    // L = n*h (periodic only)
    double coord(int k) const { return (k + 0.5) * h_; }

    /// Bounded: true if cell i belongs to Omega. Periodic/Box: always true.
    bool active(std::size_t i) const {
        return omega_.empty() || omega_[i] != 0;
    }
    const std::vector<std::uint8_t>& omega_mask() const { return omega_; }
    std::size_t active_count() const;

    std::size_t index(int x, int y = 0) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(n_) + x;
    }

    bool same_layout(const GridSpec& other) const {
        return dim_ == other.dim_ && n_ == other.n_ && h_ == other.h_ &&
               topology_ == other.topology_ && omega_ == other.omega_;
    }

private:
    GridSpec(int dim, int n, double h, Topology t, std::vector<std::uint8_t> omega);

    int dim_ = 2;
    int n_ = 0;
    double h_ = 1.0;
    Topology topology_ = Topology::Periodic;
    std::vector<std::uint8_t> omega_;   // empty unless Bounded
};

/// Real scalar values on the cells of a grid.
struct ScalarField {
    GridSpec grid;
    std::vector<double> values;

    ScalarField(GridSpec g, double fill = 0.0)
        : grid(std::move(g)), values(grid.cell_count(), fill) {}
    ScalarField(GridSpec g, std::vector<double> v);

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }

    /// Zero every cell outside Omega (no-op for periodic/box grids).
    void clamp_to_domain();
    bool all_finite() const;
};

/// Boolean membership over the cells of a grid.
struct BinaryMask {
    GridSpec grid;
    std::vector<std::uint8_t> members;

    BinaryMask(GridSpec g, bool fill = false)
        : grid(std::move(g)),
          members(grid.cell_count(), fill ? 1 : 0) {}
    BinaryMask(GridSpec g, std::vector<std::uint8_t> m);

    bool contains(std::size_t i) const { return members[i] != 0; }
    std::size_t count() const;
    double measure() const;               // count * h^d
    BinaryMask complement() const;
};

// Mask builders used throughout the experiments and tests. Coordinates are
// in physical units on the mask's grid.
BinaryMask disk_mask(const GridSpec& grid, double cx, double cy, double radius);
BinaryMask rect_mask(const GridSpec& grid, int x0, int y0, int x1, int y1); // inclusive cell box
BinaryMask centered_rect_mask(const GridSpec& grid, int margin_cells);

/// Bounded grid whose Omega is a centered square region `margin` cells away
/// from the bounding box on every side.
GridSpec bounded_square_domain(int dim, int n, double h, int margin_cells);

ScalarField indicator_field(const BinaryMask& m);

} // namespace fraclab
