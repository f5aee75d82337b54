#include "fraclab/image_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fraclab {

namespace {

void skip_pnm_whitespace(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            in.get();
        } else {
            return;
        }
    }
}

int read_pnm_int(std::istream& in) {
    skip_pnm_whitespace(in);
    int v = 0;
    if (!(in >> v)) throw std::runtime_error("malformed PNM header");
    return v;
}

GridSpec grid_for_image(int w, int h_px, double spacing) {
    if (w != h_px)
        throw std::runtime_error("image is not square; only n x n grids are supported");
    const double h = spacing > 0.0 ? spacing : 1.0 / w;
    return GridSpec::box(2, w, h);
}

} // namespace

ScalarField read_pgm(const std::string& path, double spacing) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string magic;
    in >> magic;
    if (magic != "P5") throw std::runtime_error("malformed header: expected P5 in " + path);
    const int w = read_pnm_int(in);
    const int h_px = read_pnm_int(in);
    const int maxval = read_pnm_int(in);
    if (w <= 0 || h_px <= 0 || maxval <= 0 || maxval > 65535)
        throw std::runtime_error("malformed PGM header in " + path);
    in.get();  // single whitespace byte before raster

    ScalarField u(grid_for_image(w, h_px, spacing));
    const bool wide = maxval > 255;
    const std::size_t count = static_cast<std::size_t>(w) * h_px;
    std::vector<unsigned char> raw(count * (wide ? 2 : 1));
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
        throw std::runtime_error("truncated PGM raster in " + path);
    for (std::size_t i = 0; i < count; ++i) {
        unsigned v = wide ? (static_cast<unsigned>(raw[2 * i]) << 8) | raw[2 * i + 1]
                          : raw[i];
        u.values[i] = static_cast<double>(v) / maxval;
    }
    return u;
}

void write_pgm(const ScalarField& u, const std::string& path, int bit_depth) {
    if (bit_depth != 8 && bit_depth != 16)
        throw std::invalid_argument("write_pgm: bit depth must be 8 or 16");
    if (u.grid.dim() != 2) throw std::invalid_argument("write_pgm: 2-d fields only");
    const int n = u.grid.n_per_axis();
    const int maxval = bit_depth == 8 ? 255 : 65535;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "P5\n" << n << " " << n << "\n" << maxval << "\n";
    for (std::size_t i = 0; i < u.size(); ++i) {
        double v = u.values[i];
        v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        const unsigned g = static_cast<unsigned>(std::lround(v * maxval));
        if (bit_depth == 16) {
            out.put(static_cast<char>((g >> 8) & 0xff));
            out.put(static_cast<char>(g & 0xff));
        } else {
            out.put(static_cast<char>(g & 0xff));
        }
    }
}

BinaryMask read_pbm(const std::string& path, double spacing) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string magic;
    in >> magic;
    if (magic != "P4") throw std::runtime_error("malformed header: expected P4 in " + path);
    const int w = read_pnm_int(in);
    const int h_px = read_pnm_int(in);
    in.get();
    BinaryMask m(grid_for_image(w, h_px, spacing));
    const int row_bytes = (w + 7) / 8;
    std::vector<unsigned char> row(row_bytes);
    for (int y = 0; y < h_px; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), row_bytes);
        if (in.gcount() != row_bytes) throw std::runtime_error("truncated PBM raster in " + path);
        for (int x = 0; x < w; ++x)
            m.members[m.grid.index(x, y)] = (row[x / 8] >> (7 - x % 8)) & 1;
    }
    return m;
}

void write_pbm(const BinaryMask& m, const std::string& path) {
    if (m.grid.dim() != 2) throw std::invalid_argument("write_pbm: 2-d masks only");
    const int n = m.grid.n_per_axis();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "P4\n" << n << " " << n << "\n";
    const int row_bytes = (n + 7) / 8;
    std::vector<unsigned char> row(row_bytes);
    for (int y = 0; y < n; ++y) {
        std::fill(row.begin(), row.end(), 0);
        for (int x = 0; x < n; ++x)
            if (m.members[m.grid.index(x, y)]) row[x / 8] |= static_cast<unsigned char>(1u << (7 - x % 8));
        out.write(reinterpret_cast<const char*>(row.data()), row_bytes);
    }
}

BinaryMask read_mask_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    const int dim = j.at("dim").get<int>();
    const int n = j.at("n").get<int>();
    const double h = j.at("h").get<double>();
    BinaryMask m(GridSpec::box(dim, n, h));
    for (const auto& cell : j.at("cells")) {
        const int x = cell.at(0).get<int>();
        const int y = dim == 2 ? cell.at(1).get<int>() : 0;
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw std::runtime_error("mask cell out of range in " + path);
        m.members[m.grid.index(x, y)] = 1;
    }
    return m;
}

void write_mask_json(const BinaryMask& m, const std::string& path) {
    nlohmann::json cells = nlohmann::json::array();
    const int n = m.grid.n_per_axis();
    if (m.grid.dim() == 1) {
        for (int x = 0; x < n; ++x)
            if (m.members[x]) cells.push_back({x});
    } else {
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x)
                if (m.members[m.grid.index(x, y)]) cells.push_back({x, y});
    }
    nlohmann::json j{{"dim", m.grid.dim()}, {"n", n}, {"h", m.grid.spacing()}, {"cells", cells}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

} // namespace fraclab
