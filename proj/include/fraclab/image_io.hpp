#pragma once

#include "fraclab/grid.hpp"

#include <string>

namespace fraclab {

/// Binary PGM (P5), 8- or 16-bit. Gray values map affinely onto [0, 1];
/// writing quantizes with round-to-nearest, so a field already quantized to
/// the written bit depth round-trips exactly.
ScalarField read_pgm(const std::string& path, double spacing = -1.0);
void write_pgm(const ScalarField& u, const std::string& path, int bit_depth = 8);

/// Binary PBM (P4) masks; 1 bits are members.
BinaryMask read_pbm(const std::string& path, double spacing = -1.0);
void write_pbm(const BinaryMask& m, const std::string& path);

/// Mask as a JSON cell list: {"dim":d,"n":n,"h":h,"cells":[[x,y],...]}.
BinaryMask read_mask_json(const std::string& path);
void write_mask_json(const BinaryMask& m, const std::string& path);

} // namespace fraclab
