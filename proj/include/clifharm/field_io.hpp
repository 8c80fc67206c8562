//==============================================================================
// field_io.hpp
// On-disk field format CFLD1, byte-exact and endian-pinned:
//   offset size  content
//   0      5     magic "CFLD1"
//   5      1     n (unsigned 8-bit)
//   6      1     blade-order tag length (= 10)
//   7      10    tag "bitmask-v1"
//   ...    8*n   per-axis sample counts, unsigned 64-bit little-endian
//   ...    8*n   per-axis box lengths, IEEE f64 little-endian
//   ...    rest  payload: row-major grid scan (axis 0 slowest), per point 2^n
//                complex coefficients in bitmask blade order, each as two
//                little-endian f64 (re, im)
// write/read round-trips are bit-exact; a CSV export exists for inspection
// only and is lossy by nature of decimal formatting.
//==============================================================================
#pragma once

#include <string>

#include "clifharm/grid.hpp"

namespace clifharm {

void write_field(const std::string& path, const GridField& f);
GridField read_field(const std::string& path);

// Inspection export: one row per grid point (indices, coordinates, then
// re/im per blade, %.17g). Not an input format.
void write_csv(const std::string& path, const GridField& f);

}  // namespace clifharm
