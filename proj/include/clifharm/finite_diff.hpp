//==============================================================================
// finite_diff.hpp
// Second-order centered differences: periodic wrap along the horizontal axes
// of a GridField, plain three-point stencils across the stored x0-slices of a
// slab (the vertical direction is not periodic).
//==============================================================================
#pragma once

#include "clifharm/grid.hpp"

namespace clifharm {

// d/dx_axis with axis in 1..n, periodic boundary: (f(x+h) - f(x-h)) / (2h).
GridField spatial_derivative(const GridField& f, int axis);

// Centered x0-derivative at interior slice i of a uniformly spaced slab:
// (slice[i+1] - slice[i-1]) / (2 h0). Requires 1 <= i <= num_slices()-2.
GridField slab_x0_derivative(const SlabField& s, std::size_t i);

}  // namespace clifharm
