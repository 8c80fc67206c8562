//==============================================================================
// finite_diff.cpp -- centered difference stencils on grids and slabs.
//==============================================================================
#include "clifharm/finite_diff.hpp"

#include <stdexcept>

namespace clifharm {

GridField spatial_derivative(const GridField& f, int axis) {
  const FieldHeader& h = f.header();
  if (axis < 1 || axis > h.n) throw std::invalid_argument("spatial_derivative: axis out of range");
  const int a = axis - 1;
  std::int64_t stride = 1;
  for (int k = h.n - 1; k > a; --k) stride *= h.dims[k];
  const std::int64_t d = h.dims[a];
  const double inv2h = 1.0 / (2.0 * h.spacing(a));
  const int nb = h.num_blades();

  GridField out(h);
  const std::int64_t np = h.num_points();
  for (std::int64_t p = 0; p < np; ++p) {
    const std::int64_t j = (p / stride) % d;
    const std::int64_t fwd = (j + 1 < d) ? p + stride : p - (d - 1) * stride;
    const std::int64_t bwd = (j > 0) ? p - stride : p + (d - 1) * stride;
    for (int b = 0; b < nb; ++b) {
      const auto blade = static_cast<std::uint32_t>(b);
      out.at(p, blade) = (f.at(fwd, blade) - f.at(bwd, blade)) * inv2h;
    }
  }
  return out;
}

GridField slab_x0_derivative(const SlabField& s, std::size_t i) {
  s.validate();
  if (i == 0 || i + 1 >= s.num_slices())
    throw std::invalid_argument("slab_x0_derivative: slice index not interior");
  const double h0 = s.uniform_spacing();
  GridField out = s.slices[i + 1];
  out -= s.slices[i - 1];
  out *= cplx(1.0 / (2.0 * h0), 0.0);
  return out;
}

}  // namespace clifharm
