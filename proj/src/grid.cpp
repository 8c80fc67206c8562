//==============================================================================
// grid.cpp -- uniform grids, spectral lattices, and slab stacks.
//==============================================================================
#include "clifharm/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace clifharm {

FieldHeader::FieldHeader(int n_, std::vector<std::int64_t> dims_, std::vector<double> extent_)
    : n(n_), dims(std::move(dims_)), extent(std::move(extent_)) {
  validate();
}

void FieldHeader::validate() const {
  check_dimension(n);
  if (static_cast<int>(dims.size()) != n)
    throw std::invalid_argument("header: dims size " + std::to_string(dims.size()) +
                                " does not match n=" + std::to_string(n));
  if (static_cast<int>(extent.size()) != n)
    throw std::invalid_argument("header: extent size " + std::to_string(extent.size()) +
                                " does not match n=" + std::to_string(n));
  for (int k = 0; k < n; ++k) {
    if (dims[k] < 2 || dims[k] % 2 != 0)
      throw std::invalid_argument("header: dims[" + std::to_string(k) + "]=" +
                                  std::to_string(dims[k]) + " must be even and >= 2");
    if (!(extent[k] > 0.0) || !std::isfinite(extent[k]))
      throw std::invalid_argument("header: extent[" + std::to_string(k) + "] must be finite and > 0");
  }
  if (blade_order != kBladeOrderTag)
    throw std::invalid_argument("header: unsupported blade order '" + blade_order + "'");
}

std::int64_t FieldHeader::num_points() const {
  std::int64_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

double FieldHeader::cell_volume() const {
  double v = 1.0;
  for (int k = 0; k < n; ++k) v *= spacing(k);
  return v;
}

double FieldHeader::box_volume() const {
  double v = 1.0;
  for (double L : extent) v *= L;
  return v;
}

double FieldHeader::max_spacing() const {
  double h = 0.0;
  for (int k = 0; k < n; ++k) h = std::max(h, spacing(k));
  return h;
}

double FieldHeader::min_nonzero_freq() const {
  double f = 1.0 / extent[0];
  for (int k = 1; k < n; ++k) f = std::min(f, 1.0 / extent[k]);
  return f;
}

double FieldHeader::nyquist_radius() const {
  double r = static_cast<double>(dims[0]) / (2.0 * extent[0]);
  for (int k = 1; k < n; ++k)
    r = std::min(r, static_cast<double>(dims[k]) / (2.0 * extent[k]));
  return r;
}

bool FieldHeader::operator==(const FieldHeader& o) const {
  return n == o.n && dims == o.dims && extent == o.extent && blade_order == o.blade_order;
}

void require_compatible(const FieldHeader& a, const FieldHeader& b) {
  if (a != b) throw std::invalid_argument("field headers are incompatible");
}

std::int64_t flatten_index(const FieldHeader& h, const std::vector<std::int64_t>& idx) {
  if (static_cast<int>(idx.size()) != h.n)
    throw std::invalid_argument("flatten_index: index rank mismatch");
  std::int64_t flat = 0;
  for (int k = 0; k < h.n; ++k) {
    if (idx[k] < 0 || idx[k] >= h.dims[k])
      throw std::out_of_range("flatten_index: index out of range on axis " + std::to_string(k));
    flat = flat * h.dims[k] + idx[k];
  }
  return flat;
}

std::vector<std::int64_t> unflatten_index(const FieldHeader& h, std::int64_t flat) {
  if (flat < 0 || flat >= h.num_points())
    throw std::out_of_range("unflatten_index: flat index out of range");
  std::vector<std::int64_t> idx(h.n);
  for (int k = h.n - 1; k >= 0; --k) {
    idx[k] = flat % h.dims[k];
    flat /= h.dims[k];
  }
  return idx;
}

//------------------------------------------------------------------------------
// GridField
//------------------------------------------------------------------------------

GridField::GridField(FieldHeader header) : header_(std::move(header)) {
  header_.validate();
  data_.assign(static_cast<std::size_t>(header_.num_points()) * header_.num_blades(), cplx(0.0, 0.0));
}

cplx& GridField::at(std::int64_t point, std::uint32_t blade) {
  return data_[static_cast<std::size_t>(point) * header_.num_blades() + blade];
}

const cplx& GridField::at(std::int64_t point, std::uint32_t blade) const {
  return data_[static_cast<std::size_t>(point) * header_.num_blades() + blade];
}

Multivector GridField::value(std::int64_t point) const {
  Multivector m(header_.n);
  const int nb = header_.num_blades();
  for (int b = 0; b < nb; ++b) m[static_cast<std::uint32_t>(b)] = at(point, static_cast<std::uint32_t>(b));
  return m;
}

void GridField::set_value(std::int64_t point, const Multivector& m) {
  if (m.dim() != header_.n) throw std::invalid_argument("set_value: dimension mismatch");
  const int nb = header_.num_blades();
  for (int b = 0; b < nb; ++b) at(point, static_cast<std::uint32_t>(b)) = m[static_cast<std::uint32_t>(b)];
}

std::vector<double> GridField::coords(std::int64_t point) const {
  const auto idx = unflatten_index(header_, point);
  std::vector<double> x(header_.n);
  for (int k = 0; k < header_.n; ++k)
    x[k] = -0.5 * header_.extent[k] + static_cast<double>(idx[k]) * header_.spacing(k);
  return x;
}

GridField& GridField::operator+=(const GridField& rhs) {
  require_compatible(header_, rhs.header_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

GridField& GridField::operator-=(const GridField& rhs) {
  require_compatible(header_, rhs.header_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

GridField& GridField::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

double GridField::l2_norm() const {
  double acc = 0.0;
  for (const auto& v : data_) acc += std::norm(v);
  return std::sqrt(acc * header_.cell_volume());
}

double GridField::max_norm() const {
  double best = 0.0;
  const std::int64_t np = num_points();
  const int nb = header_.num_blades();
  for (std::int64_t p = 0; p < np; ++p) {
    double acc = 0.0;
    for (int b = 0; b < nb; ++b) acc += std::norm(at(p, static_cast<std::uint32_t>(b)));
    best = std::max(best, acc);
  }
  return std::sqrt(best);
}

//------------------------------------------------------------------------------
// SpectralField
//------------------------------------------------------------------------------

SpectralField::SpectralField(FieldHeader header) : header_(std::move(header)) {
  header_.validate();
  data_.assign(static_cast<std::size_t>(header_.num_points()) * header_.num_blades(), cplx(0.0, 0.0));
}

cplx& SpectralField::at(std::int64_t bin, std::uint32_t blade) {
  return data_[static_cast<std::size_t>(bin) * header_.num_blades() + blade];
}

const cplx& SpectralField::at(std::int64_t bin, std::uint32_t blade) const {
  return data_[static_cast<std::size_t>(bin) * header_.num_blades() + blade];
}

Multivector SpectralField::value(std::int64_t bin) const {
  Multivector m(header_.n);
  const int nb = header_.num_blades();
  for (int b = 0; b < nb; ++b) m[static_cast<std::uint32_t>(b)] = at(bin, static_cast<std::uint32_t>(b));
  return m;
}

void SpectralField::set_value(std::int64_t bin, const Multivector& m) {
  if (m.dim() != header_.n) throw std::invalid_argument("set_value: dimension mismatch");
  const int nb = header_.num_blades();
  for (int b = 0; b < nb; ++b) at(bin, static_cast<std::uint32_t>(b)) = m[static_cast<std::uint32_t>(b)];
}

std::vector<std::int64_t> SpectralField::freq(std::int64_t bin) const {
  auto idx = unflatten_index(header_, bin);
  for (int k = 0; k < header_.n; ++k)
    if (idx[k] >= header_.dims[k] / 2) idx[k] -= header_.dims[k];
  return idx;
}

std::vector<double> SpectralField::xi(std::int64_t bin) const {
  const auto m = freq(bin);
  std::vector<double> x(header_.n);
  for (int k = 0; k < header_.n; ++k)
    x[k] = static_cast<double>(m[k]) / header_.extent[k];
  return x;
}

bool SpectralField::is_nyquist(std::int64_t bin) const {
  const auto m = freq(bin);
  for (int k = 0; k < header_.n; ++k)
    if (m[k] == -header_.dims[k] / 2) return true;
  return false;
}

bool SpectralField::is_dc(std::int64_t bin) const {
  const auto m = freq(bin);
  for (int k = 0; k < header_.n; ++k)
    if (m[k] != 0) return false;
  return true;
}

std::int64_t SpectralField::bin_of_freq(const std::vector<std::int64_t>& m) const {
  if (static_cast<int>(m.size()) != header_.n)
    throw std::invalid_argument("bin_of_freq: rank mismatch");
  std::vector<std::int64_t> idx(header_.n);
  for (int k = 0; k < header_.n; ++k) {
    if (m[k] < -header_.dims[k] / 2 || m[k] >= header_.dims[k] / 2)
      throw std::out_of_range("bin_of_freq: frequency out of lattice range on axis " + std::to_string(k));
    idx[k] = m[k] >= 0 ? m[k] : m[k] + header_.dims[k];
  }
  return flatten_index(header_, idx);
}

SpectralField& SpectralField::operator+=(const SpectralField& rhs) {
  require_compatible(header_, rhs.header_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& rhs) {
  require_compatible(header_, rhs.header_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

double SpectralField::l2_norm() const {
  double acc = 0.0;
  for (const auto& v : data_) acc += std::norm(v);
  return std::sqrt(acc / header_.box_volume());
}

double SpectralField::total_energy() const {
  double acc = 0.0;
  for (const auto& v : data_) acc += std::norm(v);
  return acc;
}

//------------------------------------------------------------------------------
// SlabField
//------------------------------------------------------------------------------

void SlabField::validate() const {
  header.validate();
  if (x0_values.size() != slices.size())
    throw std::invalid_argument("slab: x0_values and slices size mismatch");
  if (slices.empty()) throw std::invalid_argument("slab: no slices");
  double prev = 0.0;
  for (std::size_t i = 0; i < x0_values.size(); ++i) {
    if (!(x0_values[i] > prev))
      throw std::invalid_argument("slab: x0 values must be strictly increasing and > 0");
    prev = x0_values[i];
    require_compatible(header, slices[i].header());
  }
}

double SlabField::uniform_spacing() const {
  if (slices.size() < 2) throw std::invalid_argument("slab: need at least two slices for spacing");
  const double dx = x0_values[1] - x0_values[0];
  for (std::size_t i = 2; i < x0_values.size(); ++i) {
    const double d = x0_values[i] - x0_values[i - 1];
    if (std::abs(d - dx) > 1e-12 * std::max(1.0, std::abs(dx)))
      throw std::invalid_argument("slab: slice spacing is not uniform");
  }
  return dx;
}

}  // namespace clifharm
