//==============================================================================
// grid.hpp
// Clifford-valued fields sampled on uniform periodic grids.
//   FieldHeader   : dimension n, per-axis sample counts d_k (even) and box
//                   lengths L_k; the grid covers [-L_k/2, L_k/2) with spacing
//                   h_k = L_k/d_k. Two fields interoperate iff headers match.
//   GridField     : one Multivector per grid point (physical side).
//   SpectralField : one Multivector per integer frequency m_k in
//                   [-d_k/2, d_k/2); physical frequency xi_k = m_k / L_k.
//                   Stored in FFT bin order (bin < d/2 -> m = bin, else
//                   m = bin - d); the Nyquist bin is the negative frequency
//                   -d/2.
//   SlabField     : a stack of GridField slices at increasing heights x0 > 0.
// Storage is point-major: the 2^n blade coefficients of one point/bin are
// contiguous, in bitmask blade order.
//==============================================================================
#pragma once

#include <cstdint>
#include <vector>

#include "clifharm/multivector.hpp"

namespace clifharm {

inline constexpr const char* kBladeOrderTag = "bitmask-v1";

struct FieldHeader {
  int n = 0;
  std::vector<std::int64_t> dims;   // d_1 .. d_n, all even, >= 2
  std::vector<double> extent;       // L_1 .. L_n, all > 0
  std::string blade_order = kBladeOrderTag;

  FieldHeader() = default;
  FieldHeader(int n_, std::vector<std::int64_t> dims_, std::vector<double> extent_);

  void validate() const;

  std::int64_t num_points() const;
  int num_blades() const { return 1 << n; }
  double spacing(int axis) const { return extent[axis] / static_cast<double>(dims[axis]); }
  double cell_volume() const;   // prod h_k
  double box_volume() const;    // prod L_k
  double max_spacing() const;

  // Smallest nonzero |xi| on the lattice and the radius of the Nyquist ball.
  double min_nonzero_freq() const;  // min_k 1/L_k
  double nyquist_radius() const;    // min_k d_k / (2 L_k)

  bool operator==(const FieldHeader& o) const;
  bool operator!=(const FieldHeader& o) const { return !(*this == o); }
};

void require_compatible(const FieldHeader& a, const FieldHeader& b);

// Row-major flattening, axis 0 slowest.
std::int64_t flatten_index(const FieldHeader& h, const std::vector<std::int64_t>& idx);
std::vector<std::int64_t> unflatten_index(const FieldHeader& h, std::int64_t flat);

class GridField {
 public:
  GridField() = default;
  explicit GridField(FieldHeader header);

  const FieldHeader& header() const { return header_; }
  std::int64_t num_points() const { return header_.num_points(); }

  cplx& at(std::int64_t point, std::uint32_t blade);
  const cplx& at(std::int64_t point, std::uint32_t blade) const;

  Multivector value(std::int64_t point) const;
  void set_value(std::int64_t point, const Multivector& m);

  // Coordinates of a grid point: x_k = -L_k/2 + j_k h_k.
  std::vector<double> coords(std::int64_t point) const;

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  GridField& operator+=(const GridField& rhs);
  GridField& operator-=(const GridField& rhs);
  GridField& operator*=(cplx s);
  friend GridField operator+(GridField a, const GridField& b) { return a += b; }
  friend GridField operator-(GridField a, const GridField& b) { return a -= b; }
  friend GridField operator*(GridField a, cplx s) { return a *= s; }
  friend GridField operator*(cplx s, GridField a) { return a *= s; }

  // Discrete L2 norm: sqrt( sum_x |F(x)|^2 * prod h_k ).
  double l2_norm() const;
  // max_x |F(x)|.
  double max_norm() const;

 private:
  FieldHeader header_;
  std::vector<cplx> data_;
};

class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(FieldHeader header);

  const FieldHeader& header() const { return header_; }
  std::int64_t num_bins() const { return header_.num_points(); }

  cplx& at(std::int64_t bin, std::uint32_t blade);
  const cplx& at(std::int64_t bin, std::uint32_t blade) const;

  Multivector value(std::int64_t bin) const;
  void set_value(std::int64_t bin, const Multivector& m);

  // Signed integer frequencies m_k of a bin and the physical xi_k = m_k/L_k.
  std::vector<std::int64_t> freq(std::int64_t bin) const;
  std::vector<double> xi(std::int64_t bin) const;
  // True iff any m_k equals the Nyquist row -d_k/2.
  bool is_nyquist(std::int64_t bin) const;
  bool is_dc(std::int64_t bin) const;
  // Flat bin of a signed frequency vector (m_k in [-d_k/2, d_k/2)).
  std::int64_t bin_of_freq(const std::vector<std::int64_t>& m) const;

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  SpectralField& operator+=(const SpectralField& rhs);
  SpectralField& operator-=(const SpectralField& rhs);
  SpectralField& operator*=(cplx s);
  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(SpectralField a, cplx s) { return a *= s; }

  // Spectral L2 norm: sqrt( sum_m |F(m)|^2 * prod 1/L_k ).
  double l2_norm() const;
  double total_energy() const;  // sum_m |F(m)|^2 (no lattice measure)

 private:
  FieldHeader header_;
  std::vector<cplx> data_;
};

struct SlabField {
  FieldHeader header;
  std::vector<double> x0_values;   // strictly increasing, all > 0
  std::vector<GridField> slices;

  void validate() const;
  std::size_t num_slices() const { return slices.size(); }
  // Common slice spacing; throws if spacing is not uniform to 1e-12 relative.
  double uniform_spacing() const;
};

}  // namespace clifharm
