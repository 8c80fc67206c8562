#include "clifharm/multivector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace clifharm {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("algebra dimension must be in [1, " +
                                std::to_string(kMaxDim) + "], got " +
                                std::to_string(n));
  }
}

void check_blade(std::uint32_t mask, int n) {
  check_dimension(n);
  if (mask >= (1u << n)) {
    throw std::invalid_argument("blade mask " + std::to_string(mask) +
                                " out of range for n=" + std::to_string(n));
  }
}

BladeProduct blade_product(std::uint32_t s, std::uint32_t t, int n) {
  check_blade(s, n);
  check_blade(t, n);
  // Transpositions: pairs (a in S, b in T) with a > b.
  int swaps = 0;
  std::uint32_t a = s >> 1;
  while (a != 0) {
    swaps += std::popcount(a & t);
    a >>= 1;
  }
  swaps += std::popcount(s & t);  // each e_j e_j contributes -1
  int sign = (swaps % 2 == 0) ? 1 : -1;
  return {sign, s ^ t};
}

BladeSignL blade_sign_l(int j, std::uint32_t t, int n) {
  check_blade(t, n);
  if (j < 1 || j > n) {
    throw std::invalid_argument("generator index " + std::to_string(j) +
                                " out of range for n=" + std::to_string(n));
  }
  const std::uint32_t jbit = 1u << (j - 1);
  const std::uint32_t t_j = t ^ jbit;
  const int n_part = (t_j & jbit) != 0 ? 1 : 0;     // N(j cap T_j)
  const int p_part = std::popcount(t_j & (jbit - 1u));  // elements of T_j below j
  return {n_part + p_part, t_j};
}

Multivector::Multivector(int n) : n_(n) {
  check_dimension(n);
  c_.assign(std::size_t{1} << n, cplx{0.0, 0.0});
}

Multivector Multivector::scalar(int n, cplx value) {
  Multivector m(n);
  m.c_[0] = value;
  return m;
}

Multivector Multivector::blade(int n, std::uint32_t mask, cplx value) {
  check_blade(mask, n);
  Multivector m(n);
  m.c_[mask] = value;
  return m;
}

Multivector Multivector::basis(int n, int j) {
  if (j < 1 || j > n) {
    throw std::invalid_argument("generator index out of range");
  }
  return blade(n, 1u << (j - 1));
}

Multivector Multivector::nsc() const {
  Multivector m = *this;
  m.c_[0] = cplx{0.0, 0.0};
  return m;
}

static void require_same_dim(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("multivector dimension mismatch: " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(cplx s) {
  for (auto& v : c_) v *= s;
  return *this;
}

double Multivector::norm_sq() const {
  double acc = 0.0;
  for (const auto& v : c_) acc += std::norm(v);
  return acc;
}

double Multivector::norm() const { return std::sqrt(norm_sq()); }

Multivector multiply(const Multivector& a, const Multivector& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  const std::uint32_t nb = static_cast<std::uint32_t>(a.num_blades());
  Multivector out(n);
  for (std::uint32_t s = 0; s < nb; ++s) {
    const cplx ca = a[s];
    if (ca == cplx{0.0, 0.0}) continue;
    for (std::uint32_t t = 0; t < nb; ++t) {
      const cplx cb = b[t];
      if (cb == cplx{0.0, 0.0}) continue;
      const BladeProduct p = blade_product(s, t, n);
      out[p.mask] += static_cast<double>(p.sign) * ca * cb;
    }
  }
  return out;
}

Multivector conjugate(const Multivector& a) {
  const int n = a.dim();
  Multivector out(n);
  for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(a.num_blades());
       ++mask) {
    const int k = blade_grade(mask);
    const int sign = ((k * (k + 1) / 2) % 2 == 0) ? 1 : -1;
    out[mask] = static_cast<double>(sign) * std::conj(a[mask]);
  }
  return out;
}

cplx scalar_pairing(const Multivector& a, const Multivector& b) {
  return multiply(conjugate(a), b).sc();
}

Paravector::Paravector(double scalar_part, std::vector<double> vector_part)
    : x0(scalar_part), vec(std::move(vector_part)) {
  check_dimension(dim());
}

double Paravector::norm_sq() const {
  double acc = x0 * x0;
  for (double v : vec) acc += v * v;
  return acc;
}

double Paravector::norm() const { return std::sqrt(norm_sq()); }

Paravector Paravector::conj() const {
  Paravector p = *this;
  for (double& v : p.vec) v = -v;
  return p;
}

Multivector Paravector::to_multivector() const {
  Multivector m(dim());
  m[0] = cplx{x0, 0.0};
  for (int j = 1; j <= dim(); ++j) m[1u << (j - 1)] = cplx{vec[j - 1], 0.0};
  return m;
}

Multivector paravector_inverse(const Paravector& x) {
  const double nsq = x.norm_sq();
  if (nsq == 0.0) {
    throw std::domain_error("paravector_inverse: zero paravector");
  }
  Multivector m = x.conj().to_multivector();
  m *= cplx{1.0 / nsq, 0.0};
  return m;
}

}  // namespace clifharm
