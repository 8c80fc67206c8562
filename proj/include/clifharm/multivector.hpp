//==============================================================================
// multivector.hpp
// Complex Clifford algebra C^(n), n <= 8, with generators e_1..e_n satisfying
// e_j e_k + e_k e_j = -2 delta_jk.
// Blades are encoded as bitmasks: bit j-1 set iff generator j is present, so
// the empty mask is the scalar blade e_0 = 1 and coefficients live in a dense
// array indexed 0..2^n-1 (binary-counting blade order, "bitmask-v1").
// All sign bookkeeping is exact integer arithmetic.
//==============================================================================
#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

namespace clifharm {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 8;

inline constexpr double kPi = 3.14159265358979323846;

// Grade of a blade = number of generators in it.
inline int blade_grade(std::uint32_t mask) { return std::popcount(mask); }

struct BladeProduct {
  int sign;            // +1 or -1
  std::uint32_t mask;  // symmetric difference of the factors
};

void check_dimension(int n);
void check_blade(std::uint32_t mask, int n);

// e_S e_T = sign * e_{S xor T}.
// sign = (-1)^{#transpositions to interleave S and T} * (-1)^{|S & T|},
// the second factor from e_j e_j = -1.
BladeProduct blade_product(std::uint32_t s, std::uint32_t t, int n);

struct BladeSignL {
  int l;               // (-1)^l e_j e_{T_j} = e_T
  std::uint32_t t_j;   // T xor {j}
};

// Decomposition of a blade against one generator: T_j = T xor {j} and the
// parity l = N(j cap T_j) + P(j, T_j), where P counts elements of T_j below j.
BladeSignL blade_sign_l(int j, std::uint32_t t, int n);

class Multivector {
 public:
  Multivector() : n_(1), c_(2, cplx{0.0, 0.0}) {}
  explicit Multivector(int n);

  static Multivector scalar(int n, cplx value);
  static Multivector blade(int n, std::uint32_t mask, cplx value = 1.0);
  // The generator e_j, 1 <= j <= n.
  static Multivector basis(int n, int j);

  int dim() const { return n_; }
  int num_blades() const { return 1 << n_; }

  cplx& operator[](std::uint32_t mask) { return c_[mask]; }
  const cplx& operator[](std::uint32_t mask) const { return c_[mask]; }
  const std::vector<cplx>& coeffs() const { return c_; }

  cplx sc() const { return c_[0]; }
  Multivector nsc() const;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(cplx s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, cplx s) { return a *= s; }
  friend Multivector operator*(cplx s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) { return a *= cplx{-1.0, 0.0}; }

  double norm_sq() const;
  double norm() const;

 private:
  int n_;
  std::vector<cplx> c_;
};

// Full geometric product, bilinear extension of blade_product.
Multivector multiply(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return multiply(a, b);
}

// Clifford conjugation: anti-automorphism with e_j -> -e_j and complex
// conjugation of coefficients; on a grade-k blade the sign is (-1)^{k(k+1)/2}.
Multivector conjugate(const Multivector& a);

// Sc(conj(a) b) as a complex number; Re of it is the coefficient inner product.
cplx scalar_pairing(const Multivector& a, const Multivector& b);

// A point x_0 + x_1 e_1 + ... + x_n e_n of R^{n+1}.
struct Paravector {
  double x0 = 0.0;
  std::vector<double> vec;  // x_1 .. x_n

  Paravector() = default;
  Paravector(double scalar_part, std::vector<double> vector_part);

  int dim() const { return static_cast<int>(vec.size()); }
  double norm_sq() const;
  double norm() const;

  Paravector conj() const;  // x_0 - underline(x)
  Multivector to_multivector() const;
};

// x^{-1} = conj(x) / |x|^2; throws on the zero paravector.
Multivector paravector_inverse(const Paravector& x);

}  // namespace clifharm
