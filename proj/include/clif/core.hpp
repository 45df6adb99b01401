#pragma once
#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "clif/errors.hpp"

namespace clif {

using cplx = std::complex<double>;
// bit i-1 set <=> generator e^i present
using Mask = std::uint32_t;

constexpr int kMaxDim = 16;

struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p_, int q_);

  int n() const { return p + q; }
  int metric(int i) const { return i <= p ? 1 : -1; }
  Mask neg_mask() const { return full_mask() & ~((Mask(1) << p) - 1); }
  Mask full_mask() const { return (Mask(1) << n()) - 1; }
  std::size_t dim() const { return std::size_t(1) << n(); }

  bool operator==(const Signature&) const = default;
};

enum class Field { real, complex };

inline int grade_of(Mask m) { return std::popcount(m); }

// sign picked up by e_A e_B when the generators are sorted into ascending order
inline int reorder_sign(Mask a, Mask b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

inline int metric_sign(const Signature& s, Mask shared) {
  return (std::popcount(shared & s.neg_mask()) & 1) ? -1 : 1;
}

inline int blade_product_sign(const Signature& s, Mask a, Mask b) {
  return reorder_sign(a, b) * metric_sign(s, a & b);
}

Mask mask_from_indices(const Signature& s, const std::vector<int>& indices);
std::vector<int> indices_from_mask(Mask m);

class Multivector {
 public:
  using Terms = std::map<Mask, cplx>;

  Multivector() = default;
  explicit Multivector(Signature s, Field f = Field::real) : sig_(s), field_(f) {}
  Multivector(Signature s, Terms terms, Field f = Field::real);

  static Multivector scalar(Signature s, cplx v);
  static Multivector blade(Signature s, Mask m, cplx c = 1.0);

  const Signature& sig() const { return sig_; }
  Field field() const { return field_; }
  bool is_complex() const { return field_ == Field::complex; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  cplx coeff(Mask m) const;
  cplx scalar_part() const { return coeff(0); }
  double max_abs() const;
  Multivector as_complex() const;
  // drops imaginary parts; caller asserts they are negligible
  Multivector real_part() const;
  Multivector imag_part() const;

 private:
  Signature sig_;
  Field field_ = Field::real;
  Terms terms_;
};

Multivector basis_blade(const Signature& s, const std::vector<int>& indices);
Multivector linear_combine(const std::vector<std::pair<cplx, Multivector>>& pairs);

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a);
Multivector operator*(cplx c, const Multivector& a);
Multivector operator*(double c, const Multivector& a);
inline Multivector operator*(const Multivector& a, double c) { return c * a; }

Multivector geometric_product(const Multivector& a, const Multivector& b);
// sparse blade loop, never dispatches to the dense kernels
Multivector geometric_product_sparse(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

Multivector wedge(const Multivector& a, const Multivector& b);
Multivector left_contraction(const Multivector& a, const Multivector& b);
// e_i contracted into b with e_i(e^j) = delta, no metric factor
Multivector frame_contraction(int i, const Multivector& b);
Multivector contracted_wedge(const Multivector& a, const Multivector& b, int d);

Multivector grade_project(const Multivector& a, int k);
bool is_homogeneous(const Multivector& a, int k, double tol = 0.0);

enum class Involution { grade_involution, reversion, conjugation };
Multivector involution(const Multivector& a, Involution kind);
inline Multivector grade_involution(const Multivector& a) {
  return involution(a, Involution::grade_involution);
}
inline Multivector reversion(const Multivector& a) {
  return involution(a, Involution::reversion);
}
inline Multivector conjugation(const Multivector& a) {
  return involution(a, Involution::conjugation);
}

struct Norms {
  cplx N;
  cplx Nprime;
};
Norms norms(const Multivector& a);

double max_abs_diff(const Multivector& a, const Multivector& b);
bool approx_equal(const Multivector& a, const Multivector& b, double tol);

}  // namespace clif
