#include "clif/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clif/dense.hpp"

namespace clif {

Signature::Signature(int p_, int q_) : p(p_), q(q_) {
  if (p < 0 || q < 0 || p + q > kMaxDim)
    throw InvalidInput("signature (" + std::to_string(p) + "," + std::to_string(q) +
                       ") out of range; need p,q >= 0 and p+q <= 16");
}

Mask mask_from_indices(const Signature& s, const std::vector<int>& indices) {
  Mask m = 0;
  int prev = 0;
  for (int i : indices) {
    if (i < 1 || i > s.n())
      throw InvalidInput("blade index " + std::to_string(i) + " outside 1.." +
                         std::to_string(s.n()));
    if (i <= prev) throw InvalidInput("blade indices must be strictly ascending");
    m |= Mask(1) << (i - 1);
    prev = i;
  }
  return m;
}

std::vector<int> indices_from_mask(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i + 1);
  return out;
}

namespace {

void check_same(const Multivector& a, const Multivector& b) {
  if (!(a.sig() == b.sig()))
    throw InvalidInput("signature mismatch: (" + std::to_string(a.sig().p) + "," +
                       std::to_string(a.sig().q) + ") vs (" + std::to_string(b.sig().p) +
                       "," + std::to_string(b.sig().q) + ")");
}

Field join(Field a, Field b) {
  return (a == Field::complex || b == Field::complex) ? Field::complex : Field::real;
}

void accumulate(Multivector::Terms& t, Mask m, cplx c) {
  auto [it, fresh] = t.emplace(m, c);
  if (!fresh) it->second += c;
}

}  // namespace

Multivector::Multivector(Signature s, Terms terms, Field f) : sig_(s), field_(f) {
  Mask full = s.full_mask();
  for (auto& [m, c] : terms) {
    if (m & ~full) throw InvalidInput("blade references an index beyond n");
    if (c == cplx(0.0)) continue;
    if (c.imag() != 0.0) field_ = Field::complex;
    terms_.emplace(m, c);
  }
}

Multivector Multivector::scalar(Signature s, cplx v) {
  return Multivector(s, Terms{{0, v}}, v.imag() != 0.0 ? Field::complex : Field::real);
}

Multivector Multivector::blade(Signature s, Mask m, cplx c) {
  return Multivector(s, Terms{{m, c}}, c.imag() != 0.0 ? Field::complex : Field::real);
}

cplx Multivector::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

double Multivector::max_abs() const {
  double r = 0.0;
  for (auto& [m, c] : terms_) r = std::max(r, std::abs(c));
  return r;
}

Multivector Multivector::as_complex() const {
  Multivector r = *this;
  r.field_ = Field::complex;
  return r;
}

Multivector Multivector::real_part() const {
  Terms t;
  for (auto& [m, c] : terms_) t.emplace(m, c.real());
  return Multivector(sig_, std::move(t), Field::real);
}

Multivector Multivector::imag_part() const {
  Terms t;
  for (auto& [m, c] : terms_) t.emplace(m, c.imag());
  return Multivector(sig_, std::move(t), Field::real);
}

Multivector basis_blade(const Signature& s, const std::vector<int>& indices) {
  return Multivector::blade(s, mask_from_indices(s, indices));
}

Multivector linear_combine(const std::vector<std::pair<cplx, Multivector>>& pairs) {
  if (pairs.empty()) return Multivector();
  Signature s = pairs.front().second.sig();
  Field f = Field::real;
  Multivector::Terms t;
  for (auto& [c, mv] : pairs) {
    if (!(mv.sig() == s)) check_same(pairs.front().second, mv);
    f = join(f, mv.field());
    if (c.imag() != 0.0) f = Field::complex;
    for (auto& [m, v] : mv.terms()) accumulate(t, m, c * v);
  }
  return Multivector(s, std::move(t), f);
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  return linear_combine({{1.0, a}, {1.0, b}});
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  return linear_combine({{1.0, a}, {-1.0, b}});
}

Multivector operator-(const Multivector& a) { return linear_combine({{-1.0, a}}); }

Multivector operator*(cplx c, const Multivector& a) { return linear_combine({{c, a}}); }

Multivector operator*(double c, const Multivector& a) {
  return linear_combine({{cplx(c), a}});
}

Multivector geometric_product_sparse(const Multivector& a, const Multivector& b) {
  check_same(a, b);
  const Signature& s = a.sig();
  Multivector::Terms t;
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms())
      accumulate(t, ma ^ mb, double(blade_product_sign(s, ma, mb)) * ca * cb);
  return Multivector(s, std::move(t), join(a.field(), b.field()));
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  check_same(a, b);
  if (a.terms().size() * b.terms().size() > dense::kDenseThreshold)
    return dense::geometric_product_omp(a, b);
  return geometric_product_sparse(a, b);
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  check_same(a, b);
  Multivector::Terms t;
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      accumulate(t, ma | mb, double(reorder_sign(ma, mb)) * ca * cb);
    }
  return Multivector(a.sig(), std::move(t), join(a.field(), b.field()));
}

Multivector left_contraction(const Multivector& a, const Multivector& b) {
  check_same(a, b);
  const Signature& s = a.sig();
  Multivector::Terms t;
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      if ((ma & mb) != ma) continue;
      accumulate(t, ma ^ mb, double(blade_product_sign(s, ma, mb)) * ca * cb);
    }
  return Multivector(s, std::move(t), join(a.field(), b.field()));
}

Multivector frame_contraction(int i, const Multivector& b) {
  if (i < 1 || i > b.sig().n()) throw InvalidInput("frame index out of range");
  Mask bit = Mask(1) << (i - 1);
  Multivector::Terms t;
  for (auto& [m, c] : b.terms())
    if (m & bit) accumulate(t, m ^ bit, double(reorder_sign(bit, m)) * c);
  return Multivector(b.sig(), std::move(t), b.field());
}

Multivector contracted_wedge(const Multivector& a, const Multivector& b, int d) {
  check_same(a, b);
  if (d < 0) throw InvalidInput("contracted wedge order must be >= 0");
  if (d == 0) return wedge(a, b);
  const Signature& s = a.sig();
  Multivector acc(s, join(a.field(), b.field()));
  for (int i = 1; i <= s.n(); ++i) {
    Multivector ai = frame_contraction(i, a);
    if (ai.is_zero()) continue;
    Multivector bi = frame_contraction(i, b);
    if (bi.is_zero()) continue;
    acc = acc + double(s.metric(i)) * contracted_wedge(ai, bi, d - 1);
  }
  return acc;
}

Multivector grade_project(const Multivector& a, int k) {
  Multivector::Terms t;
  for (auto& [m, c] : a.terms())
    if (grade_of(m) == k) t.emplace(m, c);
  return Multivector(a.sig(), std::move(t), a.field());
}

bool is_homogeneous(const Multivector& a, int k, double tol) {
  for (auto& [m, c] : a.terms())
    if (grade_of(m) != k && std::abs(c) > tol) return false;
  return true;
}

Multivector involution(const Multivector& a, Involution kind) {
  Multivector::Terms t;
  for (auto& [m, c] : a.terms()) {
    int k = grade_of(m);
    int e = 0;
    switch (kind) {
      case Involution::grade_involution: e = k; break;
      case Involution::reversion: e = k * (k - 1) / 2; break;
      case Involution::conjugation: e = k * (k + 1) / 2; break;
    }
    t.emplace(m, (e & 1) ? -c : c);
  }
  return Multivector(a.sig(), std::move(t), a.field());
}

Norms norms(const Multivector& a) {
  return {geometric_product(reversion(a), a).scalar_part(),
          geometric_product(conjugation(a), a).scalar_part()};
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  check_same(a, b);
  double r = 0.0;
  for (auto& [m, c] : a.terms()) r = std::max(r, std::abs(c - b.coeff(m)));
  for (auto& [m, c] : b.terms())
    if (!a.terms().count(m)) r = std::max(r, std::abs(c));
  return r;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return max_abs_diff(a, b) <= tol * scale;
}

}  // namespace clif
