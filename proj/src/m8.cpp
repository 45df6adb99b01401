#include "clif/m8.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/SVD>

#include "clif/ka.hpp"

namespace clif {

namespace {

void check16(const RVec& x) {
  if (x.size() != 16) throw InvalidInput("cl8 spinors have 16 components");
  if (!x.allFinite()) throw InvalidInput("non-finite spinor component");
}

const std::vector<RMat>& all_gammas() {
  static const std::vector<RMat> g = [] {
    std::vector<RMat> out(256);
    for (Mask m = 0; m < 256; ++m) out[m] = gamma_product(cl8(), m).real();
    return out;
  }();
  return g;
}

void check_sig8(const Multivector& a) {
  if (!(a.sig() == kSig8)) throw InvalidInput("expected a multivector over sig (8,0)");
}

double fro(const RMat& m) { return m.norm(); }

}  // namespace

const RepBundle& cl8() {
  static const RepBundle b = builtin_gammas("cl8");
  return b;
}

const RMat& gamma8(Mask m) {
  if (m >= 256) throw InvalidInput("blade outside sig (8,0)");
  return all_gammas()[m];
}

const RMat& chirality8() { return gamma8(0xFF); }

double pairing(const RVec& x, const RVec& y) {
  check16(x);
  check16(y);
  return x.dot(y);
}

Multivector gen_bilinear(const RVec& x, const RVec& y, int k) {
  if (k < 0 || k > 8) throw InvalidInput("grade must be in 0..8");
  check16(x);
  check16(y);
  Multivector::Terms t;
  for (Mask m = 0; m < 256; ++m)
    if (grade_of(m) == k) t.emplace(m, x.dot(gamma8(m) * y));
  return Multivector(kSig8, std::move(t));
}

Multivector fierz_polyform(const RVec& x, const RVec& y) {
  check16(x);
  check16(y);
  Multivector::Terms t;
  for (Mask m = 0; m < 256; ++m) t.emplace(m, x.dot(gamma8(m) * y) / 16.0);
  return Multivector(kSig8, std::move(t));
}

RMat quantize(const Multivector& a) {
  check_sig8(a);
  if (a.is_complex()) throw InvalidInput("quantize expects a real polyform");
  RMat out = RMat::Zero(16, 16);
  for (auto& [m, c] : a.terms()) out += c.real() * gamma8(m);
  return out;
}

Multivector dequantize(const RMat& T) {
  if (T.rows() != 16 || T.cols() != 16) throw InvalidInput("expected a 16x16 matrix");
  Multivector::Terms t;
  // gamma_M is orthogonal, so gamma_M^{-1} = gamma_M^T
  for (Mask m = 0; m < 256; ++m) t.emplace(m, (T * gamma8(m).transpose()).trace() / 16.0);
  return Multivector(kSig8, std::move(t));
}

Multivector dequantize(const RepBundle& rep, const CMat& T) {
  const Signature& s = rep.sig;
  int r = (((s.p - s.q) % 8) + 8) % 8;
  if (r == 1 || r == 5)
    throw UnsupportedSignature("dequantization needs p - q != 1, 5 mod 8; the gamma morphism is not injective here");
  if (T.rows() != rep.dim || T.cols() != rep.dim) throw InvalidInput("matrix size does not match bundle");
  Multivector::Terms t;
  for (Mask m = 0; m < Mask(s.dim()); ++m) {
    CMat g = gamma_product(rep, m);
    // g g = sign I, and represent() carries e^M to metric_sign * g
    double inv_sign = blade_product_sign(s, m, m);
    cplx c = (T * g).trace() * inv_sign * double(metric_sign(s, m)) / double(rep.dim);
    t.emplace(m, c);
  }
  Multivector out(s, std::move(t));
  return rep.field == Field::real ? out.real_part() : out;
}

double FierzResidual::max() const { return std::max({polyform, matrix, agreement}); }

FierzResidual fierz_identity_residual(const RVec& x1, const RVec& x2, const RVec& x3,
                                      const RVec& x4) {
  Multivector E12 = fierz_polyform(x1, x2), E34 = fierz_polyform(x3, x4),
              E14 = fierz_polyform(x1, x4);
  double b32 = pairing(x3, x2);
  double scale = x1.norm() * x2.norm() * x3.norm() * x4.norm();
  if (scale == 0.0) scale = 1.0;
  FierzResidual r;
  Multivector lhs = E12 * E34;
  r.polyform = max_abs_diff(lhs, b32 * E14) * 16.0 / scale;
  RMat M12 = x1 * x2.transpose(), M34 = x3 * x4.transpose(), M14 = x1 * x4.transpose();
  RMat mlhs = M12 * M34;
  r.matrix = fro(mlhs - b32 * M14) / scale;
  r.agreement = fro(quantize(lhs) - mlhs) / scale;
  return r;
}

ComplexBilinear complexified_bilinears(const RVec& xR, const RVec& xI, int k) {
  if (k < 0 || k > 8) throw InvalidInput("grade must be in 0..8");
  check16(xR);
  check16(xI);
  Multivector::Terms t;
  for (Mask m = 0; m < 256; ++m) {
    if (grade_of(m) != k) continue;
    const RMat& g = gamma8(m);
    RVec gR = g * xR, gI = g * xI;
    t.emplace(m, cplx(xR.dot(gR) - xI.dot(gI), xR.dot(gI) + xI.dot(gR)));
  }
  bool surv = std::find(kM8Grades.begin(), kM8Grades.end(), k) != kM8Grades.end();
  return {Multivector(kSig8, std::move(t), Field::complex), surv};
}

M8Class classify_m8(const RVec& xR, const RVec& xI, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tol must be positive");
  M8Class c;
  double thr = tol * (1.0 + xR.squaredNorm() + xI.squaredNorm());
  for (int i = 0; i < 5; ++i) {
    c.bilinears[i] = complexified_bilinears(xR, xI, kM8Grades[i]).value;
    c.pattern[i] = c.bilinears[i].max_abs() > thr;
    if (c.pattern[i]) c.label |= 1 << i;
  }
  return c;
}

std::vector<int> classify_m8_batch_serial(const std::vector<std::pair<RVec, RVec>>& v,
                                          double tol) {
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = classify_m8(v[i].first, v[i].second, tol).label;
  return out;
}

std::vector<int> classify_m8_batch(const std::vector<std::pair<RVec, RVec>>& v, double tol) {
  all_gammas();
  std::vector<int> out(v.size());
  const long n = long(v.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = classify_m8(v[i].first, v[i].second, tol).label;
  return out;
}

ConstraintOperator build_constraint_operator(const Flux& flux) {
  for (double x : flux.f)
    if (!std::isfinite(x)) throw InvalidInput("non-finite flux");
  for (double x : flux.dDelta)
    if (!std::isfinite(x)) throw InvalidInput("non-finite flux");
  if (!std::isfinite(flux.kappa)) throw InvalidInput("non-finite kappa");

  // collect F on ascending blades; an entry given under a permutation picks up its sign,
  // and two entries for the same blade must agree
  std::map<Mask, double> F;
  for (const FluxEntry& e : flux.F) {
    if (!std::isfinite(e.value)) throw InvalidInput("non-finite flux");
    std::array<int, 4> idx = e.indices;
    for (int i : idx)
      if (i < 1 || i > 8) throw InvalidInput("F index out of range 1..8");
    int sign = 1;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        if (idx[a] == idx[b]) {
          if (e.value != 0.0) throw InvalidInput("F is not antisymmetric: repeated index with nonzero value");
          sign = 0;
        }
        if (idx[a] > idx[b]) sign = -sign;
      }
    if (sign == 0) continue;
    Mask m = 0;
    for (int i : idx) m |= Mask(1) << (i - 1);
    double v = sign * e.value;
    auto [it, fresh] = F.emplace(m, v);
    if (!fresh && std::abs(it->second - v) > 1e-12 * std::max(1.0, std::abs(v)))
      throw InvalidInput("F is not antisymmetric: conflicting values for one index set");
  }

  RMat Q = RMat::Zero(16, 16);
  for (int m = 0; m < 8; ++m) Q += 0.5 * flux.dDelta[m] * gamma8(Mask(1) << m);
  for (auto& [m, v] : F) Q -= (v / 12.0) * gamma8(m);
  for (int p = 0; p < 8; ++p)
    if (flux.f[p] != 0.0)
      Q -= (flux.f[p] / 6.0) * quantize(hodge(Multivector::blade(kSig8, Mask(1) << p)));
  Q -= flux.kappa * chirality8();
  return {Q, flux};
}

std::vector<RVec> kernel(const RMat& Q, double tol) {
  if (Q.rows() != Q.cols()) throw InvalidInput("kernel expects a square matrix");
  Eigen::JacobiSVD<RMat> svd(Q, Eigen::ComputeFullV);
  const RVec& s = svd.singularValues();
  double smax = s.size() ? s[0] : 0.0;
  std::vector<RVec> out;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (smax == 0.0 || s[i] <= tol * smax) out.push_back(svd.matrixV().col(i));
  return out;
}

double cgk_residual(const RMat& Q, const RVec& x, const RVec& y) {
  // reversion is the B-transpose, so E_{x,y} rev(Q) quantizes to x (Q y)^T
  Multivector Qc = dequantize(Q);
  Multivector a = fierz_polyform(x, y) * reversion(Qc);
  Multivector b = Qc * fierz_polyform(y, x);
  double scale = std::max(1.0, Qc.max_abs()) * std::max(1e-300, x.norm() * y.norm());
  return (a.max_abs() + b.max_abs()) / scale;
}

}  // namespace clif
