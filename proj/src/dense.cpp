#include "clif/dense.hpp"

#include <omp.h>

namespace clif::dense {

std::vector<cplx> to_dense(const Multivector& a) {
  std::vector<cplx> v(a.sig().dim(), cplx(0.0));
  for (auto& [m, c] : a.terms()) v[m] = c;
  return v;
}

Multivector from_dense(const Signature& s, const std::vector<cplx>& v, Field f) {
  Multivector::Terms t;
  for (std::size_t m = 0; m < v.size(); ++m)
    if (v[m] != cplx(0.0)) t.emplace(Mask(m), v[m]);
  return Multivector(s, std::move(t), f);
}

void product_serial(const Signature& s, const cplx* a, const cplx* b, cplx* out) {
  const Mask dim = Mask(s.dim());
  for (Mask r = 0; r < dim; ++r) out[r] = 0.0;
  for (Mask i = 0; i < dim; ++i) {
    if (a[i] == cplx(0.0)) continue;
    for (Mask j = 0; j < dim; ++j) {
      if (b[j] == cplx(0.0)) continue;
      out[i ^ j] += double(blade_product_sign(s, i, j)) * a[i] * b[j];
    }
  }
}

// each thread owns a slice of output blades, so no reduction is needed:
// out[r] = sum_i a[i] b[i^r]
void product_omp(const Signature& s, const cplx* a, const cplx* b, cplx* out) {
  const long dim = long(s.dim());
#pragma omp parallel for schedule(static)
  for (long r = 0; r < dim; ++r) {
    cplx acc = 0.0;
    for (Mask i = 0; i < Mask(dim); ++i) {
      if (a[i] == cplx(0.0)) continue;
      Mask j = i ^ Mask(r);
      if (b[j] == cplx(0.0)) continue;
      acc += double(blade_product_sign(s, i, j)) * a[i] * b[j];
    }
    out[r] = acc;
  }
}

namespace {

Multivector run(const Multivector& a, const Multivector& b,
                void (*kernel)(const Signature&, const cplx*, const cplx*, cplx*)) {
  if (!(a.sig() == b.sig())) throw InvalidInput("signature mismatch");
  auto da = to_dense(a);
  auto db = to_dense(b);
  std::vector<cplx> out(da.size());
  kernel(a.sig(), da.data(), db.data(), out.data());
  Field f = (a.is_complex() || b.is_complex()) ? Field::complex : Field::real;
  return from_dense(a.sig(), out, f);
}

}  // namespace

Multivector geometric_product_serial(const Multivector& a, const Multivector& b) {
  return run(a, b, product_serial);
}

Multivector geometric_product_omp(const Multivector& a, const Multivector& b) {
  return run(a, b, product_omp);
}

}  // namespace clif::dense
