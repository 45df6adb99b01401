#pragma once
#include <vector>

#include "clif/core.hpp"

// Dense coefficient arrays indexed by blade mask. The OpenMP kernels are what
// geometric_product dispatches to for large operands; the serial versions are
// kept as the reference they are tested and benchmarked against.
namespace clif::dense {

std::vector<cplx> to_dense(const Multivector& a);
Multivector from_dense(const Signature& s, const std::vector<cplx>& v, Field f);

void product_serial(const Signature& s, const cplx* a, const cplx* b, cplx* out);
void product_omp(const Signature& s, const cplx* a, const cplx* b, cplx* out);

Multivector geometric_product_serial(const Multivector& a, const Multivector& b);
Multivector geometric_product_omp(const Multivector& a, const Multivector& b);

// operand size (product of term counts) above which geometric_product goes dense
constexpr std::size_t kDenseThreshold = 1 << 14;

}  // namespace clif::dense
