#pragma once
#include <array>
#include <vector>

#include "clif/reps.hpp"

namespace clif {

// real 16-component spinors in the cl8 basis
const Signature kSig8{8, 0};

const RepBundle& cl8();
// gamma_M over the ascending indices of M, real 16x16, cached
const RMat& gamma8(Mask m);
const RMat& chirality8();

double pairing(const RVec& x, const RVec& y);
Multivector gen_bilinear(const RVec& x, const RVec& y, int k);
Multivector fierz_polyform(const RVec& x, const RVec& y);

RMat quantize(const Multivector& a);
Multivector dequantize(const RMat& T);
// general trace-pairing inverse of represent(); rejects the non-simple signatures
Multivector dequantize(const RepBundle& rep, const CMat& T);

struct FierzResidual {
  double polyform = 0.0;
  double matrix = 0.0;
  double agreement = 0.0;  // quantize(polyform product) against the matrix product
  double max() const;
};
FierzResidual fierz_identity_residual(const RVec& x1, const RVec& x2, const RVec& x3,
                                      const RVec& x4);

struct ComplexBilinear {
  Multivector value;
  bool surviving = true;  // k in {0,1,4,5,8}
};
ComplexBilinear complexified_bilinears(const RVec& xR, const RVec& xI, int k);

constexpr std::array<int, 5> kM8Grades{0, 1, 4, 5, 8};

struct M8Class {
  std::array<bool, 5> pattern{};
  int label = 0;
  std::array<Multivector, 5> bilinears;
};
M8Class classify_m8(const RVec& xR, const RVec& xI, double tol = 1e-10);
std::vector<int> classify_m8_batch_serial(const std::vector<std::pair<RVec, RVec>>& v, double tol);
std::vector<int> classify_m8_batch(const std::vector<std::pair<RVec, RVec>>& v, double tol);

struct FluxEntry {
  std::array<int, 4> indices{};  // 1-based, distinct
  double value = 0.0;
};

struct Flux {
  std::array<double, 8> f{};
  std::vector<FluxEntry> F;
  std::array<double, 8> dDelta{};
  double kappa = 0.0;
};

struct ConstraintOperator {
  RMat Q;
  Flux flux;
};

ConstraintOperator build_constraint_operator(const Flux& flux);
std::vector<RVec> kernel(const RMat& Q, double tol = 1e-10);
double cgk_residual(const RMat& Q, const RVec& x, const RVec& y);

}  // namespace clif
