#pragma once
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clif/core.hpp"

namespace clif {

using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

enum class Ring { R, C, H };
const char* ring_name(Ring r);
int ring_real_dim(Ring r);

// Mat(dim, ring) repeated `summands` times; reused for spinor spaces ring^dim
struct AlgebraDescriptor {
  Ring ring = Ring::R;
  int dim = 1;
  int summands = 1;
  bool operator==(const AlgebraDescriptor&) const = default;
};
using SpinorSpaceDescriptor = AlgebraDescriptor;

AlgebraDescriptor classify_real(int p, int q);
AlgebraDescriptor classify_complex(int n);

enum class SpinorKind { algebraic, classical, even_subalgebra };
AlgebraDescriptor spinor_space(int p, int q, SpinorKind kind);

struct RepBundle {
  Signature sig;
  int dim = 0;
  Field field = Field::complex;
  std::vector<CMat> gammas;  // gamma_1 .. gamma_n, lower index
};

// pauli, dirac, weyl, cl8
RepBundle builtin_gammas(const std::string& name);
double check_clifford_relations(const RepBundle& rep);

// ordered product gamma_{i1} ... gamma_{ik} over the ascending indices of m
CMat gamma_product(const RepBundle& rep, Mask m);
// algebra morphism e^i -> g^{ii} gamma_i
CMat represent(const RepBundle& rep, const Multivector& a);

struct Similarity {
  CMat S;
  double residual = 0.0;
};
Similarity dirac_weyl_similarity();

struct IdempotentRep {
  Signature sig;
  int N = 0;
  std::vector<Multivector> f;     // f_A = E_AA
  std::vector<Multivector> Ecol;  // E_A1, basis of the left ideal
  std::vector<Multivector> Erow;  // E_1A, dual basis
  std::vector<std::vector<Multivector>> Emat;
};

IdempotentRep rep_from_idempotent(const Signature& s, const Multivector& f1);
RMat extract_matrix(const IdempotentRep& rep, const Multivector& x);

}  // namespace clif
