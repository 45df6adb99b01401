#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "clif/reps.hpp"

namespace clif {

enum class Rep { weyl, dirac };
const char* rep_name(Rep r);
const RepBundle& bundle(Rep r);

struct DiracSpinor {
  Rep rep = Rep::weyl;
  std::array<cplx, 4> c{};
};

// S ordered 01,02,03,12,13,23
struct BilinearSet {
  double sigma = 0.0;
  std::array<double, 4> J{};
  std::array<double, 6> S{};
  std::array<double, 4> K{};
  double omega = 0.0;
};

constexpr std::array<std::pair<int, int>, 6> kSPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

CVec to_vec(const DiracSpinor& psi);
DiracSpinor from_vec(const CVec& v, Rep rep);
double norm_sq(const DiracSpinor& psi);

BilinearSet bilinears(const DiracSpinor& psi);
// largest absolute entry over all 16 covariants
double max_abs(const BilinearSet& b);

// Minkowski forms on sig (1,3), generator mu+1 <-> e^mu
struct BilinearForms {
  double sigma = 0.0;
  Multivector J, S, K, W;  // W = omega e^{0123}
};
BilinearForms bilinears_as_forms(const BilinearSet& b);

struct FpkReport {
  double j2 = 0.0;      // |J.J - sigma^2 - omega^2|
  double k2 = 0.0;      // |K.K + J.J|
  double jk = 0.0;      // |J.K|
  double wedge = 0.0;   // |J^K - (omega + sigma tau)(2S)|
  std::vector<double> aux;  // filled only when sigma^2+omega^2 > aux_cutoff
  double max() const;
  double max_aux() const;
};
FpkReport fpk_residuals(const BilinearSet& b, double aux_cutoff = 1e-6);

struct FierzAggregate {
  Multivector Z;
};
FierzAggregate fierz_aggregate(const BilinearSet& b);
// the variant sigma + J + S + iK g0123 + omega g0123 read literally with g0123 the
// product of lower-index gammas
FierzAggregate fierz_aggregate_literal(const BilinearSet& b);
bool is_boomerang(const FierzAggregate& z, double tol = 1e-10);

// the five rank-one relations Z M Z = 4 (psibar M psi) Z, relative
struct SingularReport {
  double zz = 0.0, zj = 0.0, zs = 0.0, zk = 0.0, zw = 0.0;
  double max() const;
};
SingularReport singular_residuals(const BilinearSet& b);
// Z = (Omega + J)(1 - i Omega^{-1} K tau), Omega = sigma + omega tau; nullopt if Omega = 0
std::optional<double> factorization_residual(const BilinearSet& b, double cutoff = 1e-6);

// a block counts as nonzero when its max-abs entry exceeds tol * (1 + |psi|^2)
struct ZeroPattern {
  bool sigma = false, J = false, S = false, K = false, omega = false;
};
ZeroPattern zero_pattern(const DiracSpinor& psi, double tol = 1e-10);

// 1..6, 0 for none (J = 0, or singular with S = K = 0)
int classify_lounesto(const DiracSpinor& psi, double tol = 1e-10);
std::string lounesto_label(int cls);
std::vector<int> classify_lounesto_batch_serial(const std::vector<DiracSpinor>& v, double tol);
std::vector<int> classify_lounesto_batch(const std::vector<DiracSpinor>& v, double tol);

DiracSpinor change_representation(const DiracSpinor& psi);

struct Reconstruction {
  DiracSpinor psi;
  double N = 0.0;
};
Reconstruction reconstruct(const BilinearSet& b, const std::optional<DiracSpinor>& eta = {},
                           Rep rep = Rep::weyl, double tol = 1e-10);

}  // namespace clif
