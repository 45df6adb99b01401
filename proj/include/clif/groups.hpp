#pragma once
#include <Eigen/Dense>

#include "clif/core.hpp"

namespace clif {

Multivector versor_inverse(const Multivector& a, double tol = 1e-10);
Multivector reflect(const Multivector& u, const Multivector& v);
Multivector twisted_adjoint(const Multivector& a, const Multivector& x);
Multivector apply_versor(const Multivector& a, const Multivector& x);

// series fallback stops once a term drops below tol*(1+|result|), at most 64 terms
Multivector rotor_exp(const Multivector& B, double tol = 1e-14);

Eigen::MatrixXd versor_to_matrix(const Multivector& a);
Eigen::MatrixXd metric_matrix(const Signature& s);

enum class Verdict { none, pin, spin, spin_plus };
const char* verdict_name(Verdict v);

struct MembershipReport {
  bool is_even = false;
  double norm_N = 0.0;
  bool preserves_vectors = false;
  Verdict verdict = Verdict::none;
};

MembershipReport membership(const Multivector& a, double tol = 1e-9);

// g(u, v) for grade-1 u, v
double vector_inner(const Multivector& u, const Multivector& v);

}  // namespace clif
