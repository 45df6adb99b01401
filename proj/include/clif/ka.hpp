#pragma once
#include "clif/core.hpp"

namespace clif {

struct VolumeForm {
  Signature sig;
  Multivector tau;
  int square_sign = 1;
};

// +1 iff p-q = 0,1,4,5 mod 8
int volume_sign_rule(const Signature& s);
// throws std::logic_error if the rule and the actual product disagree
VolumeForm volume_form(const Signature& s);
Multivector tau(const Signature& s);

Multivector hodge(const Multivector& a);

Multivector rho(const Signature& s, int sign);
Multivector projector_pm(const Multivector& a, int sign);

enum class Part { lower, upper };
Multivector truncate(const Multivector& a, Part part);
Multivector truncated_product(const Multivector& a, const Multivector& b, int sign);

struct SplitResult {
  Multivector parallel;
  Multivector orthogonal;
  Multivector top;
};

// theta must be a real unit 1-form, |g*(theta,theta) - 1| <= 1e-9
void check_unit_one_form(const Multivector& theta);
SplitResult split_parallel_orthogonal(const Multivector& theta, const Multivector& w);
Multivector project_parallel(const Multivector& theta, const Multivector& w);
Multivector project_orthogonal(const Multivector& theta, const Multivector& w);

enum class Relation { parallel, orthogonal };
bool parallelism_predicate(const Multivector& theta, const Multivector& w, Relation kind,
                           double tol);

}  // namespace clif
