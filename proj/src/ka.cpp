#include "clif/ka.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clif {

int volume_sign_rule(const Signature& s) {
  int r = ((s.p - s.q) % 8 + 8) % 8;
  return (r == 0 || r == 1 || r == 4 || r == 5) ? 1 : -1;
}

Multivector tau(const Signature& s) { return Multivector::blade(s, s.full_mask()); }

VolumeForm volume_form(const Signature& s) {
  VolumeForm v{s, tau(s), volume_sign_rule(s)};
  Multivector sq = geometric_product(v.tau, v.tau);
  Multivector expect = Multivector::scalar(s, double(v.square_sign));
  if (max_abs_diff(sq, expect) != 0.0)
    throw std::logic_error("tau*tau disagrees with the mod-8 sign rule");
  return v;
}

Multivector hodge(const Multivector& a) { return geometric_product(a, tau(a.sig())); }

Multivector rho(const Signature& s, int sign) {
  return 0.5 * (Multivector::scalar(s, 1.0) + double(sign) * tau(s));
}

Multivector projector_pm(const Multivector& a, int sign) {
  return geometric_product(a, rho(a.sig(), sign));
}

Multivector truncate(const Multivector& a, Part part) {
  int half = a.sig().n() / 2;
  Multivector::Terms t;
  for (auto& [m, c] : a.terms()) {
    bool low = grade_of(m) <= half;
    if (low == (part == Part::lower)) t.emplace(m, c);
  }
  return Multivector(a.sig(), std::move(t), a.field());
}

Multivector truncated_product(const Multivector& a, const Multivector& b, int sign) {
  Multivector prod = geometric_product(projector_pm(a, sign), projector_pm(b, sign));
  return 2.0 * truncate(prod, Part::lower);
}

void check_unit_one_form(const Multivector& theta) {
  if (theta.is_complex()) throw InvalidInput("theta must be real");
  if (!is_homogeneous(theta, 1)) throw InvalidInput("theta must be a 1-form");
  double g = 0.0;
  for (auto& [m, c] : theta.terms()) {
    int i = std::countr_zero(m) + 1;
    g += theta.sig().metric(i) * c.real() * c.real();
  }
  if (std::abs(g - 1.0) > 1e-9) throw InvalidInput("theta is not unit-normalized");
}

SplitResult split_parallel_orthogonal(const Multivector& theta, const Multivector& w) {
  check_unit_one_form(theta);
  SplitResult r;
  r.top = left_contraction(theta, w);
  r.parallel = wedge(theta, r.top);
  r.orthogonal = left_contraction(theta, wedge(theta, w));
  return r;
}

Multivector project_parallel(const Multivector& theta, const Multivector& w) {
  return wedge(theta, left_contraction(theta, w));
}

Multivector project_orthogonal(const Multivector& theta, const Multivector& w) {
  return left_contraction(theta, wedge(theta, w));
}

bool parallelism_predicate(const Multivector& theta, const Multivector& w, Relation kind,
                           double tol) {
  check_unit_one_form(theta);
  double scale = std::max(1.0, w.max_abs());
  Multivector tw = geometric_product(theta, w);
  Multivector wt = geometric_product(grade_involution(w), theta);
  bool direct, via_product;
  if (kind == Relation::parallel) {
    direct = wedge(theta, w).max_abs() <= tol * scale;
    via_product = (tw + wt).max_abs() <= 2.0 * tol * scale;
  } else {
    direct = left_contraction(theta, w).max_abs() <= tol * scale;
    via_product = (tw - wt).max_abs() <= 2.0 * tol * scale;
  }
  if (direct != via_product)
    throw std::logic_error("parallelism characterizations disagree");
  return direct;
}

}  // namespace clif
