#include "clif/groups.hpp"

#include <algorithm>
#include <cmath>

namespace clif {

namespace {

bool is_scalar(const Multivector& x, double tol) {
  double scale = std::max(1.0, x.max_abs());
  for (auto& [m, c] : x.terms())
    if (m != 0 && std::abs(c) > tol * scale) return false;
  return true;
}

}  // namespace

Multivector versor_inverse(const Multivector& a, double tol) {
  Multivector rev = reversion(a);
  Multivector aa = geometric_product(rev, a);
  if (!is_scalar(aa, tol)) throw NonInvertible("not a versor: reverse(a) a is not scalar");
  cplx N = aa.scalar_part();
  if (std::abs(N) <= tol) throw NonInvertible("versor has null norm");
  return (1.0 / N) * rev;
}

double vector_inner(const Multivector& u, const Multivector& v) {
  return geometric_product(u, v).scalar_part().real();
}

Multivector reflect(const Multivector& u, const Multivector& v) {
  if (!is_homogeneous(u, 1) || !is_homogeneous(v, 1))
    throw InvalidInput("reflect expects two vectors");
  if (std::abs(vector_inner(u, u)) <= 1e-12) throw NonInvertible("isotropic reflection normal");
  return -geometric_product(geometric_product(u, v), versor_inverse(u));
}

Multivector twisted_adjoint(const Multivector& a, const Multivector& x) {
  return geometric_product(geometric_product(grade_involution(a), x), versor_inverse(a));
}

Multivector apply_versor(const Multivector& a, const Multivector& x) {
  return geometric_product(geometric_product(a, x), versor_inverse(a));
}

Multivector rotor_exp(const Multivector& B, double tol) {
  if (!is_homogeneous(B, 2)) throw InvalidInput("rotor_exp expects a bivector");
  const Signature& s = B.sig();
  Multivector one = Multivector::scalar(s, 1.0);
  Multivector B2 = geometric_product(B, B);
  if (!B.is_complex() && is_scalar(B2, 1e-13)) {
    double lambda = B2.scalar_part().real();
    if (lambda < 0) {
      double t = std::sqrt(-lambda);
      return std::cos(t) * one + (std::sin(t) / t) * B;
    }
    if (lambda > 0) {
      double t = std::sqrt(lambda);
      return std::cosh(t) * one + (std::sinh(t) / t) * B;
    }
    return one + B;
  }
  Multivector result = one, term = one;
  for (int k = 1; k <= 64; ++k) {
    term = (1.0 / k) * geometric_product(term, B);
    result = result + term;
    if (term.max_abs() < tol * (1.0 + result.max_abs())) return result;
  }
  throw ConvergenceError("rotor exponential series did not converge in 64 terms");
}

Eigen::MatrixXd metric_matrix(const Signature& s) {
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(s.n(), s.n());
  for (int i = 1; i <= s.n(); ++i) G(i - 1, i - 1) = s.metric(i);
  return G;
}

Eigen::MatrixXd versor_to_matrix(const Multivector& a) {
  const Signature& s = a.sig();
  int n = s.n();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int j = 1; j <= n; ++j) {
    Multivector y = twisted_adjoint(a, Multivector::blade(s, Mask(1) << (j - 1)));
    double scale = std::max(1.0, y.max_abs());
    for (auto& [m, c] : y.terms()) {
      if (grade_of(m) != 1) {
        if (std::abs(c) > 1e-9 * scale) throw NotAVersor("twisted adjoint leaves grade 1");
        continue;
      }
      if (std::abs(c.imag()) > 1e-9 * scale) throw NotAVersor("complex image of a vector");
      M(std::countr_zero(m), j - 1) = c.real();
    }
  }
  return M;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::none: return "none";
    case Verdict::pin: return "pin";
    case Verdict::spin: return "spin";
    case Verdict::spin_plus: return "spin_plus";
  }
  return "?";
}

MembershipReport membership(const Multivector& a, double tol) {
  MembershipReport r;
  double scale = std::max(1.0, a.max_abs());
  r.is_even = std::all_of(a.terms().begin(), a.terms().end(), [&](auto& t) {
    return grade_of(t.first) % 2 == 0 || std::abs(t.second) <= tol * scale;
  });
  Multivector aa = geometric_product(reversion(a), a);
  r.norm_N = aa.scalar_part().real();
  if (!is_scalar(aa, tol) || std::abs(r.norm_N) <= tol) return r;
  try {
    versor_to_matrix(a);
    r.preserves_vectors = true;
  } catch (const NotAVersor&) {
    return r;
  }
  if (std::abs(std::abs(r.norm_N) - 1.0) > tol) return r;
  if (!r.is_even)
    r.verdict = Verdict::pin;
  else
    r.verdict = std::abs(r.norm_N - 1.0) <= tol ? Verdict::spin_plus : Verdict::spin;
  return r;
}

}  // namespace clif
