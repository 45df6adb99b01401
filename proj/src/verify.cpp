#include "clif/verify.hpp"

#include <algorithm>
#include <cmath>

#include "clif/groups.hpp"
#include "clif/ka.hpp"
#include "clif/sampling.hpp"

namespace clif {

namespace {

SuiteReport fpk(long trials, Rng& rng) {
  if (trials == 0) trials = 1000;
  double worst = 0.0;
  bool ok = true;
  for (long t = 0; t < trials; ++t) {
    DiracSpinor psi = random_spinor(rng, t % 2 ? Rep::dirac : Rep::weyl);
    FpkReport r = fpk_residuals(bilinears(psi));
    worst = std::max({worst, r.max(), r.max_aux()});
    ok = ok && r.max() <= 1e-10 && r.max_aux() <= 1e-9;
  }
  return {"fpk", trials, worst, ok};
}

SuiteReport fierz(long trials, Rng& rng) {
  if (trials == 0) trials = 100;
  double worst = 0.0;
  for (long t = 0; t < trials; ++t) {
    RVec x1 = random_m8(rng), x2 = random_m8(rng), x3 = random_m8(rng), x4 = random_m8(rng);
    worst = std::max(worst, fierz_identity_residual(x1, x2, x3, x4).max());
    // rank-one form of the polyform
    RMat T = quantize(fierz_polyform(x1, x2));
    double rank_one = (T - x1 * x2.transpose()).cwiseAbs().maxCoeff() / (x1.norm() * x2.norm());
    worst = std::max(worst, rank_one);
  }
  return {"fierz", trials, worst, worst <= 1e-10};
}

double volume_residual(int p, int q) {
  Signature s(p, q);
  Multivector t = tau(s);
  Multivector sq = t * t;
  return max_abs_diff(sq, Multivector::scalar(s, double(volume_sign_rule(s))));
}

SuiteReport volume(long trials, Rng& rng) {
  double worst = 0.0;
  long count = 0;
  if (trials == 0) {
    for (int n = 0; n <= 8; ++n)
      for (int p = 0; p <= n; ++p, ++count) worst = std::max(worst, volume_residual(p, n - p));
  } else {
    std::uniform_int_distribution<int> dn(0, 8);
    for (; count < trials; ++count) {
      int n = dn(rng);
      int p = std::uniform_int_distribution<int>(0, n)(rng);
      worst = std::max(worst, volume_residual(p, n - p));
    }
  }
  return {"volume", trials, worst, worst == 0.0};
}

SuiteReport truncated(long trials, Rng& rng) {
  if (trials == 0) trials = 200;
  const Signature s(5, 0);
  Multivector theta = Multivector::blade(s, 1);
  double worst = 0.0;
  auto track = [&](const Multivector& a, const Multivector& b) {
    double scale = std::max(1.0, std::max(a.max_abs(), b.max_abs()));
    worst = std::max(worst, max_abs_diff(a, b) / scale);
  };
  for (long t = 0; t < trials; ++t) {
    Multivector a = truncate(random_multivector(rng, s), Part::lower);
    Multivector b = truncate(random_multivector(rng, s), Part::lower);
    for (int sign : {1, -1}) {
      Multivector Pa = projector_pm(a, sign), Pb = projector_pm(b, sign);
      track(2.0 * truncate(Pa, Part::lower), a);
      track(projector_pm(2.0 * truncate(Pa, Part::lower), sign), Pa);
      track(projector_pm(truncated_product(a, b, sign), sign), Pa * Pb);
      track(2.0 * truncate(Pa * Pb, Part::lower), truncated_product(a, b, sign));
    }
    Multivector w = random_multivector(rng, s), z = random_multivector(rng, s);
    Multivector wt = left_contraction(theta, w), zt = left_contraction(theta, z);
    Multivector wo = project_orthogonal(theta, w), zo = project_orthogonal(theta, z);
    Multivector wp = project_parallel(theta, w), zp = project_parallel(theta, z);
    Multivector wz = w * z;
    track(project_orthogonal(theta, wz), wo * zo + wp * zp);
    track(project_parallel(theta, wz), wo * zp + wp * zo);
    track(left_contraction(theta, wz), wt * zo + grade_involution(wo) * zt);
    track(project_orthogonal(theta, wz), wo * zo + grade_involution(wt) * zt);
  }
  return {"truncated", trials, worst, worst <= 1e-10};
}

SuiteReport groups(long trials, Rng& rng) {
  if (trials == 0) trials = 100;
  double worst = 0.0;
  std::uniform_int_distribution<int> dn(1, 5);
  for (long t = 0; t < trials; ++t) {
    int n = dn(rng);
    int p = std::uniform_int_distribution<int>(0, n)(rng);
    Signature s(p, n - p);
    Multivector a = random_unit_versor(rng, s, 2), b = random_unit_versor(rng, s, 3);
    Eigen::MatrixXd Ma = versor_to_matrix(a), Mb = versor_to_matrix(b);
    Eigen::MatrixXd G = metric_matrix(s);
    worst = std::max(worst, (versor_to_matrix(-a) - Ma).cwiseAbs().maxCoeff());
    worst = std::max(worst, (versor_to_matrix(a * b) - Ma * Mb).cwiseAbs().maxCoeff());
    worst = std::max(worst, (Ma.transpose() * G * Ma - G).cwiseAbs().maxCoeff());
    worst = std::max(worst, (Mb.transpose() * G * Mb - G).cwiseAbs().maxCoeff());
    Multivector u = random_nonisotropic_vector(rng, s);
    Multivector v = random_form(rng, s, 1), x = random_form(rng, s, 1);
    double lhs = vector_inner(reflect(u, v), reflect(u, x));
    worst = std::max(worst, std::abs(lhs - vector_inner(v, x)) /
                                std::max(1.0, std::abs(vector_inner(v, x))));
  }
  return {"groups", trials, worst, worst <= 1e-8};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fpk", "fierz", "volume", "truncated", "groups"};
  return names;
}

SuiteReport run_suite(const std::string& name, long trials, std::uint64_t seed) {
  if (trials < 0) throw InvalidInput("trials must be non-negative");
  Rng rng(seed);
  if (name == "fpk") return fpk(trials, rng);
  if (name == "fierz") return fierz(trials, rng);
  if (name == "volume") return volume(trials, rng);
  if (name == "truncated") return truncated(trials, rng);
  if (name == "groups") return groups(trials, rng);
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace clif
