#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "clif/m8.hpp"
#include "clif/sampling.hpp"

using namespace clif;

namespace {

RVec unit(int i) {
  RVec x = RVec::Zero(16);
  x[i] = 1.0;
  return x;
}

Multivector blade8(std::vector<int> idx) { return basis_blade(kSig8, idx); }

}  // namespace

TEST_CASE("pairing is symmetric and gammas are B-self-adjoint") {
  Rng rng(1);
  CHECK(pairing(unit(3), unit(3)) == 1.0);
  for (int t = 0; t < 1000; ++t) {
    RVec x = random_m8(rng), y = random_m8(rng);
    CHECK(pairing(x, y) == pairing(y, x));
  }
  RVec x = random_m8(rng), y = random_m8(rng);
  for (int m = 0; m < 8; ++m) {
    const RMat& g = gamma8(Mask(1) << m);
    CHECK(std::abs(pairing(g * x, y) - pairing(x, g * y)) < 1e-12);
  }
  // type: B(gamma(a) x, y) = B(x, gamma(reversion a) y) on every grade
  for (int k = 0; k <= 8; ++k) {
    Multivector a = random_form(rng, kSig8, k);
    double lhs = pairing(quantize(a) * x, y), rhs = pairing(x, quantize(reversion(a)) * y);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
  }
  CHECK_THROWS_AS(pairing(RVec::Zero(3), y), InvalidInput);
}

TEST_CASE("generalized bilinears") {
  Rng rng(2);
  for (int t = 0; t < 1000; ++t) {
    RVec x = random_m8(rng);
    for (int k : {2, 3, 6, 7}) CHECK(gen_bilinear(x, x, k).max_abs() <= 1e-12 * x.squaredNorm());
  }
  RVec u = unit(5);
  CHECK(max_abs_diff(gen_bilinear(u, u, 0), Multivector::scalar(kSig8, 1.0)) == 0.0);
  // unit positive-chirality spinor: the top form is +e^{1..8}
  RVec plus = unit(2);
  REQUIRE((chirality8() * plus - plus).norm() == 0.0);
  CHECK(max_abs_diff(gen_bilinear(plus, plus, 8), Multivector::blade(kSig8, 0xFF)) == 0.0);
  CHECK_THROWS_AS(gen_bilinear(u, u, 9), InvalidInput);
}

TEST_CASE("quantize and dequantize") {
  Rng rng(3);
  CHECK(max_abs_diff(dequantize(RMat::Identity(16, 16)), Multivector::scalar(kSig8, 1.0)) == 0.0);
  CHECK(max_abs_diff(dequantize(quantize(blade8({1}))), blade8({1})) == 0.0);
  CHECK((quantize(blade8({1}) * blade8({2})) - gamma8(1) * gamma8(2)).norm() == 0.0);
  for (int t = 0; t < 5; ++t) {
    Multivector a = random_multivector(rng, kSig8), b = random_multivector(rng, kSig8);
    RMat lhs = quantize(a * b), rhs = quantize(a) * quantize(b);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10 * rhs.cwiseAbs().maxCoeff());
    CHECK(max_abs_diff(dequantize(quantize(a)), a) <= 1e-12 * a.max_abs());
    RMat T = RMat::Random(16, 16);
    CHECK((quantize(dequantize(T)) - T).cwiseAbs().maxCoeff() <= 1e-12);
  }
  // general trace-pairing inverse on the built-in bundles
  for (auto name : {"weyl", "dirac"}) {
    RepBundle r = builtin_gammas(name);
    Multivector a = random_multivector(rng, r.sig, Field::complex);
    CHECK(max_abs_diff(dequantize(r, represent(r, a)), a) <= 1e-12 * a.max_abs());
  }
  // Cl(1,0) on C^1: e1 -> 1 is not injective
  RepBundle line{Signature(1, 0), 1, Field::complex, {CMat::Identity(1, 1)}};
  CHECK_THROWS_AS(dequantize(line, CMat::Identity(1, 1)), UnsupportedSignature);
}

TEST_CASE("Fierz polyform and the four-spinor identity") {
  Rng rng(4);
  CHECK(fierz_polyform(RVec::Zero(16), RVec::Zero(16)).is_zero());
  for (int t = 0; t < 200; ++t) {
    RVec x = random_m8(rng), y = random_m8(rng), psi = random_m8(rng);
    Multivector E = fierz_polyform(x, y);
    RVec img = quantize(E) * psi;
    CHECK((img - pairing(psi, y) * x).norm() <= 1e-10 * x.norm() * y.norm() * psi.norm());
    CHECK(E.scalar_part().real() == doctest::Approx(pairing(x, y) / 16.0).epsilon(1e-12));
  }
  for (int t = 0; t < 100; ++t) {
    RVec a = random_m8(rng), b = random_m8(rng), c = random_m8(rng), d = random_m8(rng);
    CHECK(fierz_identity_residual(a, b, c, d).max() <= 1e-10);
  }
  RVec xi = random_m8(rng).normalized();
  Multivector E = fierz_polyform(xi, xi);
  CHECK(max_abs_diff(E * E, E) <= 1e-12);
  // x2 orthogonal to x3
  Multivector P = fierz_polyform(unit(0), unit(1)) * fierz_polyform(unit(2), unit(3));
  CHECK(P.max_abs() <= 1e-15);
}

TEST_CASE("complexified bilinears") {
  Rng rng(5);
  RVec xr = random_m8(rng), xi = random_m8(rng), z = RVec::Zero(16);
  for (int k = 0; k <= 8; ++k) {
    Multivector g = gen_bilinear(xr, xr, k);
    CHECK(max_abs_diff(complexified_bilinears(xr, z, k).value, g) == 0.0);
    CHECK(max_abs_diff(complexified_bilinears(z, xr, k).value, -g) == 0.0);
    ComplexBilinear same = complexified_bilinears(xr, xr, k);
    CHECK(max_abs_diff(same.value.real_part(), Multivector(kSig8)) <= 1e-12);
    CHECK(max_abs_diff(same.value.imag_part(), 2.0 * g) <= 1e-12);
    bool surv = k == 0 || k == 1 || k == 4 || k == 5 || k == 8;
    CHECK(complexified_bilinears(xr, xi, k).surviving == surv);
  }
  // cross terms cancel too: gamma_M is B-antisymmetric on these grades
  for (int t = 0; t < 200; ++t) {
    RVec a = random_m8(rng), b = random_m8(rng);
    for (int k : {2, 3, 6, 7}) CHECK(complexified_bilinears(a, b, k).value.max_abs() <= 1e-12 * (a.squaredNorm() + b.squaredNorm()));
  }
}

TEST_CASE("M8 classification") {
  Rng rng(6);
  RVec z = RVec::Zero(16);
  RVec x = random_m8(rng);
  M8Class g = classify_m8(x, z);
  CHECK(g.label == 31);
  RVec chiral = chiral_part(x, 1);
  M8Class c = classify_m8(chiral, z);
  CHECK(c.pattern == std::array<bool, 5>{true, false, true, false, true});
  CHECK(classify_m8(z, z).label == 0);
  CHECK_THROWS_AS(classify_m8(x, z, 0.0), InvalidInput);

  for (int t = 0; t < 50; ++t) {
    RVec a = random_m8(rng), b = t % 2 ? random_m8(rng) : chiral_part(random_m8(rng), -1);
    int lab = classify_m8(a, b).label;
    CHECK(classify_m8(-b, a).label == lab);
    CHECK(classify_m8(2.5 * a, 2.5 * b).label == lab);
  }

  std::vector<std::pair<RVec, RVec>> batch;
  for (int t = 0; t < 64; ++t) batch.push_back({random_m8(rng), chiral_part(random_m8(rng), t % 2 ? 1 : -1)});
  CHECK(classify_m8_batch(batch, 1e-10) == classify_m8_batch_serial(batch, 1e-10));
}

TEST_CASE("constraint operator and kernels") {
  Flux zero;
  CHECK(build_constraint_operator(zero).Q.norm() == 0.0);
  CHECK(kernel(build_constraint_operator(zero).Q).size() == 16);

  Flux k;
  k.kappa = 0.7;
  RMat Q = build_constraint_operator(k).Q;
  CHECK((Q + 0.7 * chirality8()).norm() == 0.0);
  CHECK(kernel(Q).empty());

  // F_{1234} = c gives -(c/12)(g1234 + g9) at kappa = c/12; both square to 1 and commute
  Flux f;
  f.F.push_back({{1, 2, 3, 4}, 1.2});
  f.kappa = 0.1;
  Q = build_constraint_operator(f).Q;
  auto ker = kernel(Q);
  CHECK(ker.size() == 8);
  for (auto& x : ker)
    for (auto& y : ker) CHECK(cgk_residual(Q, x, y) <= 1e-9);

  // permuted indices carry their sign; repeated or conflicting entries are rejected
  Flux perm;
  perm.F.push_back({{2, 1, 3, 4}, -1.2});
  perm.kappa = 0.1;
  CHECK((build_constraint_operator(perm).Q - Q).norm() == 0.0);
  Flux rep;
  rep.F.push_back({{1, 1, 3, 4}, 1.0});
  CHECK_THROWS_AS(build_constraint_operator(rep), InvalidInput);
  Flux conflict;
  conflict.F.push_back({{1, 2, 3, 4}, 1.0});
  conflict.F.push_back({{2, 1, 3, 4}, 1.0});
  CHECK_THROWS_AS(build_constraint_operator(conflict), InvalidInput);
  Flux range;
  range.F.push_back({{1, 2, 3, 9}, 1.0});
  CHECK_THROWS_AS(build_constraint_operator(range), InvalidInput);

  // the f-term is the quantized Hodge dual of e^p
  Flux fp;
  fp.f[2] = 6.0;
  RMat Qf = build_constraint_operator(fp).Q;
  Multivector star = blade8({3}) * Multivector::blade(kSig8, 0xFF);
  CHECK((Qf + quantize(star)).norm() < 1e-14);
}

TEST_CASE("random flux with a tuned kappa has a kernel") {
  Rng rng(7);
  int found = 0;
  for (int attempt = 0; attempt < 40 && found < 5; ++attempt) {
    Flux f;
    for (int m = 0; m < 8; ++m) {
      f.f[m] = gauss(rng);
      f.dDelta[m] = gauss(rng);
    }
    for (Mask m = 0; m < 256; ++m)
      if (grade_of(m) == 4) {
        std::vector<int> idx = indices_from_mask(m);
        f.F.push_back({{idx[0], idx[1], idx[2], idx[3]}, gauss(rng)});
      }
    // det(Q0 - kappa g9) = 0 iff kappa is an eigenvalue of g9 Q0
    RMat Q0 = build_constraint_operator(f).Q;
    Eigen::EigenSolver<RMat> es(chirality8() * Q0);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      cplx ev = es.eigenvalues()[i];
      if (std::abs(ev.imag()) > 1e-9) continue;
      f.kappa = ev.real();
      RMat Q = build_constraint_operator(f).Q;
      auto ker = kernel(Q, 1e-9);
      if (ker.empty()) continue;
      ++found;
      for (auto& x : ker) {
        CHECK((Q * x).norm() <= 1e-8 * Q.norm());
        for (auto& y : ker) CHECK(cgk_residual(Q, x, y) <= 1e-9);
      }
      break;
    }
  }
  CHECK(found > 0);
}
