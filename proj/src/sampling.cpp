#include "clif/sampling.hpp"

#include <cmath>
#include <numbers>

#include "clif/groups.hpp"

namespace clif {

double gauss(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

Multivector random_multivector(Rng& rng, const Signature& s, Field f) {
  Multivector::Terms t;
  for (Mask m = 0; m < Mask(s.dim()); ++m) {
    double re = gauss(rng);
    double im = f == Field::complex ? gauss(rng) : 0.0;
    t.emplace(m, cplx(re, im));
  }
  return Multivector(s, std::move(t), f);
}

Multivector random_form(Rng& rng, const Signature& s, int k) {
  Multivector::Terms t;
  for (Mask m = 0; m < Mask(s.dim()); ++m)
    if (grade_of(m) == k) t.emplace(m, gauss(rng));
  return Multivector(s, std::move(t));
}

Multivector random_nonisotropic_vector(Rng& rng, const Signature& s) {
  for (;;) {
    Multivector v = random_form(rng, s, 1);
    if (std::abs(vector_inner(v, v)) >= 0.1) return v;
  }
}

Multivector random_versor(Rng& rng, const Signature& s, int factors) {
  Multivector a = Multivector::scalar(s, 1.0);
  for (int i = 0; i < factors; ++i) a = a * random_nonisotropic_vector(rng, s);
  return a;
}

Multivector random_unit_versor(Rng& rng, const Signature& s, int factors) {
  Multivector a = Multivector::scalar(s, 1.0);
  for (int i = 0; i < factors; ++i) {
    Multivector v = random_nonisotropic_vector(rng, s);
    a = a * ((1.0 / std::sqrt(std::abs(vector_inner(v, v)))) * v);
  }
  return a;
}

DiracSpinor random_spinor(Rng& rng, Rep rep) {
  DiracSpinor psi{rep, {}};
  for (auto& c : psi.c) c = cplx(gauss(rng), gauss(rng));
  return psi;
}

DiracSpinor random_singular_spinor(Rng& rng, double lambda_abs) {
  cplx a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
  double phase = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  cplx lambda = std::polar(lambda_abs, phase);
  return {Rep::weyl, {a, b, -lambda * std::conj(b), lambda * std::conj(a)}};
}

DiracSpinor random_dipole_spinor(Rng& rng) {
  DiracSpinor psi{Rep::weyl, {}};
  int half = std::bernoulli_distribution(0.5)(rng) ? 0 : 2;
  psi.c[half] = cplx(gauss(rng), gauss(rng));
  psi.c[half + 1] = cplx(gauss(rng), gauss(rng));
  return psi;
}

RVec random_m8(Rng& rng) {
  RVec x(16);
  for (int i = 0; i < 16; ++i) x[i] = gauss(rng);
  return x;
}

RVec chiral_part(const RVec& x, int chirality) {
  return 0.5 * (x + double(chirality) * (chirality8() * x));
}

}  // namespace clif
