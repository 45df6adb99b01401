#include "clif/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clif/ka.hpp"

namespace clif {

namespace {

const Signature kMink(1, 3);
const cplx kI(0.0, 1.0);

Multivector vec_form(const std::array<double, 4>& v) {
  Multivector::Terms t;
  for (int mu = 0; mu < 4; ++mu) t.emplace(Mask(1) << mu, v[mu]);
  return Multivector(kMink, std::move(t));
}

double minkowski_dot(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

double scale_of(const BilinearSet& b) {
  double s = b.sigma * b.sigma + b.omega * b.omega;
  for (double x : b.J) s += x * x;
  for (double x : b.K) s += x * x;
  for (double x : b.S) s += x * x;
  return s;
}

double rel(double r, double scale) { return scale > 0.0 ? r / scale : r; }

}  // namespace

const char* rep_name(Rep r) { return r == Rep::weyl ? "weyl" : "dirac"; }

const RepBundle& bundle(Rep r) {
  static const RepBundle w = builtin_gammas("weyl");
  static const RepBundle d = builtin_gammas("dirac");
  return r == Rep::weyl ? w : d;
}

CVec to_vec(const DiracSpinor& psi) {
  CVec v(4);
  for (int i = 0; i < 4; ++i) v[i] = psi.c[i];
  return v;
}

DiracSpinor from_vec(const CVec& v, Rep rep) {
  DiracSpinor s{rep, {}};
  for (int i = 0; i < 4; ++i) s.c[i] = v[i];
  return s;
}

double norm_sq(const DiracSpinor& psi) {
  double s = 0.0;
  for (auto& x : psi.c) s += std::norm(x);
  return s;
}

BilinearSet bilinears(const DiracSpinor& psi) {
  const RepBundle& g = bundle(psi.rep);
  CVec v = to_vec(psi);
  Eigen::RowVectorXcd bar = v.adjoint() * g.gammas[0];
  CMat g5 = g.gammas[0] * g.gammas[1] * g.gammas[2] * g.gammas[3];
  double scale = 1.0 + norm_sq(psi);
  auto real_of = [&](cplx z) {
    if (std::abs(z.imag()) > 1e-9 * scale)
      throw std::logic_error("bilinear covariant with a non-negligible imaginary part");
    return z.real();
  };
  BilinearSet b;
  b.sigma = real_of(bar * v);
  for (int mu = 0; mu < 4; ++mu) {
    b.J[mu] = real_of(bar * g.gammas[mu] * v);
    b.K[mu] = real_of(kI * cplx(bar * g5 * g.gammas[mu] * v));
  }
  for (int k = 0; k < 6; ++k) {
    auto [mu, nu] = kSPairs[k];
    b.S[k] = real_of(0.5 * kI * cplx(bar * g.gammas[mu] * g.gammas[nu] * v));
  }
  b.omega = real_of(bar * g5 * v);
  return b;
}

double max_abs(const BilinearSet& b) {
  double m = std::max(std::abs(b.sigma), std::abs(b.omega));
  for (double x : b.J) m = std::max(m, std::abs(x));
  for (double x : b.K) m = std::max(m, std::abs(x));
  for (double x : b.S) m = std::max(m, std::abs(x));
  return m;
}

BilinearForms bilinears_as_forms(const BilinearSet& b) {
  BilinearForms f;
  f.sigma = b.sigma;
  f.J = vec_form(b.J);
  f.K = vec_form(b.K);
  Multivector::Terms t;
  for (int k = 0; k < 6; ++k) {
    auto [mu, nu] = kSPairs[k];
    t.emplace((Mask(1) << mu) | (Mask(1) << nu), b.S[k]);
  }
  f.S = Multivector(kMink, std::move(t));
  f.W = Multivector::blade(kMink, 0xF, b.omega);
  return f;
}

double FpkReport::max() const { return std::max({j2, k2, jk, wedge}); }

double FpkReport::max_aux() const {
  return aux.empty() ? 0.0 : *std::max_element(aux.begin(), aux.end());
}

FpkReport fpk_residuals(const BilinearSet& b, double aux_cutoff) {
  FpkReport r;
  double scale = scale_of(b);
  double JJ = minkowski_dot(b.J, b.J);
  r.j2 = rel(std::abs(JJ - b.sigma * b.sigma - b.omega * b.omega), scale);
  r.k2 = rel(std::abs(minkowski_dot(b.K, b.K) + JJ), scale);
  r.jk = rel(std::abs(minkowski_dot(b.J, b.K)), scale);

  BilinearForms f = bilinears_as_forms(b);
  Multivector t = tau(kMink);
  Multivector one = Multivector::scalar(kMink, 1.0);
  Multivector S2 = 2.0 * f.S;
  Multivector wst = b.omega * one + b.sigma * t;
  r.wedge = rel(max_abs_diff(wedge(f.J, f.K), wst * S2), scale);

  double reg = b.sigma * b.sigma + b.omega * b.omega;
  if (reg > aux_cutoff) {
    // the consequences of the identities, with S normalized as above
    Multivector wmst = b.omega * one - b.sigma * t;
    auto push = [&](const Multivector& lhs, const Multivector& rhs) {
      r.aux.push_back(rel(max_abs_diff(lhs, rhs), scale));
    };
    push(grade_project(S2 * f.J, 1), -b.omega * f.K);
    push(grade_project(S2 * f.K, 1), -b.omega * f.J);
    push(grade_project(t * S2 * f.K, 1), -b.sigma * f.J);
    push(grade_project(S2 * S2, 0), (b.omega * b.omega - b.sigma * b.sigma) * one);
    push(S2 * f.J, -(wmst * f.K));
    push(S2 * f.K, -(wmst * f.J));
    push(S2 * S2, wmst * wmst);
    // S^{-1} = K S K / (sigma^2+omega^2)^2, checked as S (K S K) = (sigma^2+omega^2)^2
    r.aux.push_back(rel(max_abs_diff(S2 * f.K * S2 * f.K, (reg * reg) * one), scale * scale));
  }
  return r;
}

FierzAggregate fierz_aggregate(const BilinearSet& b) {
  BilinearForms f = bilinears_as_forms(b);
  Multivector t = tau(kMink);
  Multivector Z = linear_combine({{b.sigma, Multivector::scalar(kMink, 1.0)},
                                  {1.0, f.J},
                                  {2.0 * kI, f.S},
                                  {-kI, f.K * t},
                                  {b.omega, t}});
  return {Z.as_complex()};
}

FierzAggregate fierz_aggregate_literal(const BilinearSet& b) {
  BilinearForms f = bilinears_as_forms(b);
  Multivector g0123 = -tau(kMink);
  Multivector Z = linear_combine({{b.sigma, Multivector::scalar(kMink, 1.0)},
                                  {1.0, f.J},
                                  {1.0, f.S},
                                  {kI, f.K * g0123},
                                  {b.omega, g0123}});
  return {Z.as_complex()};
}

bool is_boomerang(const FierzAggregate& z, double tol) {
  const RepBundle& g = bundle(Rep::weyl);
  CMat Zm = represent(g, z.Z);
  CMat back = g.gammas[0] * Zm.adjoint() * g.gammas[0];
  double scale = std::max(1.0, Zm.cwiseAbs().maxCoeff());
  return (back - Zm).cwiseAbs().maxCoeff() <= tol * scale;
}

double SingularReport::max() const { return std::max({zz, zj, zs, zk, zw}); }

SingularReport singular_residuals(const BilinearSet& b) {
  const RepBundle& g = bundle(Rep::weyl);
  CMat Z = represent(g, fierz_aggregate(b).Z);
  double zscale = Z.cwiseAbs().maxCoeff();
  double scale = zscale * zscale;
  auto res = [&](const CMat& M, cplx coeff) {
    return rel((Z * M * Z - 4.0 * coeff * Z).cwiseAbs().maxCoeff(), scale);
  };
  CMat I = CMat::Identity(4, 4);
  CMat g5 = g.gammas[0] * g.gammas[1] * g.gammas[2] * g.gammas[3];
  SingularReport r;
  r.zz = res(I, b.sigma);
  r.zw = res(g5, b.omega);
  for (int mu = 0; mu < 4; ++mu) {
    r.zj = std::max(r.zj, res(g.gammas[mu], b.J[mu]));
    r.zk = std::max(r.zk, res(kI * g5 * g.gammas[mu], b.K[mu]));
  }
  for (int k = 0; k < 6; ++k) {
    auto [mu, nu] = kSPairs[k];
    r.zs = std::max(r.zs, res(kI * g.gammas[mu] * g.gammas[nu], 2.0 * b.S[k]));
  }
  return r;
}

std::optional<double> factorization_residual(const BilinearSet& b, double cutoff) {
  double reg = b.sigma * b.sigma + b.omega * b.omega;
  if (reg <= cutoff) return std::nullopt;
  BilinearForms f = bilinears_as_forms(b);
  Multivector t = tau(kMink);
  Multivector one = Multivector::scalar(kMink, 1.0);
  Multivector Omega = b.sigma * one + b.omega * t;
  // tau^2 = -1 here, so Omega^{-1} = (sigma - omega tau) / (sigma^2 + omega^2)
  Multivector Omega_inv = (1.0 / reg) * (b.sigma * one - b.omega * t);
  Multivector Zf = (Omega + f.J) * (one - kI * (Omega_inv * f.K * t));
  Multivector Z = fierz_aggregate(b).Z;
  double scale = std::max(1.0, Z.max_abs());
  return max_abs_diff(Zf, Z) / scale;
}

ZeroPattern zero_pattern(const DiracSpinor& psi, double tol) {
  BilinearSet b = bilinears(psi);
  double thr = tol * (1.0 + norm_sq(psi));
  auto nz = [&](double x) { return std::abs(x) > thr; };
  auto any = [&](auto& arr) { return std::any_of(arr.begin(), arr.end(), nz); };
  return {nz(b.sigma), any(b.J), any(b.S), any(b.K), nz(b.omega)};
}

int classify_lounesto(const DiracSpinor& psi, double tol) {
  ZeroPattern z = zero_pattern(psi, tol);
  if (!z.J) return 0;
  if (z.sigma && z.omega) return 1;
  if (z.sigma) return 2;
  if (z.omega) return 3;
  if (z.S && z.K) return 4;
  if (z.S) return 5;
  if (z.K) return 6;
  return 0;
}

std::string lounesto_label(int cls) { return cls == 0 ? "none" : std::to_string(cls); }

std::vector<int> classify_lounesto_batch_serial(const std::vector<DiracSpinor>& v, double tol) {
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = classify_lounesto(v[i], tol);
  return out;
}

std::vector<int> classify_lounesto_batch(const std::vector<DiracSpinor>& v, double tol) {
  bundle(Rep::weyl);
  bundle(Rep::dirac);
  std::vector<int> out(v.size());
  const long n = long(v.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = classify_lounesto(v[i], tol);
  return out;
}

DiracSpinor change_representation(const DiracSpinor& psi) {
  const double h = 1.0 / std::sqrt(2.0);
  auto& c = psi.c;
  DiracSpinor out;
  out.rep = psi.rep == Rep::weyl ? Rep::dirac : Rep::weyl;
  out.c = {h * (c[0] + c[2]), h * (c[1] + c[3]), h * (c[0] - c[2]), h * (c[1] - c[3])};
  return out;
}

Reconstruction reconstruct(const BilinearSet& b, const std::optional<DiracSpinor>& eta, Rep rep,
                           double tol) {
  if (eta) rep = eta->rep;
  const RepBundle& g = bundle(rep);
  CMat Z = represent(g, fierz_aggregate(b).Z);
  double J0 = std::abs(b.J[0]);
  auto radicand = [&](const CVec& e) {
    return cplx(e.adjoint() * g.gammas[0] * Z * e).real();
  };
  // radicand = 4|eta-bar psi|^2 <= 4 |eta|^2 J0, so compare relative to that bound
  auto relative = [&](const CVec& e, double r) {
    double bound = 4.0 * e.squaredNorm() * J0;
    return bound > 0.0 ? r / bound : 0.0;
  };

  CVec chosen;
  double rad = 0.0;
  if (eta) {
    chosen = to_vec(*eta);
    rad = radicand(chosen);
  } else {
    CMat I = CMat::Identity(4, 4);
    CMat f = 0.25 * (I + g.gammas[0]) * (I + g.gammas[1] * g.gammas[2]);
    Eigen::Index col = 0;
    f.colwise().norm().maxCoeff(&col);
    chosen = f.col(col);
    rad = radicand(chosen);
  }
  if (rad < -tol * std::max(1.0, 4.0 * chosen.squaredNorm() * J0))
    throw InconsistentBilinears("negative radicand eta^+ g0 Z eta");
  if (!(relative(chosen, rad) > tol)) {
    double best = -1.0;
    for (int i = 0; i < 4; ++i) {
      CVec e = CVec::Zero(4);
      e[i] = 1.0;
      double r = radicand(e);
      if (std::abs(r) > best) {
        best = std::abs(r);
        chosen = e;
        rad = r;
      }
    }
    if (rad < -tol * std::max(1.0, 4.0 * J0))
      throw InconsistentBilinears("negative radicand eta^+ g0 Z eta");
    if (!(relative(chosen, rad) > tol))
      throw ReconstructionFailed("eta^+ g0 Z eta vanishes for every candidate eta");
  }
  double N = 0.5 * std::sqrt(rad);
  CVec psi = Z * chosen / (4.0 * N);
  return {from_vec(psi, rep), N};
}

}  // namespace clif
