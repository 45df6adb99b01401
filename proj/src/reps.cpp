#include "clif/reps.hpp"

#include <cmath>

#include "clif/dense.hpp"

namespace clif {

const char* ring_name(Ring r) {
  switch (r) {
    case Ring::R: return "R";
    case Ring::C: return "C";
    case Ring::H: return "H";
  }
  return "?";
}

int ring_real_dim(Ring r) { return r == Ring::R ? 1 : r == Ring::C ? 2 : 4; }

namespace {

int mod8(int x) { return ((x % 8) + 8) % 8; }

void check_pq(int p, int q) {
  if (p < 0 || q < 0 || p + q > kMaxDim) throw InvalidInput("need p,q >= 0 and p+q <= 16");
}

// rows shared by the even-subalgebra and classical-spinor tables, exponent k
AlgebraDescriptor half_table(int r, int k) {
  switch (r) {
    case 0: return {Ring::R, 1 << k, 2};
    case 1:
    case 7: return {Ring::R, 1 << k, 1};
    case 2:
    case 6: return {Ring::C, 1 << k, 1};
    case 3:
    case 5: return {Ring::H, 1 << (k - 1), 1};
    default: return {Ring::H, 1 << (k - 1), 2};
  }
}

}  // namespace

AlgebraDescriptor classify_real(int p, int q) {
  check_pq(p, q);
  int h = (p + q) / 2;
  switch (mod8(p - q)) {
    case 0:
    case 2: return {Ring::R, 1 << h, 1};
    case 1: return {Ring::R, 1 << h, 2};
    case 3:
    case 7: return {Ring::C, 1 << h, 1};
    case 4:
    case 6: return {Ring::H, 1 << (h - 1), 1};
    default: return {Ring::H, 1 << (h - 1), 2};
  }
}

AlgebraDescriptor classify_complex(int n) {
  if (n < 0 || n > kMaxDim) throw InvalidInput("need 0 <= n <= 16");
  return {Ring::C, 1 << (n / 2), (n % 2) ? 2 : 1};
}

AlgebraDescriptor spinor_space(int p, int q, SpinorKind kind) {
  check_pq(p, q);
  int n = p + q;
  int r = mod8(p - q);
  if (kind == SpinorKind::algebraic) {
    int h = n / 2;
    switch (r) {
      case 0:
      case 2: return {Ring::R, 1 << h, 1};
      case 1: return {Ring::R, 1 << h, 2};
      case 3:
      case 7: return {Ring::C, 1 << h, 1};
      case 4:
      case 6: return {Ring::H, 1 << (h - 1), 1};
      default: return {Ring::H, 1 << (h - 1), 2};
    }
  }
  if (n == 0) {
    if (kind == SpinorKind::even_subalgebra) return {Ring::R, 1, 1};
    throw InvalidInput("classical spinors are not defined for n = 0");
  }
  return half_table(r, (n - 1) / 2);
}

namespace {

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMat block2(const CMat& a, const CMat& b, const CMat& c, const CMat& d) {
  CMat out(a.rows() * 2, a.cols() * 2);
  out << a, b, c, d;
  return out;
}

struct Pauli {
  CMat I, s1, s2, s3;
  Pauli() : I(CMat::Identity(2, 2)), s1(2, 2), s2(2, 2), s3(2, 2) {
    const cplx i(0, 1);
    s1 << 0, 1, 1, 0;
    s2 << 0, -i, i, 0;
    s3 << 1, 0, 0, -1;
  }
};

RepBundle weyl() {
  Pauli P;
  CMat Z = CMat::Zero(2, 2);
  RepBundle r{Signature(1, 3), 4, Field::complex, {}};
  r.gammas.push_back(block2(Z, P.I, P.I, Z));
  for (const CMat* s : {&P.s1, &P.s2, &P.s3}) r.gammas.push_back(block2(Z, -*s, *s, Z));
  return r;
}

RepBundle dirac() {
  Pauli P;
  CMat Z = CMat::Zero(2, 2);
  RepBundle r{Signature(1, 3), 4, Field::complex, {}};
  r.gammas.push_back(block2(P.I, Z, Z, -P.I));
  for (const CMat* s : {&P.s1, &P.s2, &P.s3}) r.gammas.push_back(block2(Z, *s, -*s, Z));
  return r;
}

// seven mutually anticommuting real antisymmetric 8x8 blocks plus -I, paired
// off-diagonally; the sign on the last block puts chirality +1 first
RepBundle cl8() {
  CMat I = CMat::Identity(2, 2), X(2, 2), Zs(2, 2), E(2, 2);
  X << 0, 1, 1, 0;
  Zs << 1, 0, 0, -1;
  E << 0, 1, -1, 0;
  auto pick = [&](char c) -> const CMat& {
    return c == 'I' ? I : c == 'X' ? X : c == 'Z' ? Zs : E;
  };
  RepBundle r{Signature(8, 0), 16, Field::real, {}};
  CMat Z8 = CMat::Zero(8, 8);
  for (const char* w : {"IIE", "IEX", "XEZ", "ZEZ", "EIZ", "EXX", "EZX"}) {
    CMat G = kron(kron(pick(w[0]), pick(w[1])), pick(w[2]));
    r.gammas.push_back(block2(Z8, G, G.transpose(), Z8));
  }
  CMat G8 = -CMat::Identity(8, 8);
  r.gammas.push_back(block2(Z8, G8, G8.transpose(), Z8));
  return r;
}

}  // namespace

RepBundle builtin_gammas(const std::string& name) {
  if (name == "pauli") {
    Pauli P;
    return {Signature(3, 0), 2, Field::complex, {P.s1, P.s2, P.s3}};
  }
  if (name == "weyl") return weyl();
  if (name == "dirac") return dirac();
  if (name == "cl8") return cl8();
  throw InvalidInput("unknown gamma bundle '" + name + "'");
}

double check_clifford_relations(const RepBundle& rep) {
  if (rep.gammas.empty()) throw InvalidInput("empty gamma bundle");
  int d = int(rep.gammas.front().rows());
  for (auto& g : rep.gammas)
    if (g.rows() != d || g.cols() != d) throw InvalidInput("gamma dimension mismatch");
  CMat I = CMat::Identity(d, d);
  double worst = 0.0;
  for (std::size_t i = 0; i < rep.gammas.size(); ++i)
    for (std::size_t j = 0; j < rep.gammas.size(); ++j) {
      double g = (i == j) ? rep.sig.metric(int(i) + 1) : 0.0;
      CMat r = rep.gammas[i] * rep.gammas[j] + rep.gammas[j] * rep.gammas[i] - 2.0 * g * I;
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
  return worst;
}

CMat gamma_product(const RepBundle& rep, Mask m) {
  CMat out = CMat::Identity(rep.dim, rep.dim);
  for (int i : indices_from_mask(m)) out = out * rep.gammas[i - 1];
  return out;
}

CMat represent(const RepBundle& rep, const Multivector& a) {
  if (!(a.sig() == rep.sig)) throw InvalidInput("multivector signature does not match bundle");
  CMat out = CMat::Zero(rep.dim, rep.dim);
  for (auto& [m, c] : a.terms())
    out += c * double(metric_sign(rep.sig, m)) * gamma_product(rep, m);
  return out;
}

Similarity dirac_weyl_similarity() {
  // S0 = sqrt(2) S; S S = I, so S g S = S0 g S0 / 2, which is exact in floating point
  CMat I = CMat::Identity(2, 2);
  CMat S0 = block2(I, I, I, -I);
  RepBundle w = weyl(), d = dirac();
  double res = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    CMat t = 0.5 * (S0 * w.gammas[mu] * S0);
    res = std::max(res, (t - d.gammas[mu]).cwiseAbs().maxCoeff());
  }
  return {S0 / std::sqrt(2.0), res};
}

namespace {

RVec real_coords(const Multivector& a) {
  RVec v = RVec::Zero(Eigen::Index(a.sig().dim()));
  for (auto& [m, c] : a.terms()) v[m] = c.real();
  return v;
}

Multivector blade_inverse(const Signature& s, Mask m) {
  return Multivector::blade(s, m, double(blade_product_sign(s, m, m)));
}

}  // namespace

IdempotentRep rep_from_idempotent(const Signature& s, const Multivector& f1) {
  constexpr double tol = 1e-10;
  if (!(f1.sig() == s)) throw InvalidInput("f1 signature mismatch");
  if (f1.is_complex()) throw InvalidInput("f1 must be real");
  if (max_abs_diff(geometric_product(f1, f1), f1) > tol * std::max(1.0, f1.max_abs()))
    throw InvalidInput("f1 is not idempotent");
  AlgebraDescriptor desc = classify_real(s.p, s.q);
  if (desc.ring != Ring::R || desc.summands != 1)
    throw UnsupportedDivisionRing(std::string("generic construction needs Cl(p,q) = Mat(N,R); got ") +
                                  (desc.summands == 2 ? "a semisimple algebra over " : "ring ") +
                                  ring_name(desc.ring));

  // f1 Cl f1 must be one-dimensional for the real-division-ring case
  std::vector<RVec> basis;
  auto raises_rank = [&](RVec v) {
    for (auto& b : basis) v -= b.dot(v) * b;
    double nv = v.norm();
    if (nv <= tol) return false;
    basis.push_back(v / nv);
    return true;
  };
  for (Mask m = 0; m < Mask(s.dim()); ++m)
    raises_rank(real_coords(f1 * Multivector::blade(s, m) * f1));
  if (basis.size() != 1) throw NotPrimitive("f1 Cl f1 is not one-dimensional; f1 is not primitive");

  basis.clear();
  std::vector<Mask> u;
  for (Mask m = 0; m < Mask(s.dim()); ++m)
    if (raises_rank(real_coords(Multivector::blade(s, m) * f1))) u.push_back(m);
  int N = int(u.size());
  if (N != desc.dim)
    throw NotPrimitive("left ideal has dimension " + std::to_string(N) + ", expected " +
                       std::to_string(desc.dim));

  RVec fv = real_coords(f1);
  double ff = fv.squaredNorm();
  RMat G(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      Multivector x = f1 * blade_inverse(s, u[a]) * Multivector::blade(s, u[b]) * f1;
      G(a, b) = real_coords(x).dot(fv) / ff;
    }
  RMat Ginv = G.inverse();

  IdempotentRep rep;
  rep.sig = s;
  rep.N = N;
  for (int a = 0; a < N; ++a) {
    rep.Ecol.push_back(Multivector::blade(s, u[a]) * f1);
    std::vector<std::pair<cplx, Multivector>> terms;
    for (int c = 0; c < N; ++c)
      if (Ginv(a, c) != 0.0) terms.push_back({Ginv(a, c), f1 * blade_inverse(s, u[c])});
    rep.Erow.push_back(terms.empty() ? Multivector(s) : linear_combine(terms));
  }
  rep.Emat.assign(N, {});
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) rep.Emat[a].push_back(rep.Ecol[a] * rep.Erow[b]);
    rep.f.push_back(rep.Emat[a][a]);
  }
  return rep;
}

RMat extract_matrix(const IdempotentRep& rep, const Multivector& x) {
  if (x.is_complex()) throw InvalidInput("only real multivectors have real matrices");
  RMat out(rep.N, rep.N);
  for (int a = 0; a < rep.N; ++a)
    for (int b = 0; b < rep.N; ++b) {
      cplx acc = 0.0;
      for (int c = 0; c < rep.N; ++c)
        acc += (rep.Emat[c][a] * x * rep.Emat[b][c]).scalar_part();
      out(a, b) = acc.real();
    }
  return out;
}

}  // namespace clif
