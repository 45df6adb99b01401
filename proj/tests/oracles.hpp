#pragma once
// Independent reference implementations used only by the tests. Nothing here
// touches the bitmask machinery of the library.
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Blade = std::vector<int>;  // ascending 1-based indices
using Form = std::map<Blade, double>;

struct Metric {
  int p, q;
  int g(int i) const { return i <= p ? 1 : -1; }
  int n() const { return p + q; }
};

inline void add(Form& f, const Blade& b, double c) {
  if (c == 0.0) return;
  f[b] += c;
  if (f[b] == 0.0) f.erase(b);
}

// e^A ^ e^B by bubble sort
inline Form wedge(const Form& a, const Form& b) {
  Form out;
  for (auto& [A, ca] : a)
    for (auto& [B, cb] : b) {
      Blade v = A;
      v.insert(v.end(), B.begin(), B.end());
      int sign = 1;
      bool dup = false;
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
          if (v[j] == v[j + 1]) dup = true;
          if (v[j] > v[j + 1]) {
            std::swap(v[j], v[j + 1]);
            sign = -sign;
          }
        }
      for (std::size_t j = 0; j + 1 < v.size(); ++j)
        if (v[j] == v[j + 1]) dup = true;
      if (!dup) add(out, v, sign * ca * cb);
    }
  return out;
}

// frame vector e_i contracted into a form, e_i(e^j) = delta
inline Form contract(int i, const Form& a) {
  Form out;
  for (auto& [A, c] : a)
    for (std::size_t pos = 0; pos < A.size(); ++pos)
      if (A[pos] == i) {
        Blade r = A;
        r.erase(r.begin() + long(pos));
        add(out, r, (pos % 2 ? -1.0 : 1.0) * c);
      }
  return out;
}

inline Form contracted_wedge(const Metric& m, const Form& a, const Form& b, int d) {
  if (d == 0) return wedge(a, b);
  Form out;
  for (int i = 1; i <= m.n(); ++i) {
    Form t = contracted_wedge(m, contract(i, a), contract(i, b), d - 1);
    for (auto& [B, c] : t) add(out, B, m.g(i) * c);
  }
  return out;
}

inline double factorial(int d) {
  double f = 1;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

// product of two homogeneous forms through the contracted-wedge expansion
inline Form diamond_blades(const Metric& m, const Blade& A, const Blade& B) {
  Form a{{A, 1.0}}, b{{B, 1.0}};
  int k = int(A.size()), l = int(B.size());
  Form out;
  if (k <= l) {
    for (int d = 0; d <= k; ++d) {
      double s = (((d * (k - d) + d / 2) % 2) ? -1.0 : 1.0) / factorial(d);
      for (auto& [C, c] : contracted_wedge(m, a, b, d)) add(out, C, s * c);
    }
  } else {
    // a has the larger degree: a b = (-1)^{kl} sum_d (-1)^{d(l-d+1)+[d/2]}/d! b ^_d a
    double outer = ((k * l) % 2) ? -1.0 : 1.0;
    for (int d = 0; d <= l; ++d) {
      double s = outer * (((d * (l - d + 1) + d / 2) % 2) ? -1.0 : 1.0) / factorial(d);
      for (auto& [C, c] : contracted_wedge(m, b, a, d)) add(out, C, s * c);
    }
  }
  return out;
}

inline std::vector<Blade> all_blades(int n) {
  std::vector<Blade> out;
  for (unsigned m = 0; m < (1u << n); ++m) {
    Blade b;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) b.push_back(i + 1);
    out.push_back(b);
  }
  return out;
}

// Weyl-representation closed forms for psi = (a, b, c, d)
struct Closed {
  double sigma, omega;
  std::array<double, 4> J, K;
  std::array<double, 6> S;
};

inline Closed weyl_closed_forms(cplx a, cplx b, cplx c, cplx d) {
  const cplx i(0, 1), h(0, 0.5);
  auto A = std::conj(a), B = std::conj(b), C = std::conj(c), D = std::conj(d);
  auto n2 = [](cplx z) { return std::norm(z); };
  Closed r;
  r.sigma = (c * A + d * B + a * C + b * D).real();
  r.J = {n2(a) + n2(b) + n2(c) + n2(d), (b * A + a * B - d * C - c * D).real(),
         (i * (-b * A + a * B + d * C - c * D)).real(), n2(a) - n2(b) - n2(c) + n2(d)};
  r.S = {(h * (-d * A - c * B + b * C + a * D)).real(),
         (h * (i * d * A - i * c * B - i * b * C + i * a * D)).real(),
         (h * (-c * A + d * B + a * C - b * D)).real(),
         (h * (-i * c * A + i * d * B - i * a * C + i * b * D)).real(),
         (h * (d * A - c * B + b * C - a * D)).real(),
         (h * (-i * d * A - i * c * B - i * b * C - i * a * D)).real()};
  r.K = {-n2(a) - n2(b) + n2(c) + n2(d), (-b * A - a * B - d * C - c * D).real(),
         (i * (b * A - a * B + d * C - c * D)).real(), -n2(a) + n2(b) - n2(c) + n2(d)};
  r.omega = (i * (c * A + d * B - a * C - b * D)).real();
  return r;
}

}  // namespace oracle
