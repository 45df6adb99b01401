#include "clif/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace clif::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput("malformed JSON: " + what); }

double num(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) bad(std::string(what) + " must be finite");
  return v;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

template <std::size_t N>
std::array<double, N> num_array(const json& j, const char* what) {
  if (!j.is_array() || j.size() != N) bad(std::string(what) + " must have " + std::to_string(N) + " entries");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = num(j[i], what);
  return out;
}

RVec vec(const json& j, const char* what) {
  auto a = num_array<16>(j, what);
  return Eigen::Map<RVec>(a.data(), 16);
}

}  // namespace

json to_json(const Multivector& a) {
  json terms = json::array();
  for (auto& [m, c] : a.terms()) {
    json t;
    t["indices"] = indices_from_mask(m);
    t["re"] = c.real();
    if (a.is_complex()) t["im"] = c.imag();
    terms.push_back(std::move(t));
  }
  json j;
  j["p"] = a.sig().p;
  j["q"] = a.sig().q;
  j["field"] = a.is_complex() ? "complex" : "real";
  j["terms"] = std::move(terms);
  return j;
}

Multivector multivector_from_json(const json& j, std::optional<Signature> expect) {
  if (!j.is_object()) bad("multivector must be an object");
  Signature s;
  if (j.contains("p") || j.contains("q")) {
    const json &p = field(j, "p"), &q = field(j, "q");
    if (!p.is_number_integer() || !q.is_number_integer()) bad("p and q must be integers");
    s = Signature(p.get<int>(), q.get<int>());
    if (expect && !(*expect == s)) throw InvalidInput("multivector signature does not match --sig");
  } else if (expect) {
    s = *expect;
  } else {
    bad("missing signature");
  }
  bool want_complex = false;
  if (j.contains("field")) {
    const json& f = j["field"];
    if (f == "complex") want_complex = true;
    else if (f != "real") bad("field must be \"real\" or \"complex\"");
  }
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  Multivector::Terms out;
  for (const json& t : terms) {
    const json& idx = field(t, "indices");
    if (!idx.is_array()) bad("indices must be an array");
    std::vector<int> ind;
    for (const json& i : idx) {
      if (!i.is_number_integer()) bad("indices must be integers");
      ind.push_back(i.get<int>());
    }
    Mask m = mask_from_indices(s, ind);
    double re = num(field(t, "re"), "re");
    double im = 0.0;
    if (t.contains("im")) {
      if (!want_complex && j.contains("field")) bad("\"im\" given for a real-field multivector");
      im = num(t["im"], "im");
      want_complex = true;
    }
    if (out.count(m)) bad("repeated blade");
    out.emplace(m, cplx(re, im));
  }
  return Multivector(s, std::move(out), want_complex ? Field::complex : Field::real);
}

json to_json(const DiracSpinor& psi) {
  json comps = json::array();
  for (auto& c : psi.c) comps.push_back({c.real(), c.imag()});
  json j;
  j["rep"] = rep_name(psi.rep);
  j["components"] = std::move(comps);
  return j;
}

DiracSpinor spinor_from_json(const json& j) {
  DiracSpinor psi;
  const json& r = field(j, "rep");
  if (r == "weyl") psi.rep = Rep::weyl;
  else if (r == "dirac") psi.rep = Rep::dirac;
  else bad("rep must be \"weyl\" or \"dirac\"");
  const json& c = field(j, "components");
  if (!c.is_array() || c.size() != 4) bad("components must have 4 entries");
  for (int i = 0; i < 4; ++i) {
    if (!c[i].is_array() || c[i].size() != 2) bad("each component is [re, im]");
    psi.c[i] = cplx(num(c[i][0], "re"), num(c[i][1], "im"));
  }
  return psi;
}

json to_json(const BilinearSet& b) {
  json j;
  j["sigma"] = b.sigma;
  j["J"] = b.J;
  j["S"] = b.S;
  j["K"] = b.K;
  j["omega"] = b.omega;
  return j;
}

BilinearSet bilinears_from_json(const json& j) {
  BilinearSet b;
  b.sigma = num(field(j, "sigma"), "sigma");
  b.J = num_array<4>(field(j, "J"), "J");
  b.S = num_array<6>(field(j, "S"), "S");
  b.K = num_array<4>(field(j, "K"), "K");
  b.omega = num(field(j, "omega"), "omega");
  return b;
}

json to_json(const M8Spinor& s) {
  json j;
  j["real"] = std::vector<double>(s.real.data(), s.real.data() + s.real.size());
  j["imag"] = std::vector<double>(s.imag.data(), s.imag.data() + s.imag.size());
  return j;
}

M8Spinor m8_spinor_from_json(const json& j) {
  M8Spinor s;
  s.real = vec(field(j, "real"), "real");
  s.imag = j.contains("imag") ? vec(j["imag"], "imag") : RVec::Zero(16);
  return s;
}

json to_json(const M8Class& c) {
  json bil;
  for (int i = 0; i < 5; ++i) bil["E" + std::to_string(kM8Grades[i])] = to_json(c.bilinears[i]);
  json j;
  j["label"] = c.label;
  j["pattern"] = c.pattern;
  j["bilinears"] = std::move(bil);
  return j;
}

json to_json(const Flux& f) {
  json F = json::array();
  for (auto& e : f.F) F.push_back({{"indices", e.indices}, {"value", e.value}});
  json j;
  j["f"] = f.f;
  j["F"] = std::move(F);
  j["dDelta"] = f.dDelta;
  j["kappa"] = f.kappa;
  return j;
}

Flux flux_from_json(const json& j) {
  Flux f;
  f.f = num_array<8>(field(j, "f"), "f");
  f.dDelta = num_array<8>(field(j, "dDelta"), "dDelta");
  f.kappa = num(field(j, "kappa"), "kappa");
  const json& F = field(j, "F");
  if (!F.is_array()) bad("F must be an array");
  for (const json& e : F) {
    FluxEntry fe;
    const json& idx = field(e, "indices");
    if (!idx.is_array() || idx.size() != 4) bad("F indices must have 4 entries");
    for (int i = 0; i < 4; ++i) {
      if (!idx[i].is_number_integer()) bad("F indices must be integers");
      fe.indices[i] = idx[i].get<int>();
    }
    fe.value = num(field(e, "value"), "value");
    f.F.push_back(fe);
  }
  return f;
}

json to_json(const AlgebraDescriptor& d) {
  json j;
  j["ring"] = ring_name(d.ring);
  j["dim"] = d.dim;
  j["summands"] = d.summands;
  return j;
}

json matrix_to_json(const RMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const CMat& m) {
  json j;
  j["re"] = matrix_to_json(RMat(m.real()));
  j["im"] = matrix_to_json(RMat(m.imag()));
  return j;
}

RMat real_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad("matrix must be a nested array");
  RMat m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j[0].size()) bad("ragged matrix");
    for (std::size_t k = 0; k < j[i].size(); ++k) m(i, k) = num(j[i][k], "matrix entry");
  }
  return m;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace clif::io
