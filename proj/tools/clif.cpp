#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "clif/io.hpp"
#include "clif/ka.hpp"
#include "clif/verify.hpp"

using namespace clif;
using io::json;

namespace {

struct Failure {
  json report;
};

Signature parse_sig(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidInput("--sig expects P,Q");
  try {
    std::size_t used1 = 0, used2 = 0;
    int p = std::stoi(text.substr(0, comma), &used1);
    int q = std::stoi(text.substr(comma + 1), &used2);
    if (used1 != comma || used2 != text.size() - comma - 1) throw InvalidInput("--sig expects P,Q");
    return Signature(p, q);
  } catch (const std::logic_error&) {
    throw InvalidInput("--sig expects two integers P,Q");
  }
}

double default_tol() {
  const char* env = std::getenv("CLIF_TOL");
  if (!env) return 1e-10;
  char* end = nullptr;
  double t = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(t > 0.0)) throw InvalidInput("CLIF_TOL must be a positive number");
  return t;
}

json cmd_product(const std::string& sig, const std::string& fa, const std::string& fb) {
  Signature s = parse_sig(sig);
  Multivector a = io::multivector_from_json(io::read_file(fa), s);
  Multivector b = io::multivector_from_json(io::read_file(fb), s);
  return io::to_json(a * b);
}

json cmd_table(const std::string& sig, bool complex, const std::string& spinors) {
  Signature s = parse_sig(sig);
  if (complex) {
    if (!spinors.empty()) throw InvalidInput("--spinors applies to the real tables only");
    return io::to_json(classify_complex(s.n()));
  }
  if (spinors.empty()) return io::to_json(classify_real(s.p, s.q));
  SpinorKind kind = spinors == "algebraic" ? SpinorKind::algebraic
                    : spinors == "classical" ? SpinorKind::classical
                                             : SpinorKind::even_subalgebra;
  return io::to_json(spinor_space(s.p, s.q, kind));
}

json cmd_classify_dirac(const std::string& file, double tol) {
  DiracSpinor psi = io::spinor_from_json(io::read_file(file));
  BilinearSet b = bilinears(psi);
  int cls = classify_lounesto(psi, tol);
  ZeroPattern z = zero_pattern(psi, tol);
  json out;
  out["class"] = cls == 0 ? json("none") : json(cls);
  out["bilinears"] = io::to_json(b);
  out["fpk_residual"] = fpk_residuals(b).max();
  out["nonzero"] = {{"sigma", z.sigma}, {"J", z.J}, {"S", z.S}, {"K", z.K}, {"omega", z.omega}};
  return out;
}

json cmd_classify_m8(const std::string& file, double tol) {
  io::M8Spinor x = io::m8_spinor_from_json(io::read_file(file));
  return io::to_json(classify_m8(x.real, x.imag, tol));
}

json cmd_verify(const std::string& suite, long trials, std::uint64_t seed) {
  SuiteReport r = run_suite(suite, trials, seed);
  json out;
  out["suite"] = r.suite;
  out["trials"] = r.trials;
  out["max_residual"] = r.max_residual;
  out["pass"] = r.pass;
  if (!r.pass) throw Failure{out};
  return out;
}

json cmd_reconstruct(const std::string& file, const std::string& eta_file, const std::string& rep,
                     double tol) {
  BilinearSet b = io::bilinears_from_json(io::read_file(file));
  std::optional<DiracSpinor> eta;
  if (!eta_file.empty()) eta = io::spinor_from_json(io::read_file(eta_file));
  Rep r = rep == "dirac" ? Rep::dirac : Rep::weyl;
  try {
    Reconstruction rec = reconstruct(b, eta, r, tol);
    json out = io::to_json(rec.psi);
    out["N"] = rec.N;
    return out;
  } catch (const ReconstructionFailed& e) {
    throw Failure{{{"error", "reconstruction-failed"}, {"message", e.what()}}};
  } catch (const InconsistentBilinears& e) {
    throw Failure{{{"error", "inconsistent-bilinears"}, {"message", e.what()}}};
  }
}

json cmd_rep(const std::string& sig, const std::string& name, const std::string& idem_file) {
  if (!name.empty()) {
    if (!sig.empty()) throw InvalidInput("use either --sig or --name");
    RepBundle b = builtin_gammas(name);
    json gammas = json::array();
    for (auto& g : b.gammas)
      gammas.push_back(b.field == Field::real ? io::matrix_to_json(RMat(g.real()))
                                              : io::matrix_to_json(g));
    json out;
    out["name"] = name;
    out["p"] = b.sig.p;
    out["q"] = b.sig.q;
    out["dim"] = b.dim;
    out["field"] = b.field == Field::real ? "real" : "complex";
    out["clifford_residual"] = check_clifford_relations(b);
    out["gammas"] = std::move(gammas);
    return out;
  }
  if (sig.empty()) throw InvalidInput("rep needs --sig or --name");
  Signature s = parse_sig(sig);
  Multivector f1 = idem_file.empty()
                       ? 0.5 * (Multivector::scalar(s, 1.0) + Multivector::blade(s, 1))
                       : io::multivector_from_json(io::read_file(idem_file), s);
  if (s.n() == 0 && idem_file.empty()) f1 = Multivector::scalar(s, 1.0);
  IdempotentRep rep = rep_from_idempotent(s, f1);
  json mats = json::array();
  for (Mask m = 0; m < Mask(s.dim()); ++m) {
    RMat M = extract_matrix(rep, Multivector::blade(s, m));
    M = M.unaryExpr([](double x) { return x + 0.0; });
    mats.push_back({{"indices", indices_from_mask(m)}, {"matrix", io::matrix_to_json(M)}});
  }
  json out;
  out["p"] = s.p;
  out["q"] = s.q;
  out["N"] = rep.N;
  out["idempotent"] = io::to_json(f1);
  out["matrices"] = std::move(mats);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford algebra and spinor toolkit"};
  app.require_subcommand(1);

  std::string sig, fa, fb, spinors, file, eta, rep_name_opt = "weyl", name, idem, suite;
  bool complex = false;
  std::optional<double> tol_opt;
  long trials = 0;
  std::uint64_t seed = 0;

  auto* product = app.add_subcommand("product", "geometric product of two multivectors");
  product->add_option("--sig", sig, "signature P,Q")->required();
  product->add_option("a", fa)->required();
  product->add_option("b", fb)->required();

  auto* table = app.add_subcommand("table", "algebra and spinor-space descriptors");
  table->add_option("--sig", sig, "signature P,Q")->required();
  table->add_flag("--complex", complex);
  table->add_option("--spinors", spinors)->check(CLI::IsMember({"algebraic", "classical", "even"}));

  auto* classify = app.add_subcommand("classify", "spinor classification");
  classify->require_subcommand(1);
  auto* cd = classify->add_subcommand("dirac", "Lounesto class of a Dirac spinor");
  auto* cm = classify->add_subcommand("m8", "zero pattern of complexified Cl(8,0) bilinears");
  for (auto* c : {cd, cm}) {
    c->add_option("file", file)->required();
    c->add_option("--tol", tol_opt);
  }

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed);

  auto* recon = app.add_subcommand("reconstruct", "spinor from its bilinear covariants");
  recon->add_option("file", file)->required();
  recon->add_option("--eta", eta);
  recon->add_option("--rep", rep_name_opt)->check(CLI::IsMember({"weyl", "dirac"}));
  recon->add_option("--tol", tol_opt);

  auto* rep = app.add_subcommand("rep", "matrix representations");
  rep->add_option("--sig", sig);
  rep->add_option("--name", name)->check(CLI::IsMember({"pauli", "weyl", "dirac", "cl8"}));
  rep->add_option("--idempotent", idem);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    double tol = tol_opt ? *tol_opt : default_tol();
    if (!(tol > 0.0)) throw InvalidInput("--tol must be positive");
    json out;
    if (*product) out = cmd_product(sig, fa, fb);
    else if (*table) out = cmd_table(sig, complex, spinors);
    else if (*cd) out = cmd_classify_dirac(file, tol);
    else if (*cm) out = cmd_classify_m8(file, tol);
    else if (*verify) out = cmd_verify(suite, trials, seed);
    else if (*recon) out = cmd_reconstruct(file, eta, rep_name_opt, tol);
    else if (*rep) out = cmd_rep(sig, name, idem);
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const Failure& f) {
    std::cout << f.report.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
