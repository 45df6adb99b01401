#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(CLIF_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string golden(const std::string& name) { return std::string(GOLDEN_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string scratch(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "clif_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("golden product in sig (4,2)") {
  Run r = run("product --sig 4,2 " + golden("product_a.json") + " " + golden("product_b.json"));
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(golden("product.expected.json")));
  // independent reading of the expected blades
  std::map<std::vector<int>, double> want{{{}, 1},        {{4}, 1},        {{1, 2}, 1},         {{1, 2, 5}, 1},
                                          {{1, 3, 6}, 1}, {{2, 3, 6}, 1}, {{1, 3, 4, 6}, -1}, {{2, 3, 5, 6}, -1}};
  std::map<std::vector<int>, double> got;
  json doc = json::parse(r.out);
  for (auto& t : doc["terms"]) got[t["indices"].get<std::vector<int>>()] = t["re"].get<double>();
  CHECK(got == want);
}

TEST_CASE("volume form squares to -1 in sig (1,2)") {
  Run r = run("product --sig 1,2 " + golden("tau_12.json") + " " + golden("tau_12.json"));
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(golden("tau_tau.expected.json")));
  json j = json::parse(r.out);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["indices"].empty());
  CHECK(j["terms"][0]["re"] == -1.0);
}

TEST_CASE("malformed input exits 1 with empty stdout") {
  std::string bad = scratch("bad.json", "{\"p\":4,\"q\":2,\"terms\":[");
  Run r = run("product --sig 4,2 " + bad + " " + golden("product_b.json"));
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  Run mismatch = run("product --sig 3,3 " + golden("product_a.json") + " " + golden("product_b.json"));
  CHECK(mismatch.code == 1);
  CHECK(mismatch.out.empty());
  CHECK(run("table --sig 9,8").code == 1);
  CHECK(run("classify dirac /nonexistent.json").code == 1);
  CHECK(run("verify nope").code == 1);
  CHECK(run("frobnicate").code == 1);
}

TEST_CASE("table descriptors") {
  CHECK(json::parse(run("table --sig 3,0").out) == json::parse(R"({"ring":"C","dim":2,"summands":1})"));
  CHECK(json::parse(run("table --sig 1,3 --spinors algebraic").out) ==
        json::parse(R"({"ring":"H","dim":2,"summands":1})"));
  CHECK(json::parse(run("table --sig 0,0").out) == json::parse(R"({"ring":"R","dim":1,"summands":1})"));
  CHECK(json::parse(run("table --sig 1,3 --spinors classical").out)["ring"] == "C");
  CHECK(json::parse(run("table --sig 3,0 --complex").out) == json::parse(R"({"ring":"C","dim":2,"summands":2})"));
}

TEST_CASE("idempotent matrices through the CLI") {
  Run r = run("rep --sig 2,0");
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(golden("rep_20.expected.json")));
  json j = json::parse(r.out);
  CHECK(j["N"] == 2);
  std::map<std::vector<int>, json> m;
  for (auto& e : j["matrices"]) m[e["indices"].get<std::vector<int>>()] = e["matrix"];
  CHECK(m[{1}] == json::parse("[[1.0,0.0],[0.0,-1.0]]"));
  CHECK(m[{2}] == json::parse("[[0.0,1.0],[1.0,0.0]]"));
  CHECK(m[{1, 2}] == json::parse("[[0.0,1.0],[-1.0,0.0]]"));
  CHECK(run("rep --name weyl").code == 0);
}

TEST_CASE("Dirac classification") {
  Run r = run("classify dirac " + golden("class5_spinor.json"));
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(golden("class5_spinor.expected.json")));
  json j = json::parse(r.out);
  CHECK(j["class"] == 5);
  CHECK(j["fpk_residual"].get<double>() <= 1e-12);
  std::string zero = scratch("zero.json", R"({"rep":"weyl","components":[[0,0],[0,0],[0,0],[0,0]]})");
  CHECK(json::parse(run("classify dirac " + zero).out)["class"] == "none");
}

TEST_CASE("M8 classification") {
  json zero = {{"real", std::vector<double>(16, 0.0)}};
  Run z = run("classify m8 " + scratch("m8zero.json", zero.dump()));
  REQUIRE(z.code == 0);
  CHECK(json::parse(z.out)["label"] == 0);

  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  std::vector<double> x(16);
  for (auto& v : x) v = g(rng);
  json gen = {{"real", x}};
  json out = json::parse(run("classify m8 " + scratch("m8gen.json", gen.dump())).out);
  CHECK(out["label"] == 31);
  CHECK(out["pattern"] == json::parse("[true,true,true,true,true]"));
  CHECK(run("classify m8 " + scratch("m8short.json", R"({"real":[1,2,3]})")).code == 1);
}

TEST_CASE("verify suites") {
  Run v = run("verify volume --trials 0");
  CHECK(v.code == 0);
  json jv = json::parse(v.out);
  CHECK(jv["pass"] == true);
  CHECK(jv["max_residual"] == 0.0);

  Run f = run("verify fpk --trials 1000 --seed 7");
  CHECK(f.code == 0);
  json jf = json::parse(f.out);
  CHECK(jf["pass"] == true);
  CHECK(jf["trials"] == 1000);
  CHECK(jf["max_residual"].get<double>() <= 1e-10);

  Run fz = run("verify fierz --trials 100 --seed 7");
  CHECK(fz.code == 0);
  CHECK(json::parse(fz.out)["pass"] == true);

  for (auto s : {"truncated", "groups"}) CHECK(run(std::string("verify ") + s + " --trials 20 --seed 1").code == 0);

  // determinism
  CHECK(run("verify fpk --trials 50 --seed 3").out == run("verify fpk --trials 50 --seed 3").out);
  CHECK(run("verify fierz --trials 5").out == run("verify fierz --trials 5 --seed 0").out);
}

TEST_CASE("reconstruction round trips through the CLI") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  json psi = {{"rep", "weyl"}, {"components", json::array()}};
  for (int i = 0; i < 4; ++i) psi["components"].push_back({g(rng), g(rng)});
  json cls = json::parse(run("classify dirac " + scratch("psi.json", psi.dump())).out);
  REQUIRE(cls["class"].is_number());
  json b = cls["bilinears"];

  Run r = run("reconstruct " + scratch("bil.json", b.dump()));
  REQUIRE(r.code == 0);
  json rec = json::parse(r.out);
  CHECK(rec.contains("N"));
  json again = json::parse(run("classify dirac " + scratch("rec.json", rec.dump())).out)["bilinears"];
  auto close = [](const json& x, const json& y, double tol) {
    double m = std::abs(x["sigma"].get<double>() - y["sigma"].get<double>());
    m = std::max(m, std::abs(x["omega"].get<double>() - y["omega"].get<double>()));
    for (auto key : {"J", "S", "K"})
      for (size_t i = 0; i < x[key].size(); ++i) m = std::max(m, std::abs(x[key][i].get<double>() - y[key][i].get<double>()));
    return m <= tol;
  };
  CHECK(close(again, b, 1e-8));

  json b41 = json::parse(slurp(golden("class5_spinor.expected.json")))["bilinears"];
  Run r41 = run("reconstruct " + scratch("b41.json", b41.dump()));
  REQUIRE(r41.code == 0);
  json a41 = json::parse(run("classify dirac " + scratch("r41.json", r41.out)).out);
  CHECK(a41["class"] == 5);
  CHECK(close(a41["bilinears"], b41, 1e-10));

  Run z = run("reconstruct " + golden("zero_bilinears.json"));
  CHECK(z.code == 2);
  CHECK(json::parse(z.out)["error"] == "reconstruction-failed");
}

TEST_CASE("CLIF_TOL changes the classification threshold") {
  // (1, 0, 1e-6, 0): sigma and omega are O(1e-6), invisible at a loose tolerance
  std::string f = scratch("tiny.json", R"({"rep":"weyl","components":[[1,0],[0,0],[1e-6,0],[0,0]]})");
  json strict = json::parse(run("classify dirac " + f).out);
  json loose = json::parse(run("classify dirac " + f, "CLIF_TOL=1e-3").out);
  CHECK(strict["class"] == 2);
  CHECK(loose["class"] == 6);
  CHECK(json::parse(run("classify dirac " + f + " --tol 1e-3").out)["class"] == 6);
}
