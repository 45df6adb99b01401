#pragma once
#include <optional>
#include <string>

#include <json.hpp>

#include "clif/dirac.hpp"
#include "clif/m8.hpp"
#include "clif/reps.hpp"

namespace clif::io {

using json = nlohmann::ordered_json;

// all *_from_json functions throw InvalidInput on schema violations
json to_json(const Multivector& a);
Multivector multivector_from_json(const json& j, std::optional<Signature> expect = {});

json to_json(const DiracSpinor& psi);
DiracSpinor spinor_from_json(const json& j);

json to_json(const BilinearSet& b);
BilinearSet bilinears_from_json(const json& j);

struct M8Spinor {
  RVec real, imag;
};
json to_json(const M8Spinor& s);
M8Spinor m8_spinor_from_json(const json& j);
json to_json(const M8Class& c);

json to_json(const Flux& f);
Flux flux_from_json(const json& j);

json to_json(const AlgebraDescriptor& d);

// row-major nested arrays; complex matrices as {"re":[[...]],"im":[[...]]}
json matrix_to_json(const RMat& m);
json matrix_to_json(const CMat& m);
RMat real_matrix_from_json(const json& j);

json parse(const std::string& text);
json read_file(const std::string& path);

}  // namespace clif::io
