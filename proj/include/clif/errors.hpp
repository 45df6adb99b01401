#pragma once
#include <stdexcept>

namespace clif {

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAVersor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReconstructionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InconsistentBilinears : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedDivisionRing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedSignature : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrimitive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace clif
