#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gkm {

// Error carries a stable machine-readable kind alongside the human message.
// Kinds used across the library:
//   InvalidParams, NotAnEdge, NotDefinite, NoAdmissibleMatching,
//   PathNotCovered, NonIsolatedFixedPoints, MinorNotUnimodular,
//   TorsionQuotient, StepMismatch, Internal
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace gkm
