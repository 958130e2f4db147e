#pragma once

#include <stdexcept>
#include <string>

namespace ttlink {

// Structured reasons for domain failures; the CLI maps them to exit code 1.
enum class Errc {
  InvalidArgument,
  NotARootCandidate,
  UnsupportedRealization,
  MirrorRequired,
  ReducibleToSatellite,
  DualityNotApplicable,
  FormulaNotApplicable,
  WrongCase,
  Internal,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "invalid-argument";
    case Errc::NotARootCandidate: return "not-a-root-candidate";
    case Errc::UnsupportedRealization: return "unsupported-realization";
    case Errc::MirrorRequired: return "mirror-required";
    case Errc::ReducibleToSatellite: return "reducible-to-satellite";
    case Errc::DualityNotApplicable: return "duality-not-applicable";
    case Errc::FormulaNotApplicable: return "formula-not-applicable";
    case Errc::WrongCase: return "wrong-case";
    case Errc::Internal: return "internal-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ttlink
