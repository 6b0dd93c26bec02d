#pragma once

#include <stdexcept>
#include <string>

namespace higgsline {

// Reasons a domain operation can fail. Kept as an enum so callers (and the
// CLI exit-code mapping) can dispatch on the cause without parsing text.
enum class Errc {
  NotSymmetric,
  ImNotPositiveDefinite,
  SingularLattice,
  GenusTooLarge,
  NotLatticeVector,
  FrameNotOrthonormal,
  CoordinateMismatch,
  InvalidArgument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::ImNotPositiveDefinite: return "ImNotPositiveDefinite";
    case Errc::SingularLattice: return "SingularLattice";
    case Errc::GenusTooLarge: return "GenusTooLarge";
    case Errc::NotLatticeVector: return "NotLatticeVector";
    case Errc::FrameNotOrthonormal: return "FrameNotOrthonormal";
    case Errc::CoordinateMismatch: return "CoordinateMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace higgsline
