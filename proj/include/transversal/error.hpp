#pragma once

#include <stdexcept>
#include <string>

namespace transversal {

enum class Errc {
  EmptyInput,
  NotDisjoint,
  NoWitness,
  NotTransversal,
  LevelOutOfRange,
  NotBracketed,
  WitnessNotFound,
  ValidationFailed,
  FrameDegenerate,
  OutOfRange,
  DisjointnessFailure,
  EpsTooLarge,
  PlacementFailure,
  StartTransversal,
  BadScene,
  BadArgument,
};

const char* to_string(Errc c);

// All library failures are reported through this exception type; the code
// distinguishes contract violations from data problems for CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace transversal
