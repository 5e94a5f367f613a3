#include "transversal/error.hpp"

namespace transversal {

const char* to_string(Errc c) {
  switch (c) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::NoWitness: return "NoWitness";
    case Errc::NotTransversal: return "NotTransversal";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::NotBracketed: return "NotBracketed";
    case Errc::WitnessNotFound: return "WitnessNotFound";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::FrameDegenerate: return "FrameDegenerate";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DisjointnessFailure: return "DisjointnessFailure";
    case Errc::EpsTooLarge: return "EpsTooLarge";
    case Errc::PlacementFailure: return "PlacementFailure";
    case Errc::StartTransversal: return "StartTransversal";
    case Errc::BadScene: return "BadScene";
    case Errc::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

}  // namespace transversal
