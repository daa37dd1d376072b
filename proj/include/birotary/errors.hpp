#pragma once

#include <stdexcept>
#include <string>

namespace birotary {

enum class Errc {
  degree_mismatch,
  cap_exceeded,
  not_normal,
  not_prime_power,
  not_involution,
  not_generating,
  divisibility_violation,
  not_solvable,
  abelian_group,
  solvable_group,
  hall_shape_unmatched,
  side_condition_violated,
  invalid_action,
  parse_error,
  unknown_suite,
  precondition_failed,
  structure_violation,
  not_found,
  invalid_argument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_prime_power: return "NotPrimePower";
    case Errc::not_involution: return "NotInvolution";
    case Errc::not_generating: return "NotGenerating";
    case Errc::divisibility_violation: return "DivisibilityViolation";
    case Errc::not_solvable: return "NotSolvable";
    case Errc::abelian_group: return "AbelianGroup";
    case Errc::solvable_group: return "SolvableGroup";
    case Errc::hall_shape_unmatched: return "HallShapeUnmatched";
    case Errc::side_condition_violated: return "SideConditionViolated";
    case Errc::invalid_action: return "InvalidAction";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::structure_violation: return "StructureViolation";
    case Errc::not_found: return "NotFound";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace birotary
