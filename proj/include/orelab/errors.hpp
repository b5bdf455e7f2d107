#pragma once

#include <stdexcept>
#include <string>

namespace orelab {

enum class ErrorCode {
  unit_axiom_violation,
  dimension_mismatch,
  base_mismatch,
  subtraction_underflow,
  arity_mismatch,
  not_prime,
  out_of_range,
  orbit_bound_exceeded,
  unsupported_base,
  wrong_characteristic,
  hypotheses_not_met,
  too_large,
  zero_element,
  wrong_pi_kind,
  ring_mismatch,
  not_ore_ring,
  not_invertible,
  parse_error,
  invalid_monoid,
  invalid_delta,
  internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace orelab
