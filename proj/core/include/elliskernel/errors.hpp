#pragma once

#include <stdexcept>
#include <string>

namespace elliskernel {

// Domain error codes. The CLI maps every DomainError to exit status 2 and
// every ParseError / IO failure to exit status 1.
enum class errc {
  not_constant_length,
  no_fixed_letter,
  rank_one,
  not_minimal_rank,
  no_such_idempotent,
  not_simplified,
  not_quasi_bijective,
  seed_not_closed,
  too_large,
  invalid_cocycle,
  window_exceeded,
  field_mismatch,
  not_primitive,
  periodic,
  not_completely_simple,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::not_constant_length: return "NotConstantLength";
    case errc::no_fixed_letter: return "NoFixedLetter";
    case errc::rank_one: return "RankOne";
    case errc::not_minimal_rank: return "NotMinimalRank";
    case errc::no_such_idempotent: return "NoSuchIdempotent";
    case errc::not_simplified: return "NotSimplified";
    case errc::not_quasi_bijective: return "NotQuasiBijective";
    case errc::seed_not_closed: return "SeedNotClosed";
    case errc::too_large: return "TooLarge";
    case errc::invalid_cocycle: return "InvalidCocycle";
    case errc::window_exceeded: return "WindowExceeded";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::not_primitive: return "NotPrimitive";
    case errc::periodic: return "Periodic";
    case errc::not_completely_simple: return "NotCompletelySimple";
  }
  return "DomainError";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw DomainError(code, what);
}

}  // namespace elliskernel
