#pragma once

#include <stdexcept>
#include <string>

namespace loghh {

// Every failure the engine can diagnose deliberately.  Code that catches
// errors dispatches on the kind, not on message text.
enum class ErrorKind {
  CompositionNonzero,   // complex_homology: g∘f != 0
  NotInjective,         // chart map not injective on group completions
  NotWellDefined,       // monoid map images violate a source relation
  BudgetExceeded,       // Groebner/pair budget hit
  NotGraded,            // graded operation on an ungraded presentation
  NotFiniteDimensional, // staircase is infinite where a basis is needed
  NotGenerating,        // Koszul sequence does not generate I_Delta
  NotFramed,            // Omega^1 admits no free basis from the generators
  WrongCharacteristic,  // char-0-only route requested over F_p
  UnstableTruncation,   // bicomplex homology changed when widened
  RelationNotKilled,    // HKR images fail a defining relation
  InvalidSpec,          // log ring spec validation failure
  ParseError,           // expression / problem file syntax
  SchemaError,          // structurally valid JSON, semantically wrong
  Internal,             // broken invariant; always a bug
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::CompositionNonzero: return "CompositionNonzero";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::NotFramed: return "NotFramed";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::UnstableTruncation: return "UnstableTruncation";
    case ErrorKind::RelationNotKilled: return "RelationNotKilled";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace loghh
