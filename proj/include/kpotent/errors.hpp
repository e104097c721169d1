#pragma once

#include <stdexcept>
#include <string>

namespace kpotent {

// Base class for every domain error raised by this library. The CLI maps
// these to exit code 1; anything else escaping is a bug.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define KPOTENT_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                              \
    explicit Name(const std::string& what) : Error(what) {}          \
  }

// finite-field
KPOTENT_DEFINE_ERROR(NotPrime);
KPOTENT_DEFINE_ERROR(DegreeZero);
KPOTENT_DEFINE_ERROR(FieldTooLarge);
KPOTENT_DEFINE_ERROR(NoSuchRoot);

// qpoly
KPOTENT_DEFINE_ERROR(PartsMismatch);

// poset / text formats
KPOTENT_DEFINE_ERROR(EmptyArm);
KPOTENT_DEFINE_ERROR(ParseError);
KPOTENT_DEFINE_ERROR(CycleError);
KPOTENT_DEFINE_ERROR(DuplicateLabel);

// incidence matrices
KPOTENT_DEFINE_ERROR(MixedPoset);
KPOTENT_DEFINE_ERROR(MixedField);
KPOTENT_DEFINE_ERROR(TooSmall);

// completion
KPOTENT_DEFINE_ERROR(CharGuardFailed);
KPOTENT_DEFINE_ERROR(MissingFreeValue);
KPOTENT_DEFINE_ERROR(ExtraFreeValue);
KPOTENT_DEFINE_ERROR(ZeroDiagonalCase);

// enumeration
KPOTENT_DEFINE_ERROR(SearchSpaceTooLarge);

#undef KPOTENT_DEFINE_ERROR

}  // namespace kpotent
