#pragma once

#include <stdexcept>
#include <string>

namespace biharm {

/// Base class of every error raised by the library. Failures that are part of
/// a verification outcome (a check outside its band) are reported, not thrown.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define BIHARM_DECLARE_ERROR(Name)                                            \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

BIHARM_DECLARE_ERROR(DomainError);
BIHARM_DECLARE_ERROR(SymmetryViolation);
BIHARM_DECLARE_ERROR(NonLatticeShift);
BIHARM_DECLARE_ERROR(BadQuadrature);
BIHARM_DECLARE_ERROR(InsufficientRange);
BIHARM_DECLARE_ERROR(SingularAtZero);
BIHARM_DECLARE_ERROR(NonZeroMean);
BIHARM_DECLARE_ERROR(QuadratureDivergence);
BIHARM_DECLARE_ERROR(SpectrumOverflow);
BIHARM_DECLARE_ERROR(ConfigError);

#undef BIHARM_DECLARE_ERROR

/// Rethrows the in-flight biharm error as the same type with `context`
/// prepended to its message. Other exceptions pass through unchanged.
[[noreturn]] void rethrow_with_context(const std::string& context);

} // namespace biharm
