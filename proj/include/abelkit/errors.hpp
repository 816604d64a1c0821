#pragma once

#include <stdexcept>
#include <string>

namespace abelkit {

/// Base class for every error the library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed group expression or JSON input.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

/// A matrix does not define a homomorphism between the given groups.
struct InvalidMorphismError : Error {
    explicit InvalidMorphismError(const std::string& msg) : Error("invalid morphism: " + msg) {}
};

/// Composition or comparison of morphisms whose endpoints do not line up.
struct SourceTargetMismatchError : Error {
    explicit SourceTargetMismatchError(const std::string& msg)
        : Error("source/target mismatch: " + msg) {}
};

/// Element enumeration requested for a group with free rank > 0.
struct InfiniteGroupError : Error {
    explicit InfiniteGroupError(const std::string& msg) : Error("infinite group: " + msg) {}
};

/// Hom-set enumeration requested where Hom(M, N) is infinite.
struct InfiniteHomSetError : Error {
    explicit InfiniteHomSetError(const std::string& msg) : Error("infinite hom set: " + msg) {}
};

/// An enumeration would exceed the configured work budget.
struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& msg) : Error("budget exceeded: " + msg) {}
};

/// Torsion family input listed the same prime twice.
struct DuplicatePrimeError : Error {
    explicit DuplicatePrimeError(const std::string& msg) : Error("duplicate prime: " + msg) {}
};

/// verify was asked for a suite id that is not registered.
struct UnknownSuiteError : Error {
    explicit UnknownSuiteError(const std::string& msg) : Error("unknown suite: " + msg) {}
};

/// A paranoid cross-check failed: two independent code paths disagreed.
/// This always indicates a bug, never a property of the inputs.
struct InternalCheckError : Error {
    explicit InternalCheckError(const std::string& msg) : Error("internal check failed: " + msg) {}
};

}  // namespace abelkit
