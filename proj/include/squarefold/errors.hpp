#pragma once

#include <stdexcept>
#include <string>

namespace squarefold {

/// Intersection of classes living on squares of curves of different genus.
struct GenusMismatchError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operation restricted to the integral lattice applied to a fractional class.
struct NonIntegralClassError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Class with non-positive self-intersection fed to a projection formula.
struct DegenerateClassError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A division that must be exact produced a non-integer: the input triple
/// cannot come from an actual embedding.
struct InconsistencyError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Criterion preconditions (nef, minimum self-intersection) not met.
struct NotApplicableError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A bounded search exhausted its cap without reaching a certified answer.
struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace squarefold
