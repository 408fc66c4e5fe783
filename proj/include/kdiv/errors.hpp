#pragma once

#include <stdexcept>

namespace kdiv {

// Base of every domain-rule violation. The CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInput : DomainError {
    using DomainError::DomainError;
};

struct NotPrime : DomainError {
    using DomainError::DomainError;
};

// A formula produced an l-adic valuation < 0 where a plain l-power was
// expected; the inputs violated a hypothesis upstream.
struct NegativeValuation : DomainError {
    using DomainError::DomainError;
};

struct HypothesisViolation : DomainError {
    using DomainError::DomainError;
};

// The auxiliary prime l divides the field characteristic.
struct CharacteristicClash : DomainError {
    using DomainError::DomainError;
};

struct PoleEvaluation : DomainError {
    using DomainError::DomainError;
};

} // namespace kdiv
