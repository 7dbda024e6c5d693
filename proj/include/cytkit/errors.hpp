#pragma once

#include <stdexcept>
#include <string>

namespace cytkit {

/// Input outside an operation's domain or violating a precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A mathematical invariant the computation relies on did not hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cytkit
