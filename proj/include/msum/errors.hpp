#pragma once

#include <stdexcept>
#include <string>

namespace msum {

/// Raised when an operation needs gcd(q, e) = 1 and the inputs share a factor.
class NotCoprime : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when inputs fall outside an operation's documented domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A search or table hit its configured cap before finishing.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An instance is too large for every available solver strategy.
class CapacityError : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};

/// A bounded search ended without finding what it looked for.
class NotFoundWithinCap : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};

class UnknownClaim : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace msum
