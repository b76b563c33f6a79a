#pragma once

#include <stdexcept>
#include <string>

namespace pfh {

// Malformed text input (rational literals, JSON files).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Structurally valid input that violates a documented invariant.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Operation outside its mathematical domain (valuation of zero, division by zero, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Plus-complex homology did not stabilize within the truncation cap.
class NotStabilized : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The two independent decomposition routes disagreed.
class CrossCheckFailure : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace pfh
