#ifndef LOGINT_ERRORS_HPP
#define LOGINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logint {

/// Argument outside the mathematical domain of an operation (x <= 0, n <= 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation point sits on (or numerically next to) a pole.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Derivative / polygamma order outside the supported range.
class UnsupportedOrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integration interval is empty, reversed or not finite.
class InvalidIntervalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace logint

#endif // LOGINT_ERRORS_HPP
