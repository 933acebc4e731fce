#ifndef DIRFDR_ERRORS_HPP
#define DIRFDR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirfdr {

/// Fewer than two observations in a group; the sample variance is undefined.
class DegenerateGroupError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Both groups of a pair have zero variance, so the Welch denominator vanishes.
class DegenerateVarianceError : public std::invalid_argument {
public:
    DegenerateVarianceError(const std::string& what, std::size_t i = 0, std::size_t j = 0)
        : std::invalid_argument(what), i_(i), j_(j) {}

    // Offending pair, 0-based; meaningful only when raised from pairwise_statistics.
    std::size_t first() const noexcept { return i_; }
    std::size_t second() const noexcept { return j_; }

private:
    std::size_t i_;
    std::size_t j_;
};

/// Argument outside its mathematical domain (p not in (0,1), df < 1, V > R, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// One-sided p-values that do not sum to one.
class InconsistencyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two inputs that should describe the same pair set do not.
class ConsistencyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed (e.g. a rejected pair with t = 0).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Simulation configuration outside its supported domain.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace dirfdr

#endif // DIRFDR_ERRORS_HPP
