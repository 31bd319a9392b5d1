#pragma once

#include <stdexcept>
#include <string>

namespace orekit {

// Truncation cannot distinguish 0 from O(x^N); raised whenever an operation
// needs a nonzero leading coefficient that is zero at the known precision.
class PrecisionInsufficient : public std::runtime_error {
public:
    explicit PrecisionInsufficient(const std::string& what)
        : std::runtime_error("precision-insufficient: " + what) {}
};

// Violated preconditions on the mathematical input (mixed rings, singular
// matrices, zero divisors, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Three-valued outcome of every check performed at finite precision.
enum class Verdict { yes, no, indeterminate };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::indeterminate: return "indeterminate";
    }
    return "?";
}

// Working precision: relative length used when a series has to be truncated
// (inverses of non-monomial series, multivariate total-degree bound).
struct Precision {
    long order = 16;
};

inline constexpr long kDefaultPrecision = 16;

} // namespace orekit
