#ifndef CHANGHEE_ERRORS_HPP
#define CHANGHEE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace changhee {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inversion requested for an element that is not a unit of the ring.
struct NotAUnit : Error {
    using Error::Error;
};

/// lambda = 0 substituted into a term carrying a negative lambda power.
struct NegativeLaurentAtZero : Error {
    using Error::Error;
};

/// Index or argument outside the defined domain of a table or sequence.
struct OutOfDomain : Error {
    using Error::Error;
};

/// Multinomial parts do not sum to the top index.
struct PartsMismatch : Error {
    using Error::Error;
};

/// A series operation needs more truncation order than is available.
struct OrderExhausted : Error {
    using Error::Error;
};

/// Binomial-power base has a nonzero constant term.
struct NonzeroConstant : Error {
    using Error::Error;
};

/// A generating-function coefficient kept a negative lambda power that
/// should have cancelled; signals an arithmetic bug, not bad input.
struct PoleNotCancelled : Error {
    using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace changhee

#endif
