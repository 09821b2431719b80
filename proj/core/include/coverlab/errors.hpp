#ifndef COVERLAB_ERRORS_HPP
#define COVERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coverlab {

// Two operands live over different ambient variable counts.
class AmbientMismatch : public std::invalid_argument {
  public:
    AmbientMismatch(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("ambient mismatch: " + std::to_string(lhs) + " vs " +
                                std::to_string(rhs) + " variables") {}
};

// A documented precondition was violated (degenerate parameters, out of range
// family sizes, non-squarefree input where squarefree is required, ...).
class PreconditionError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class ExponentOverflow : public std::overflow_error {
  public:
    ExponentOverflow() : std::overflow_error("monomial exponent overflow") {}
};

} // namespace coverlab

#endif
