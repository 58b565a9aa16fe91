#ifndef SPIEGEL_ERRORS_HPP
#define SPIEGEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spiegel {

// Input rejected: not a positive odd squarefree integer.
struct NotOddSquarefree : std::domain_error {
    using std::domain_error::domain_error;
};

// Symbol modulus must be odd and >= 1.
struct InvalidModulus : std::domain_error {
    using std::domain_error::domain_error;
};

// Arguments share a common factor where coprimality is required.
struct NotCoprime : std::domain_error {
    using std::domain_error::domain_error;
};

// Enumerative square test refused: modulus too large to scan.
struct EnumerationTooLarge : std::domain_error {
    using std::domain_error::domain_error;
};

// Quadruple divisor sums grow as 4^omega; refused beyond omega = 12.
struct OmegaTooLarge : std::domain_error {
    using std::domain_error::domain_error;
};

// d fits none of the admissible discriminant shapes.
struct NotFundamental : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotPrimitive : std::domain_error {
    using std::domain_error::domain_error;
};

struct SquareDiscriminant : std::domain_error {
    using std::domain_error::domain_error;
};

struct DiscriminantMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

struct BoundExceeded : std::domain_error {
    using std::domain_error::domain_error;
};

// Two routes that must agree disagreed; always an implementation bug.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// A checked theorem failed on a concrete input; carries the counterexample.
struct AssertionFailed : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace spiegel

#endif
