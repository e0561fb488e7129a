#ifndef DPG_ERRORS_HPP
#define DPG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dpg {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: malformed data, violated preconditions, out-of-range parameters.
struct ValidationError : Error {
    using Error::Error;
};

// A metric axiom failed on construction. `axiom` names the failed condition,
// (i, j, k) are the witness indices (k = -1 when the axiom involves two points).
struct AxiomViolation : ValidationError {
    enum class Axiom { Diagonal, Symmetry, Positivity, Triangle };

    AxiomViolation(Axiom which, int i, int j, int k, const std::string& what)
        : ValidationError(what), axiom(which), i(i), j(j), k(k) {}

    Axiom axiom;
    int i, j, k;
};

struct NotATree : ValidationError {
    using ValidationError::ValidationError;
};

struct NotSorted : ValidationError {
    using ValidationError::ValidationError;
};

struct TooSmall : ValidationError {
    using ValidationError::ValidationError;
};

struct OutOfRange : ValidationError {
    using ValidationError::ValidationError;
};

struct IndexOutOfRange : ValidationError {
    using ValidationError::ValidationError;
};

struct NotTwoStrategies : ValidationError {
    using ValidationError::ValidationError;
};

struct NotStrategic : ValidationError {
    using ValidationError::ValidationError;
};

struct WrongFixedDegree : ValidationError {
    using ValidationError::ValidationError;
};

struct WrongAlpha : ValidationError {
    using ValidationError::ValidationError;
};

struct NotTreeMetric : ValidationError {
    using ValidationError::ValidationError;
};

struct NotImproving : ValidationError {
    using ValidationError::ValidationError;
};

// The requested exhaustive search exceeds the configured budget. Loud and
// typed; nothing is ever silently truncated.
struct SearchTooLarge : Error {
    using Error::Error;
};

// A claim the library relies on failed on concrete data. This is either a bug
// or a falsified claim, never a recoverable input problem.
struct TheoremViolation : Error {
    using Error::Error;
};

// coherent_response found disjoint median sets where a nonempty intersection
// is guaranteed.
struct EmptyIntersection : TheoremViolation {
    using TheoremViolation::TheoremViolation;
};

} // namespace dpg

#endif // DPG_ERRORS_HPP
