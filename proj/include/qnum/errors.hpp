#pragma once

#include <stdexcept>
#include <string>

namespace qnum {

// Base for every domain error raised by the library. The CLI maps these to
// exit code 1; any other exception escaping a public entry point is a bug.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact division left a nonzero remainder (or a non-integer quotient).
struct NotDivisible : error { using error::error; };

// A rational function was given a zero denominator.
struct ZeroDenominator : error { using error::error; };

// Root refinement stalled before reaching the requested tolerance.
struct ToleranceNotReached : error { using error::error; };

// A continued-fraction entry violated its positivity constraint.
struct NonPositive : error { using error::error; };

// Evaluating a continued fraction hit an intermediate zero denominator.
struct DivisionByZero : error { using error::error; };

// The operand must be nonzero (e.g. negation-inversion of zero).
struct ZeroInput : error { using error::error; };

// Pair arguments were not given in the required strict order.
struct OrderViolation : error { using error::error; };

// The diagonal set does not describe a triangulation of the polygon.
struct InvalidTriangulation : error { using error::error; };

// The quiddity sequence does not close up into a frieze.
struct NotAFrieze : error { using error::error; };

// Two independent computation routes disagreed; indicates a defect.
struct InternalMismatch : error { using error::error; };

// A cell index lies outside the frieze array.
struct IndexOutOfRange : error { using error::error; };

// The requested enumeration or digit exceeds the supported size.
struct SizeLimit : error { using error::error; };

// A truncated continued-fraction stream ran out of terms before the
// requested coefficients stabilized.
struct StreamExhausted : error { using error::error; };

// The value is not a real quadratic irrational.
struct NotQuadratic : error { using error::error; };

// The value falls outside the normalized family handled in closed form.
struct Unsupported : error { using error::error; };

// Sequence index outside the defined range.
struct OutOfRange : error { using error::error; };

} // namespace qnum
