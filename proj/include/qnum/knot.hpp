#pragma once

#include "qnum/qrat.hpp"

namespace qnum {

// A rational (two-bridge) knot named by a positive fraction. We keep the
// encoding purely arithmetic: which knot the fraction denotes under a given
// orientation or mirror convention is the caller's concern.
struct TwoBridgeKnot {
    Rational fraction;
};

// q R(q) + (1 - q) S(q), where R/S is the deformation of the fraction.
// Throws OutOfRange unless the fraction is positive.
IntPoly jones(const TwoBridgeKnot& k);

} // namespace qnum
