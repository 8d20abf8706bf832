#include "qnum/knot.hpp"

#include "qnum/errors.hpp"

namespace qnum {

IntPoly jones(const TwoBridgeKnot& k) {
    if (k.fraction <= 0)
        throw OutOfRange("two-bridge fraction must be positive");
    const RationalFunc rs = q_rational_hj(k.fraction).value;
    const IntPoly q = IntPoly::monomial(1, 1);
    return q * rs.num() + (IntPoly(1) - q) * rs.den();
}

} // namespace qnum
