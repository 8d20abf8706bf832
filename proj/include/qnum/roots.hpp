#pragma once

#include <utility>

#include "qnum/poly.hpp"

namespace qnum {

// Smallest and largest modulus among the complex roots of p, ignoring
// multiplicities. A root at the origin contributes modulus 0. Each returned
// modulus is certified a posteriori to within tol; throws ToleranceNotReached
// if certification fails and requires degree >= 1.
std::pair<double, double> roots_minmax_modulus(const IntPoly& p, double tol = 1e-9);

} // namespace qnum
