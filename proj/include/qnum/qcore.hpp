#pragma once

#include "qnum/poly.hpp"

namespace qnum {

// q-analogue of an integer: [n] = 1 + q + ... + q^{n-1} for n >= 0, and
// [-n] = -q^{-1} [n](1/q) for n > 0, which has only negative exponents.
LaurentPoly q_int(long n);

// [n]! = [1] [2] ... [n]; requires n >= 0. [0]! = 1.
IntPoly q_factorial(long n);

// Gaussian binomial coefficient; zero outside 0 <= m <= n.
IntPoly q_binomial(long n, long m);

} // namespace qnum
