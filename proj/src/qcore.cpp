#include "qnum/qcore.hpp"

namespace qnum {

LaurentPoly q_int(long n) {
    if (n >= 0) return LaurentPoly(IntPoly(std::vector<Int>(n, Int(1))));
    // [-n] = -(q^-1 + q^-2 + ... + q^n) for n < 0.
    return LaurentPoly(IntPoly(std::vector<Int>(-n, Int(-1))), static_cast<int>(n));
}

IntPoly q_factorial(long n) {
    if (n < 0) throw OutOfRange("q-factorial of a negative integer");
    IntPoly r(1);
    for (long k = 2; k <= n; ++k) r = r * q_int(k).to_poly();
    return r;
}

IntPoly q_binomial(long n, long m) {
    if (n < 0 || m < 0 || m > n) return IntPoly();
    return poly_divexact(q_factorial(n), q_factorial(m) * q_factorial(n - m));
}

} // namespace qnum
