#pragma once

#include <vector>

#include "qnum/poly.hpp"

namespace qnum {

enum class SeqKind { fibonacci, pell };

// Terms 0..n of one family. Generated per call; no shared state.
struct QSequence {
    SeqKind kind;
    std::vector<IntPoly> polys;
};

QSequence q_sequence(SeqKind kind, long upto);

// F(n+2) = [3] F(n) - q^2 F(n-2) from F(0)=0, F(1)=1, F(2)=1, F(3)=1+q.
// F(n)(1) is the n-th Fibonacci number; deg F(n) = n-2 for n >= 2.
IntPoly q_fibonacci(long n);

// P(n+2) = binom(4,2)_q P(n) - q^4 P(n-2) from P(0)=0, P(1)=1, P(2)=1+q,
// P(3)=1+q+2q^2+q^3. P(n)(1) is the n-th Pell number; deg P(n) = 2n-3.
IntPoly q_pell(long n);

// Coefficient reversal with the degree shift that keeps the constant term
// at q^0: q^{n-2} F_n(1/q), resp. q^{2n-3} P_n(1/q). Needs n >= 2.
LaurentPoly mirror(SeqKind kind, long n);

// True when mirror(kind, n+1) / term(n), reduced, equals the deformation of
// the classical ratio term(n+1)(1) / term(n)(1). Needs n >= 2.
bool quotient_identity_check(SeqKind kind, long n);

} // namespace qnum
