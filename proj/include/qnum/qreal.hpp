#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qnum/poly.hpp"

namespace qnum {

// Regular continued-fraction term stream: preperiod then repeating period.
// An empty period means a finite stream; finite without `truncated` is an
// exact rational, with it the terms are a prefix of an unknown expansion.
struct CFStream {
    std::vector<long> pre;
    std::vector<long> per;
    bool truncated = false;

    // "pre=[...]", "per=[...]", "pre=[...];per=[...]", optional ";trunc".
    static CFStream parse(const std::string& text);

    bool finite() const { return per.empty(); }
};

// Deformed real number as a Laurent series in q; every coefficient with
// exponent below stabilized_upto is certified stable.
struct QReal {
    LaurentSeries series;
    int stabilized_upto = 0;

    bool operator==(const QReal& o) const = default;
};

// Expands convergent deformations depth by depth and freezes coefficient k
// once it repeats across three consecutive depths d-2, d-1, d with d > k+2.
// Finite exact streams are answered from their rational value directly;
// a truncated stream that ends before every coefficient below `order` is
// frozen throws StreamExhausted.
QReal stabilize(const CFStream& x, int order);

// k steps of [x+1] = q[x] + 1, or of [x-1] = q^{-1}[x] - q^{-1} for k < 0.
// Each step moves the certified order by +-1.
QReal qreal_translate(const QReal& v, long k);

// (a + sqrt(b))/c with the principal square root; b positive and not a
// perfect square, c nonzero.
struct QuadraticIrrational {
    Int a, b, c;
};

// "(a+sqrtb)/c" form, e.g. "(1+sqrt5)/2".
QuadraticIrrational quadratic_parse(const std::string& text);

// Continued fraction of a positive quadratic surd, split into preperiod
// and period.
CFStream surd_cf(const QuadraticIrrational& x);

// Closed form (A + sqrt(B))/C of the deformed surd; B is monic with
// palindromic coefficients.
struct QQuadraticForm {
    IntPoly A, B, C;

    bool operator==(const QQuadraticForm& o) const = default;
};

QQuadraticForm quadratic_closed_form(const QuadraticIrrational& x);

// Coefficients of the fixed-point equation e2 v^2 + e1 v + e0 = 0
// satisfied by the deformed value, recovered from the closed form.
struct QuadraticEquation {
    IntPoly e2, e1, e0;

    bool operator==(const QuadraticEquation& o) const = default;
};

QuadraticEquation quadratic_equation(const QQuadraticForm& f);

// Expansion of (A + sqrt(B))/C around q = 0 with the branch fixed by
// sqrt(B)(0) = +1; Unsupported when B(0) != 1.
LaurentSeries closed_form_series(const QQuadraticForm& f, int order);

// Smallest and largest root modulus of B.
std::pair<double, double> radius_of_convergence(const QQuadraticForm& f);

} // namespace qnum
