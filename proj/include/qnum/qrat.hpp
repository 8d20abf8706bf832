#pragma once

#include <vector>

#include "qnum/cfrac.hpp"
#include "qnum/poly.hpp"

namespace qnum {

// 2x2 matrix over Laurent polynomials, used for the generator-product route.
struct QMatrix {
    LaurentPoly a, b, c, d;   // rows (a b; c d)

    static QMatrix identity() { return {1L, 0L, 0L, 1L}; }
    friend QMatrix operator*(const QMatrix& x, const QMatrix& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    LaurentPoly det() const { return a * d - b * c; }
    bool operator==(const QMatrix& o) const = default;
};

// Deformed elementary matrices.
QMatrix qmat_R();   // (q 1; 0 1)
QMatrix qmat_L();   // (q 0; q 1)
QMatrix qmat_S();   // (0 -q^-1; 1 0)

// A rational number together with its q-deformation, a reduced fraction of
// coprime integer polynomials whose denominator has unit constant term for
// positive x and whose value at q = 1 recovers x.
struct QRational {
    Rational x;
    RationalFunc value;

    bool operator==(const QRational& o) const = default;
};

// The three evaluation routes. They agree on every rational; keeping them
// separate lets tests cross-check one against another. Positive arguments
// only for the route-specific entry points; q_rational extends to all
// rationals by shifting into [1,2) and translating back.
QRational q_rational_regular(const Rational& x);
QRational q_rational_hj(const Rational& x);
QRational q_rational_matrix(const Rational& x);
QRational q_rational(const Rational& x);

// Evaluation of explicit term lists (entries may violate the expansion
// invariants as long as no intermediate division by zero occurs).
RationalFunc q_eval(const RegularCF& cf);
RationalFunc q_eval(const HJCF& cf);

// Generator words: R^{a1} L^{a2} R^{a3} ... for the regular form and
// R^{c1} S R^{c2} S ... for the ceiling form, multiplied out literally.
QMatrix q_matrix_word(const RegularCF& cf);
QMatrix q_matrix_word(const HJCF& cf);

// Modular group action on q-deformed values: x -> x + k, x -> -1/x, and
// x -> -x. neg_inv throws ZeroInput on zero; all preserve coprimality.
RationalFunc psl2_translate(const RationalFunc& f, long k);
RationalFunc psl2_neg_inv(const RationalFunc& f);
RationalFunc psl2_negate(const RationalFunc& f);

// |ps' - p's| = 1, the condition for an edge in the Farey graph.
bool farey_neighbors(const Rational& x, const Rational& y);

// One node of the weighted mediant tree: the fraction, its deformation, and
// the q-power applied to the upper parent when the mediant was formed.
struct TreeNode {
    Rational x;
    RationalFunc label;
    int weight;
};

// Rows 0..depth of the tree, each row ordered by increasing x.
std::vector<std::vector<TreeNode>> stern_brocot_enumerate(int depth);

// Pairing polynomial num(a) den(b) - den(a) num(b); requires a.x > b.x > 0.
IntPoly x_polynomial(const QRational& a, const QRational& b);

// Coefficients rise (weakly) then fall (weakly).
bool is_weakly_unimodal(const IntPoly& p);

} // namespace qnum
