#include "qnum/qrat.hpp"

#include <cstdlib>

#include "qnum/qcore.hpp"

namespace qnum {

QMatrix qmat_R() { return {LaurentPoly::monomial(1, 1), 1L, 0L, 1L}; }
QMatrix qmat_L() { return {LaurentPoly::monomial(1, 1), 0L, LaurentPoly::monomial(1, 1), 1L}; }
QMatrix qmat_S() { return {0L, LaurentPoly::monomial(-1, -1), 1L, 0L}; }

namespace {

// Digits become exponents and coefficient counts; keep them sane.
constexpr long kMaxDeformableTerm = 1000000;

int checked_exp(long a) {
    if (std::abs(a) > kMaxDeformableTerm)
        throw SizeLimit("continued fraction term too large to deform");
    return static_cast<int>(a);
}

// p(1/q) as a Laurent polynomial: reversed coefficients, mirrored exponents.
LaurentPoly laurent_recip(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return LaurentPoly(p.unit().reversed(), -p.max_exp());
}

struct Frac {
    LaurentPoly num, den;
};

RationalFunc finish(const Frac& v) {
    if (v.den.is_zero()) throw DivisionByZero("zero denominator inside evaluation");
    return RationalFunc::reduced_unchecked(v.num, v.den);
}

} // namespace

RationalFunc q_eval(const RegularCF& cf) {
    if (cf.a.empty()) throw error("empty continued fraction");
    // Bottom-up over numerator/denominator pairs: odd positions contribute
    // [a]_q with weight q^a, even positions [a]_{1/q} with weight q^{-a}.
    Frac v{1L, 0L};
    for (size_t i = cf.a.size(); i-- > 0;) {
        int a = checked_exp(cf.a[i]);
        bool odd_pos = i % 2 == 0;
        LaurentPoly t = odd_pos ? q_int(a) : laurent_recip(q_int(a));
        LaurentPoly w = LaurentPoly::monomial(1, odd_pos ? a : -a);
        v = Frac{t * v.num + w * v.den, v.num};
    }
    return finish(v);
}

RationalFunc q_eval(const HJCF& cf) {
    if (cf.c.empty()) throw error("empty continued fraction");
    Frac v{1L, 0L};
    for (size_t i = cf.c.size(); i-- > 0;) {
        int c = checked_exp(cf.c[i]);
        v = Frac{q_int(c) * v.num - LaurentPoly::monomial(1, c - 1) * v.den, v.num};
    }
    return finish(v);
}

QMatrix q_matrix_word(const RegularCF& cf) {
    QMatrix m = QMatrix::identity();
    bool on_r = true;
    for (long a : cf.a) {
        checked_exp(a);
        if (a < 0) throw NonPositive("matrix word needs nonnegative terms");
        const QMatrix g = on_r ? qmat_R() : qmat_L();
        for (long k = 0; k < a; ++k) m = m * g;
        on_r = !on_r;
    }
    return m;
}

QMatrix q_matrix_word(const HJCF& cf) {
    QMatrix m = QMatrix::identity();
    for (long c : cf.c) {
        checked_exp(c);
        if (c < 0) throw NonPositive("matrix word needs nonnegative terms");
        for (long k = 0; k < c; ++k) m = m * qmat_R();
        m = m * qmat_S();
    }
    return m;
}

QRational q_rational_regular(const Rational& x) {
    return {x, q_eval(cf_regular(x))};
}

QRational q_rational_hj(const Rational& x) {
    return {x, q_eval(cf_hj(x))};
}

QRational q_rational_matrix(const Rational& x) {
    QMatrix m = q_matrix_word(cf_regular(x));
    // The word evaluates to (q N, N'; q D, D') with N/D the deformation.
    return {x, RationalFunc::reduced_unchecked(m.a, m.c)};
}

QRational q_rational(const Rational& x) {
    if (x.value() > 0) return q_rational_regular(x);
    // Shift into [1,2), deform, and translate back down.
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    Int shift = 1 - fl;
    if (!shift.fits_slong_p()) throw SizeLimit("translation distance exceeds machine range");
    long n = shift.get_si();
    QRational base = q_rational_regular(Rational(x.value() + shift));
    return {x, psl2_translate(base.value, -n)};
}

RationalFunc psl2_translate(const RationalFunc& f, long k) {
    if (std::abs(k) > kMaxDeformableTerm)
        throw SizeLimit("translation distance too large");
    RationalFunc r = f;
    for (; k > 0; --k)
        r = RationalFunc::reduced_unchecked(
            LaurentPoly(r.num(), 1) + LaurentPoly(r.den()), LaurentPoly(r.den()));
    for (; k < 0; ++k)
        r = RationalFunc::reduced_unchecked(
            LaurentPoly(r.num()) - LaurentPoly(r.den()), LaurentPoly(r.den(), 1));
    return r;
}

RationalFunc psl2_neg_inv(const RationalFunc& f) {
    if (f.is_zero()) throw ZeroInput("negated inverse of zero");
    return RationalFunc::reduced_unchecked(LaurentPoly(-f.den()),
                                           LaurentPoly(f.num(), 1));
}

RationalFunc psl2_negate(const RationalFunc& f) {
    if (f.is_zero()) return f;
    // -q^{-1} f(1/q), with the substitution done by coefficient reversal.
    int e = f.den().degree() - f.num().degree() - 1;
    return RationalFunc::reduced_unchecked(LaurentPoly(-f.num().reversed(), e),
                                           LaurentPoly(f.den().reversed()));
}

bool farey_neighbors(const Rational& x, const Rational& y) {
    Int d = x.num() * y.den() - y.num() * x.den();
    return d == 1 || d == -1;
}

namespace {

// Expansion state of a tree vertex: the anchors it was formed from (upper
// anchor first) and the exponent history of consecutive upper-ward steps.
struct SpanState {
    IntPoly upn, upd;   // label pair of the upper anchor
    Int uxn, uxd;       // its fraction
    IntPoly lon, lod;   // label pair of the lower anchor
    Int lxn, lxd;
    int e;
};

} // namespace

std::vector<std::vector<TreeNode>> stern_brocot_enumerate(int depth) {
    if (depth < 0) throw error("negative depth");
    if (depth > 20) throw SizeLimit("tree depth limited to 20");
    std::vector<std::vector<TreeNode>> rows(depth + 1);
    std::vector<SpanState> current{SpanState{IntPoly(1), IntPoly(0), Int(1), Int(0),
                                             IntPoly(0), IntPoly(1), Int(0), Int(1), -1}};
    for (int d = 0; d <= depth; ++d) {
        std::vector<SpanState> next;
        next.reserve(current.size() * 2);
        rows[d].reserve(current.size());
        for (const SpanState& s : current) {
            int k = s.e + 1;
            IntPoly cn = s.upn.shifted(k) + s.lon;
            IntPoly cd = s.upd.shifted(k) + s.lod;
            Int xn = s.uxn + s.lxn;
            Int xd = s.uxd + s.lxd;
            rows[d].push_back(TreeNode{
                Rational(xn, xd),
                RationalFunc::reduced_unchecked(LaurentPoly(cn), LaurentPoly(cd)), k});
            if (d == depth) continue;
            // Lower-ward child first keeps each row ordered by value.
            next.push_back(SpanState{cn, cd, xn, xd, s.lon, s.lod, s.lxn, s.lxd, 0});
            next.push_back(SpanState{s.upn, s.upd, s.uxn, s.uxd, cn, cd, xn, xd, s.e + 1});
        }
        current = std::move(next);
    }
    return rows;
}

IntPoly x_polynomial(const QRational& a, const QRational& b) {
    if (!(a.x > b.x) || !(b.x > Rational(0)))
        throw OrderViolation("arguments must satisfy a > b > 0");
    return a.value.num() * b.value.den() - a.value.den() * b.value.num();
}

bool is_weakly_unimodal(const IntPoly& p) {
    const std::vector<Int>& c = p.coeffs();
    size_t i = 1;
    while (i < c.size() && c[i] >= c[i - 1]) ++i;
    while (i < c.size() && c[i] <= c[i - 1]) ++i;
    return i >= c.size();
}

} // namespace qnum
