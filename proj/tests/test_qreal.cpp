#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qnum/qrat.hpp"
#include "qnum/qreal.hpp"

using namespace qnum;

namespace {

IntPoly poly(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

LaurentSeries ser(int min_exp, const std::vector<long>& cs, int order) {
    std::vector<Int> v(cs.begin(), cs.end());
    v.resize(static_cast<size_t>(order - min_exp), Int(0));
    return LaurentSeries(min_exp, std::move(v), order);
}

const std::vector<long> kPhi = {1,    0,    1,     -1,    2,     -4,    8,
                                -17,  37,   -82,   185,   -423,  978,   -2283,
                                5373, -12735, 30372, -72832, 175502, -424748,
                                1032004};

const std::vector<long> kSqrt2 = {1,  0,   0,  1,   0,    -2,   1,
                                  4,  -5,  -7, 18,  7,    -55,  18,
                                  146, -155, -322, 692, 476, -2446, 307};

// Treats a power series prefix as a polynomial for exact residual checks.
IntPoly as_poly(const LaurentSeries& s) {
    REQUIRE(s.min_exp() >= 0);
    std::vector<Int> c(static_cast<size_t>(s.order()), Int(0));
    for (int k = s.min_exp(); k < s.order(); ++k)
        c[static_cast<size_t>(k)] = s.coeff(k);
    return IntPoly(std::move(c));
}

bool vanishes_below(const IntPoly& p, int order) {
    return p.is_zero() || p.valuation() >= order;
}

} // namespace

TEST_CASE("stream parsing") {
    CFStream phi = CFStream::parse("per=[1]");
    CHECK(phi.pre.empty());
    CHECK(phi.per == std::vector<long>{1});
    CHECK_FALSE(phi.truncated);
    CHECK_FALSE(phi.finite());

    CFStream mixed = CFStream::parse(" pre=[1, 2] ; per=[3] ");
    CHECK(mixed.pre == std::vector<long>({1, 2}));
    CHECK(mixed.per == std::vector<long>{3});

    CFStream finite = CFStream::parse("pre=[2,3]");
    CHECK(finite.finite());
    CHECK_FALSE(finite.truncated);

    CFStream cut = CFStream::parse("pre=[1,1,1];trunc");
    CHECK(cut.truncated);

    CHECK(CFStream::parse("pre=[0,1]").pre == std::vector<long>({0, 1}));

    CHECK_THROWS_AS(CFStream::parse("per=[]"), error);
    CHECK_THROWS_AS(CFStream::parse("pre=[1];pre=[2]"), error);
    CHECK_THROWS_AS(CFStream::parse("nonsense"), error);
    CHECK_THROWS_AS(CFStream::parse("pre=[1,0]"), error);
    CHECK_THROWS_AS(CFStream::parse("per=[0]"), error);
    CHECK_THROWS_AS(CFStream::parse("pre=[-1]"), error);
    CHECK_THROWS_AS(CFStream::parse("pre=[1,x]"), error);
    CHECK_THROWS_AS(CFStream::parse(""), error);
    CHECK_THROWS_AS(CFStream::parse("per=[1];trunc"), error);
    CHECK_THROWS_AS(CFStream::parse("per=[2000000]"), SizeLimit);
}

TEST_CASE("golden ratio series stabilizes to the printed coefficients") {
    const QReal phi = stabilize(CFStream::parse("per=[1]"), 21);
    CHECK(phi.series == ser(0, kPhi, 21));
    CHECK(phi.stabilized_upto == 21);

    const QReal prefix = stabilize(CFStream::parse("per=[1]"), 13);
    CHECK(prefix.series == ser(0, {1, 0, 1, -1, 2, -4, 8, -17, 37, -82, 185,
                                   -423, 978},
                               13));
}

TEST_CASE("square root of two, directly and via translation") {
    const QReal direct = stabilize(CFStream::parse("pre=[1];per=[2]"), 21);
    CHECK(direct.series == ser(0, kSqrt2, 21));

    const QReal silver = stabilize(CFStream::parse("per=[2]"), 22);
    const QReal shifted = qreal_translate(silver, -1);
    CHECK(shifted.series == ser(0, kSqrt2, 21));
    CHECK(shifted.stabilized_upto == 21);
}

TEST_CASE("phi coefficient signs and magnitudes") {
    // Magnitudes, with the single interior zero dropped, follow one OEIS
    // prefix; signs alternate from exponent 3 on.
    const std::vector<long> magnitudes = {1,    1,    1,     2,     4,
                                          8,    17,   37,    82,    185,
                                          423,  978,  2283,  5373,  12735,
                                          30372, 72832, 175502, 424748, 1032004};
    std::vector<long> stripped;
    for (size_t k = 0; k < kPhi.size(); ++k)
        if (k != 1) stripped.push_back(std::abs(kPhi[k]));
    CHECK(stripped == magnitudes);
    for (size_t k = 3; k < kPhi.size(); ++k)
        CHECK((kPhi[k] > 0) == (k % 2 == 0));
}

TEST_CASE("finite exact streams expand their rational value") {
    const QReal v = stabilize(CFStream::parse("pre=[2,3]"), 12);
    CHECK(v.series == series_expand(q_rational(Rational(7, 3)).value, 12));
    CHECK(v.stabilized_upto == 12);

    const QReal two = stabilize(CFStream::parse("pre=[2]"), 5);
    CHECK(two.series == ser(0, {1, 1}, 5));
}

TEST_CASE("stabilization guards") {
    CHECK_THROWS_AS(stabilize(CFStream::parse("per=[1]"), 0), OutOfRange);
    CHECK_THROWS_AS(stabilize(CFStream::parse("per=[1]"), 400), SizeLimit);
    CHECK_THROWS_AS(stabilize(CFStream{}, 4), error);
    // Six terms certify low-order coefficients but not ten of them.
    const CFStream cut = CFStream::parse("pre=[1,1,1,1,1,1];trunc");
    CHECK(stabilize(cut, 1).series == ser(0, {1}, 1));
    CHECK_THROWS_AS(stabilize(cut, 10), StreamExhausted);
}

TEST_CASE("stabilized prefixes do not depend on the approximating rational") {
    // Two consecutive deep convergents give the same certified prefix.
    const LaurentSeries even =
        series_expand(q_rational(Rational(28657, 17711)).value, 21);
    const LaurentSeries odd =
        series_expand(q_rational(Rational(46368, 28657)).value, 21);
    for (int k = 0; k <= 18; ++k) {
        CHECK(even.coeff(k) == odd.coeff(k));
        CHECK(even.coeff(k) == Int(kPhi[static_cast<size_t>(k)]));
    }
}

TEST_CASE("translation recurrences") {
    const QReal phi = stabilize(CFStream::parse("per=[1]"), 21);
    CHECK(qreal_translate(phi, 0) == phi);
    CHECK(qreal_translate(qreal_translate(phi, -3), 3) == phi);
    CHECK(qreal_translate(qreal_translate(phi, 5), -5) == phi);

    // phi - 2 lies in [-1, 0), so its series leads with -q^{-1}.
    const QReal below = qreal_translate(phi, -2);
    CHECK(below.series.min_exp() == -1);
    CHECK(below.series.coeff(-1) == -1);
    CHECK(below.stabilized_upto == 19);
    std::vector<long> expect = {-1};
    for (size_t k = 2; k < kPhi.size(); ++k) expect.push_back(kPhi[k]);
    CHECK(below.series == ser(-1, expect, 19));

    // [1] - 1 = 0 exactly.
    const QReal one{series_expand(RationalFunc(IntPoly(1)), 10), 10};
    const QReal zero = qreal_translate(one, -1);
    CHECK(zero.series.is_zero());
    CHECK(zero.stabilized_upto == 9);
    // and 0 - 1 = [-1] = -q^{-1}.
    const QReal minus_one = qreal_translate(zero, -1);
    CHECK(minus_one.series == ser(-1, {-1}, 8));
}

TEST_CASE("surd parsing and continued fractions") {
    const QuadraticIrrational phi = quadratic_parse("(1+sqrt5)/2");
    CHECK(phi.a == 1);
    CHECK(phi.b == 5);
    CHECK(phi.c == 2);
    const QuadraticIrrational neg = quadratic_parse(" ( -2 + sqrt 2 ) / -1 ");
    CHECK(neg.a == -2);
    CHECK(neg.c == -1);
    CHECK_THROWS_AS(quadratic_parse("sqrt5"), error);
    CHECK_THROWS_AS(quadratic_parse("(1+sqrt5)/"), error);

    CFStream s = surd_cf({1, 5, 2});
    CHECK(s.pre.empty());
    CHECK(s.per == std::vector<long>{1});
    s = surd_cf({0, 2, 1});
    CHECK(s.pre == std::vector<long>{1});
    CHECK(s.per == std::vector<long>{2});
    s = surd_cf({9, 221, 14});
    CHECK(s.pre.empty());
    CHECK(s.per == std::vector<long>({1, 1, 2, 2}));
    s = surd_cf({-2, 2, -1});
    CHECK(s.pre == std::vector<long>({0, 1, 1}));
    CHECK(s.per == std::vector<long>{2});

    CHECK_THROWS_AS(surd_cf({1, 4, 2}), NotQuadratic);
    CHECK_THROWS_AS(surd_cf({1, -5, 2}), NotQuadratic);
    CHECK_THROWS_AS(surd_cf({1, 5, 0}), NotQuadratic);
    CHECK_THROWS_AS(surd_cf({-3, 2, 1}), NonPositive);
    CHECK_THROWS_AS(surd_cf({1, 5, -2}), NonPositive);
}

TEST_CASE("golden ratio closed form") {
    const QQuadraticForm f = quadratic_closed_form({1, 5, 2});
    CHECK(f.A == poly({-1, 1, 1}));
    CHECK(f.B == poly({1, 2, -1, 2, 1}));
    CHECK(f.B == poly({1, 3, 1}) * poly({1, -1, 1}));
    CHECK(f.C == poly({0, 2}));

    const QuadraticEquation eq = quadratic_equation(f);
    CHECK(eq.e2 == poly({0, 1}));
    CHECK(eq.e1 == poly({1, -1, -1}));
    CHECK(eq.e0 == poly({-1}));

    // The stabilized series satisfies the fixed-point equation mod q^21.
    const IntPoly v = as_poly(stabilize(CFStream::parse("per=[1]"), 21).series);
    CHECK(vanishes_below(eq.e2 * v * v + eq.e1 * v + eq.e0, 21));
}

TEST_CASE("square root of two closed form") {
    const QQuadraticForm f = quadratic_closed_form({0, 2, 1});
    CHECK(f.A == poly({-1, 0, 0, 1}));
    CHECK(f.B == poly({1, 0, 4, -2, 4, 0, 1}));
    CHECK(f.B == poly({1, 1, 4, 1, 1}) * poly({1, -1, 1}));
    CHECK(f.C == poly({0, 0, 2}));

    const QuadraticEquation eq = quadratic_equation(f);
    CHECK(eq.e2 == poly({0, 0, 1}));
    CHECK(eq.e1 == poly({1, 0, 0, -1}));
    CHECK(eq.e0 == poly({-1, 0, -1}));

    const IntPoly v =
        as_poly(stabilize(CFStream::parse("pre=[1];per=[2]"), 21).series);
    CHECK(vanishes_below(eq.e2 * v * v + eq.e1 * v + eq.e0, 21));
}

TEST_CASE("bronze ratio closed form") {
    const QQuadraticForm f = quadratic_closed_form({9, 221, 14});
    CHECK(f.A == poly({-1, 0, 1, 3, 3, 2, 1}));
    CHECK(f.B == poly({1, 4, 10, 18, 27, 34, 33, 34, 27, 18, 10, 4, 1}));
    CHECK(f.C == poly({0, 2, 4, 4, 2, 2}));
    CHECK(f.B.leading() == 1);
    CHECK(f.B.reversed() == f.B);

    const QuadraticEquation eq = quadratic_equation(f);
    CHECK(eq.e2.eval(Int(1)) == 7);
    CHECK(eq.e1.eval(Int(1)) == -9);
    CHECK(eq.e0.eval(Int(1)) == -5);

    CHECK(closed_form_series(f, 12) ==
          ser(0, {1, 0, 1, 0, -1, 1, 1, -4, 5, -2, -5, 13}, 12));
}

TEST_CASE("closed forms agree with stabilization to order 30") {
    const QQuadraticForm phi = quadratic_closed_form({1, 5, 2});
    CHECK(closed_form_series(phi, 30) ==
          stabilize(CFStream::parse("per=[1]"), 30).series);

    const QQuadraticForm root2 = quadratic_closed_form({0, 2, 1});
    CHECK(closed_form_series(root2, 30) ==
          stabilize(CFStream::parse("pre=[1];per=[2]"), 30).series);

    const QQuadraticForm bronze = quadratic_closed_form({9, 221, 14});
    CHECK(closed_form_series(bronze, 30) ==
          stabilize(CFStream::parse("per=[1,1,2,2]"), 30).series);
}

TEST_CASE("negative surd denominator exercises the conjugate branch") {
    // (  -2 + sqrt 2 ) / -1 = 2 - sqrt 2, a root of x^2 - 4x + 2.
    const QQuadraticForm f = quadratic_closed_form({-2, 2, -1});
    const QuadraticEquation eq = quadratic_equation(f);
    const Int lambda = eq.e2.eval(Int(1));
    CHECK(lambda != 0);
    CHECK(eq.e1.eval(Int(1)) == -4 * lambda);
    CHECK(eq.e0.eval(Int(1)) == 2 * lambda);
    CHECK(f.B.leading() == 1);
    CHECK(f.B.reversed() == f.B);
    CHECK(closed_form_series(f, 21) ==
          stabilize(CFStream::parse("pre=[0,1,1];per=[2]"), 21).series);
}

TEST_CASE("series branch requires unit radicand constant term") {
    QQuadraticForm bad = quadratic_closed_form({1, 5, 2});
    bad.B = poly({2, 2, -1, 2, 2});
    CHECK_THROWS_AS(closed_form_series(bad, 5), Unsupported);
}

TEST_CASE("radii of convergence") {
    const double tol = 1e-9;
    const auto [pmin, pmax] = radius_of_convergence(quadratic_closed_form({1, 5, 2}));
    CHECK(std::abs(pmin - (3 - std::sqrt(5.0)) / 2) < tol);
    CHECK(std::abs(pmax - (3 + std::sqrt(5.0)) / 2) < tol);
    CHECK(std::abs(pmin * pmax - 1) < tol);

    const auto [smin, smax] = radius_of_convergence(quadratic_closed_form({0, 2, 1}));
    const double s2 = std::sqrt(2.0);
    CHECK(std::abs(smin - (1 + s2 - std::sqrt(2 * s2 - 1)) / 2) < tol);
    CHECK(std::abs(smax - (1 + s2 + std::sqrt(2 * s2 - 1)) / 2) < tol);
    CHECK(std::abs(smin * smax - 1) < tol);

    const auto [bmin, bmax] = radius_of_convergence(quadratic_closed_form({9, 221, 14}));
    const double s13 = std::sqrt(13.0);
    CHECK(std::abs(bmin - (1 + s13 - std::sqrt(2 * (s13 - 1))) / 4) < 1e-8);
    CHECK(std::abs(bmax - (1 + s13 + std::sqrt(2 * (s13 - 1))) / 4) < 1e-8);
    CHECK(std::abs(bmin * bmax - 1) < 1e-8);
}
