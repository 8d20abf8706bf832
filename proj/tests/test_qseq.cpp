#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnum/qcore.hpp"
#include "qnum/qrat.hpp"
#include "qnum/qseq.hpp"

using namespace qnum;

namespace {

IntPoly poly(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

} // namespace

TEST_CASE("q-Fibonacci seeds and small terms") {
    CHECK(q_fibonacci(0).is_zero());
    CHECK(q_fibonacci(1) == poly({1}));
    CHECK(q_fibonacci(2) == poly({1}));
    CHECK(q_fibonacci(3) == poly({1, 1}));
    CHECK(q_fibonacci(4) == poly({1, 1, 1}));
    CHECK(q_fibonacci(5) == poly({1, 2, 1, 1}));
    CHECK(q_fibonacci(6) == poly({1, 2, 2, 2, 1}));
    CHECK(q_fibonacci(7) == poly({1, 3, 3, 3, 2, 1}));
    CHECK(q_fibonacci(8) == poly({1, 3, 4, 5, 4, 3, 1}));
    CHECK_THROWS_AS(q_fibonacci(-1), OutOfRange);
}

TEST_CASE("q-Pell seeds and small terms") {
    CHECK(q_pell(0).is_zero());
    CHECK(q_pell(1) == poly({1}));
    CHECK(q_pell(2) == poly({1, 1}));
    CHECK(q_pell(3) == poly({1, 1, 2, 1}));
    CHECK(q_pell(4) == poly({1, 2, 3, 3, 2, 1}));
    CHECK(q_pell(5) == poly({1, 2, 5, 6, 6, 5, 3, 1}));
    CHECK(q_pell(6) == poly({1, 3, 7, 11, 13, 13, 11, 7, 3, 1}));
    CHECK(q_pell(7) == poly({1, 3, 9, 16, 24, 29, 29, 25, 18, 10, 4, 1}));
    CHECK(q_pell(7).eval(Int(1)) == 169);
    CHECK_THROWS_AS(q_pell(-3), OutOfRange);
}

TEST_CASE("recurrences hold exactly and specialize to the classical values") {
    const QSequence fib = q_sequence(SeqKind::fibonacci, 40);
    const QSequence pell = q_sequence(SeqKind::pell, 40);
    CHECK(fib.kind == SeqKind::fibonacci);
    CHECK(fib.polys.size() == 41);
    CHECK(pell.polys.size() == 41);

    const IntPoly three = q_int(3).to_poly();
    const IntPoly six = q_binomial(4, 2);
    const IntPoly q2 = IntPoly::monomial(1, 2);
    const IntPoly q4 = IntPoly::monomial(1, 4);
    for (size_t n = 4; n <= 40; ++n) {
        CHECK(fib.polys[n] == three * fib.polys[n - 2] - q2 * fib.polys[n - 4]);
        CHECK(pell.polys[n] == six * pell.polys[n - 2] - q4 * pell.polys[n - 4]);
    }

    Int f0 = 0, f1 = 1, p0 = 0, p1 = 1;
    for (size_t n = 0; n <= 40; ++n) {
        CHECK(fib.polys[n].eval(Int(1)) == f0);
        CHECK(pell.polys[n].eval(Int(1)) == p0);
        Int f2 = f0 + f1, p2 = 2 * p1 + p0;
        f0 = f1; f1 = f2;
        p0 = p1; p1 = p2;
    }
}

TEST_CASE("degrees, constant and leading coefficients") {
    const QSequence fib = q_sequence(SeqKind::fibonacci, 30);
    const QSequence pell = q_sequence(SeqKind::pell, 30);
    for (long n = 2; n <= 30; ++n) {
        const IntPoly& f = fib.polys[static_cast<size_t>(n)];
        const IntPoly& p = pell.polys[static_cast<size_t>(n)];
        CHECK(f.degree() == n - 2);
        CHECK(p.degree() == 2 * n - 3);
        CHECK(f.coeff(0) == 1);
        CHECK(p.coeff(0) == 1);
        CHECK(f.leading() == 1);
        CHECK(p.leading() == 1);
        CHECK(is_weakly_unimodal(f));
        CHECK(is_weakly_unimodal(p));
    }
}

TEST_CASE("mirrors reverse coefficients with the degree shift") {
    CHECK(mirror(SeqKind::fibonacci, 2) == LaurentPoly(1L));
    CHECK(mirror(SeqKind::fibonacci, 5) == LaurentPoly(poly({1, 1, 2, 1})));
    CHECK(mirror(SeqKind::fibonacci, 6) == LaurentPoly(poly({1, 2, 2, 2, 1})));
    CHECK(mirror(SeqKind::pell, 3) == LaurentPoly(poly({1, 2, 1, 1})));
    CHECK(mirror(SeqKind::pell, 5) == LaurentPoly(poly({1, 3, 5, 6, 6, 5, 2, 1})));
    CHECK_THROWS_AS(mirror(SeqKind::fibonacci, 1), OutOfRange);
    CHECK_THROWS_AS(mirror(SeqKind::pell, 0), OutOfRange);

    for (long n = 2; n <= 25; ++n) {
        for (SeqKind kind : {SeqKind::fibonacci, SeqKind::pell}) {
            const LaurentPoly m = mirror(kind, n);
            CHECK(m.is_polynomial());
            CHECK(m.min_exp() == 0);
            const IntPoly original =
                kind == SeqKind::fibonacci ? q_fibonacci(n) : q_pell(n);
            // Mirroring twice with the same shift is the identity.
            CHECK(m.to_poly().reversed() == original);
        }
    }
}

TEST_CASE("consecutive-term quotients deform the classical ratios") {
    for (long n = 2; n <= 25; ++n) {
        CHECK(quotient_identity_check(SeqKind::fibonacci, n));
        CHECK(quotient_identity_check(SeqKind::pell, n));
    }
    CHECK_THROWS_AS(quotient_identity_check(SeqKind::fibonacci, 1), OutOfRange);
}

TEST_CASE("quotients are already in lowest terms") {
    // The reduced quotient keeps the mirror as numerator and the previous
    // term as denominator, so the two are coprime.
    for (long n = 2; n <= 25; ++n) {
        for (SeqKind kind : {SeqKind::fibonacci, SeqKind::pell}) {
            const QSequence s = q_sequence(kind, n + 1);
            const IntPoly& lo = s.polys[static_cast<size_t>(n)];
            const RationalFunc quotient = RationalFunc::from_laurent(
                mirror(kind, n + 1), LaurentPoly(lo));
            CHECK(quotient.num() == mirror(kind, n + 1).to_poly());
            CHECK(quotient.den() == lo);
        }
    }
}

TEST_CASE("golden quotient values") {
    const RationalFunc fib5 = RationalFunc::from_laurent(
        mirror(SeqKind::fibonacci, 6), LaurentPoly(q_fibonacci(5)));
    CHECK(fib5 == RationalFunc(poly({1, 2, 2, 2, 1}), poly({1, 2, 1, 1})));
    CHECK(fib5 == q_rational(Rational(8, 5)).value);

    const RationalFunc fib2 = RationalFunc::from_laurent(
        mirror(SeqKind::fibonacci, 3), LaurentPoly(q_fibonacci(2)));
    CHECK(fib2 == RationalFunc(poly({1, 1})));

    const RationalFunc pell3 = RationalFunc::from_laurent(
        mirror(SeqKind::pell, 4), LaurentPoly(q_pell(3)));
    CHECK(pell3 == q_rational(Rational(12, 5)).value);
    CHECK(pell3 == q_rational_regular(Rational(12, 5)).value);
}

TEST_CASE("sequence generation guards") {
    CHECK_THROWS_AS(q_sequence(SeqKind::pell, -1), OutOfRange);
    CHECK_THROWS_AS(q_sequence(SeqKind::pell, 5000), SizeLimit);
    const QSequence s = q_sequence(SeqKind::fibonacci, 2);
    CHECK(s.polys.size() == 3);
    CHECK(s.polys[2] == poly({1}));
}
