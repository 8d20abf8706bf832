#include "qnum/qseq.hpp"

#include <utility>

#include "qnum/errors.hpp"
#include "qnum/qcore.hpp"
#include "qnum/qrat.hpp"

namespace qnum {

namespace {

std::vector<IntPoly> seeds(SeqKind kind) {
    if (kind == SeqKind::fibonacci)
        return {IntPoly(0), IntPoly(1), IntPoly(1),
                IntPoly(std::vector<Int>{1, 1})};
    return {IntPoly(0), IntPoly(1), IntPoly(std::vector<Int>{1, 1}),
            IntPoly(std::vector<Int>{1, 1, 2, 1})};
}

} // namespace

QSequence q_sequence(SeqKind kind, long upto) {
    if (upto < 0) throw OutOfRange("sequence index must be nonnegative");
    if (upto > 4096) throw SizeLimit("sequence index too large");
    QSequence s{kind, seeds(kind)};
    const IntPoly mult = kind == SeqKind::fibonacci ? q_int(3).to_poly()
                                                    : q_binomial(4, 2);
    const IntPoly back =
        IntPoly::monomial(1, kind == SeqKind::fibonacci ? 2 : 4);
    for (long n = 4; n <= upto; ++n)
        s.polys.push_back(mult * s.polys[static_cast<size_t>(n - 2)] -
                          back * s.polys[static_cast<size_t>(n - 4)]);
    s.polys.resize(static_cast<size_t>(upto) + 1);
    return s;
}

IntPoly q_fibonacci(long n) {
    return q_sequence(SeqKind::fibonacci, n).polys.back();
}

IntPoly q_pell(long n) {
    return q_sequence(SeqKind::pell, n).polys.back();
}

LaurentPoly mirror(SeqKind kind, long n) {
    if (n < 2) throw OutOfRange("mirror needs index >= 2");
    const IntPoly p = kind == SeqKind::fibonacci ? q_fibonacci(n) : q_pell(n);
    const long shift = kind == SeqKind::fibonacci ? n - 2 : 2 * n - 3;
    // q^shift p(1/q) = q^{shift-deg} rev(p).
    return LaurentPoly(p.reversed(), static_cast<int>(shift) - p.degree());
}

bool quotient_identity_check(SeqKind kind, long n) {
    if (n < 2) throw OutOfRange("quotient identity needs index >= 2");
    const QSequence s = q_sequence(kind, n + 1);
    const IntPoly& lo = s.polys[static_cast<size_t>(n)];
    const IntPoly& hi = s.polys[static_cast<size_t>(n + 1)];
    const RationalFunc quotient =
        RationalFunc::from_laurent(mirror(kind, n + 1), LaurentPoly(lo));
    const Rational x(hi.eval(Int(1)), lo.eval(Int(1)));
    return quotient == q_rational(x).value;
}

} // namespace qnum
