#include "qnum/qreal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <utility>

#include "qnum/cfrac.hpp"
#include "qnum/errors.hpp"
#include "qnum/qrat.hpp"
#include "qnum/roots.hpp"

namespace qnum {

namespace {

constexpr long kMaxTerm = 1000000;
constexpr int kMaxOrder = 256;

void validate_stream(const CFStream& x) {
    if (x.pre.empty() && x.per.empty()) throw error("empty term stream");
    if (x.truncated && !x.per.empty())
        throw error("a truncated stream cannot also be periodic");
    bool first = true;
    for (long t : x.pre) {
        if (t < (first ? 0 : 1))
            throw error("stream terms must be positive after the first");
        if (t > kMaxTerm) throw SizeLimit("stream term too large");
        first = false;
    }
    for (long t : x.per) {
        // Period terms recur, so none of them may be the leading zero.
        if (t < 1) throw error("period terms must be positive");
        if (t > kMaxTerm) throw SizeLimit("stream term too large");
    }
}

std::vector<long> parse_terms(const std::string& body) {
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw error("expected a bracketed term list, got '" + body + "'");
    std::vector<long> out;
    const std::string inner = body.substr(1, body.size() - 2);
    if (inner.empty()) return out;
    size_t pos = 0;
    while (true) {
        const size_t comma = inner.find(',', pos);
        const std::string item = inner.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size() || item.empty()) throw error("trailing junk");
        } catch (const std::exception&) {
            throw error("bad continued fraction term '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// Drop coefficients above exponent cap.
IntPoly chop(const IntPoly& p, int cap) {
    if (p.degree() <= cap) return p;
    std::vector<Int> c(p.coeffs().begin(), p.coeffs().begin() + cap + 1);
    return IntPoly(std::move(c));
}

// [count]_q mod q^{cap+1}.
IntPoly ones_mod(long count, int cap) {
    std::vector<Int> c(static_cast<size_t>(std::min<long>(count, cap + 1)),
                       Int(1));
    return IntPoly(std::move(c));
}

IntPoly qpow_mod(long e, int cap) {
    return e > cap ? IntPoly() : IntPoly::monomial(1, static_cast<int>(e));
}

struct Mat2 {
    IntPoly a, b, c, d;
};

Mat2 mul_mod(const Mat2& x, const Mat2& y, int cap) {
    return {chop(x.a * y.a + x.b * y.c, cap), chop(x.a * y.b + x.b * y.d, cap),
            chop(x.c * y.a + x.d * y.c, cap), chop(x.c * y.b + x.d * y.d, cap)};
}

QReal shift_up(const QReal& v) {
    const LaurentSeries& s = v.series;
    const int new_order = s.order() + 1;
    const int lo = std::min(s.min_exp() + 1, 0);
    std::vector<Int> c;
    for (int e = lo; e < new_order; ++e) {
        Int val = s.coeff(e - 1);
        if (e == 0) val += 1;
        c.push_back(val);
    }
    return {LaurentSeries(lo, std::move(c), new_order), new_order};
}

QReal shift_down(const QReal& v) {
    const LaurentSeries& s = v.series;
    const int new_order = s.order() - 1;
    const int lo = std::min(s.min_exp(), 0) - 1;
    std::vector<Int> c;
    for (int e = lo; e < new_order; ++e) {
        Int val = s.coeff(e + 1);
        if (e + 1 == 0) val -= 1;
        c.push_back(val);
    }
    return {LaurentSeries(lo, std::move(c), new_order), new_order};
}

void validate_surd(const QuadraticIrrational& x) {
    if (x.c == 0) throw NotQuadratic("surd denominator is zero");
    if (x.b <= 0) throw NotQuadratic("radicand must be positive");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.b.get_mpz_t());
    if (r * r == x.b) throw NotQuadratic("radicand is a perfect square");
    const bool numerator_positive = x.a >= 0 || x.a * x.a < x.b;
    if (numerator_positive != (x.c > 0))
        throw NonPositive("quadratic irrational must be positive");
}

} // namespace

CFStream CFStream::parse(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    CFStream out;
    bool saw_pre = false, saw_per = false;
    size_t pos = 0;
    while (pos < t.size()) {
        const size_t end = t.find(';', pos);
        const std::string piece =
            t.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? t.size() : end + 1;
        if (piece.rfind("pre=", 0) == 0 && !saw_pre) {
            out.pre = parse_terms(piece.substr(4));
            saw_pre = true;
        } else if (piece.rfind("per=", 0) == 0 && !saw_per) {
            out.per = parse_terms(piece.substr(4));
            saw_per = true;
        } else if (piece == "trunc" && !out.truncated) {
            out.truncated = true;
        } else {
            throw error("bad stream piece '" + piece + "'");
        }
    }
    if (saw_per && out.per.empty()) throw error("period must be nonempty");
    validate_stream(out);
    return out;
}

QReal stabilize(const CFStream& x, int order) {
    validate_stream(x);
    if (order < 1) throw OutOfRange("order must be positive");
    if (order > kMaxOrder) throw SizeLimit("order too large");

    if (x.finite() && !x.truncated) {
        const Rational v = cf_eval(RegularCF{x.pre});
        return {series_expand(q_rational(v).value, order), order};
    }

    // Entries only matter mod q^{order+2}: convergent denominators have unit
    // low-order part, so deeper coefficients never feed back into the series.
    const int cap = order + 1;
    Mat2 m{IntPoly(1), IntPoly(), IntPoly(), IntPoly(1)};
    std::vector<std::vector<Int>> history;
    std::vector<Int> frozen(static_cast<size_t>(order));
    std::vector<bool> have(static_cast<size_t>(order), false);
    int missing = order;
    const long max_depth = 4L * order + 64;
    const size_t pre_len = x.pre.size();
    long d = 0;
    while (true) {
        long term;
        if (static_cast<size_t>(d) < pre_len) {
            term = x.pre[static_cast<size_t>(d)];
        } else if (!x.per.empty()) {
            term = x.per[(static_cast<size_t>(d) - pre_len) % x.per.size()];
        } else {
            throw StreamExhausted("stream ended before coefficients stabilized");
        }
        ++d;
        const bool odd_depth = d % 2 == 1;
        const Mat2 g =
            odd_depth
                ? Mat2{qpow_mod(term, cap), ones_mod(term, cap), IntPoly(),
                       IntPoly(1)}
                : Mat2{qpow_mod(term, cap), IntPoly(),
                       chop(ones_mod(term, cap).shifted(1), cap), IntPoly(1)};
        m = mul_mod(m, g, cap);
        const LaurentSeries s =
            odd_depth ? series_expand(m.b, m.d, order)
                      : series_expand(m.a, m.c, order);
        std::vector<Int> row(static_cast<size_t>(order));
        for (int k = 0; k < order; ++k) row[static_cast<size_t>(k)] = s.coeff(k);
        history.push_back(std::move(row));
        if (history.size() > 3) history.erase(history.begin());
        if (history.size() == 3) {
            for (int k = 0; k < order; ++k) {
                const auto ku = static_cast<size_t>(k);
                if (have[ku] || d <= k + 2) continue;
                if (history[0][ku] == history[1][ku] &&
                    history[1][ku] == history[2][ku]) {
                    have[ku] = true;
                    frozen[ku] = history[2][ku];
                    --missing;
                }
            }
        }
        if (missing == 0) break;
        if (d > max_depth)
            throw ToleranceNotReached("coefficients did not stabilize");
    }
    return {LaurentSeries(0, std::move(frozen), order), order};
}

QReal qreal_translate(const QReal& v, long k) {
    QReal out = v;
    for (; k > 0; --k) out = shift_up(out);
    for (; k < 0; ++k) out = shift_down(out);
    return out;
}

QuadraticIrrational quadratic_parse(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    static const std::regex form(R"(^\((-?\d+)\+sqrt(\d+)\)/(-?\d+)$)");
    std::smatch m;
    if (!std::regex_match(t, m, form))
        throw error("expected a surd of the form (a+sqrtb)/c, got '" + text + "'");
    return {Int(m[1].str()), Int(m[2].str()), Int(m[3].str())};
}

CFStream surd_cf(const QuadraticIrrational& x) {
    validate_surd(x);
    // Normalize to (P + sqrt(D))/Q with Q dividing D - P^2, which keeps the
    // digit recursion in integers.
    const Int ac = abs(x.c);
    const Int D = x.b * x.c * x.c;
    Int P = x.a * ac;
    Int Q = x.c * ac;
    Int root;
    mpz_sqrt(root.get_mpz_t(), D.get_mpz_t());
    std::map<std::pair<Int, Int>, size_t> seen;
    std::vector<long> digits;
    while (true) {
        const auto key = std::make_pair(P, Q);
        const auto it = seen.find(key);
        if (it != seen.end()) {
            CFStream out;
            out.pre.assign(digits.begin(),
                           digits.begin() + static_cast<long>(it->second));
            out.per.assign(digits.begin() + static_cast<long>(it->second),
                           digits.end());
            return out;
        }
        if (seen.size() > 65536) throw SizeLimit("period search exceeded limit");
        seen.emplace(key, digits.size());
        // floor((P + sqrt(D))/Q); sqrt(D) is irrational, so the floor of the
        // quotient only needs root (and root+1 when Q < 0).
        Int t = P + root + (Q < 0 ? 1 : 0);
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), t.get_mpz_t(), Q.get_mpz_t());
        if (!a.fits_slong_p() || a.get_si() > kMaxTerm)
            throw SizeLimit("continued fraction term too large");
        digits.push_back(a.get_si());
        const Int P2 = a * Q - P;
        Q = (D - P2 * P2) / Q;
        P = P2;
    }
}

QQuadraticForm quadratic_closed_form(const QuadraticIrrational& x) {
    const CFStream cf = surd_cf(x);
    std::vector<long> pre = cf.pre;
    std::vector<long> per = cf.per;
    // Even preperiod keeps the period aligned with the R-first convention;
    // even period length makes the period word a genuine R/L block.
    if (pre.size() % 2 == 1) {
        pre.push_back(per.front());
        std::rotate(per.begin(), per.begin() + 1, per.end());
    }
    if (per.size() % 2 == 1) {
        std::vector<long> doubled = per;
        doubled.insert(doubled.end(), per.begin(), per.end());
        per = std::move(doubled);
    }

    const QMatrix m = q_matrix_word(RegularCF{per});
    LaurentPoly e2 = m.c;
    LaurentPoly e1 = m.d - m.a;
    LaurentPoly e0 = -m.b;
    if (!pre.empty()) {
        // The preperiod word maps the purely periodic tail value y to x, so
        // y = (d v - b)/(-c v + a) turns the tail's fixed-point equation
        // into one for v itself.
        const QMatrix n = q_matrix_word(RegularCF{pre});
        const LaurentPoly two(2L);
        const LaurentPoly f2 = e2 * n.d * n.d - e1 * n.d * n.c + e0 * n.c * n.c;
        const LaurentPoly f1 = e1 * (n.d * n.a + n.b * n.c) -
                               two * (e2 * n.d * n.b + e0 * n.c * n.a);
        const LaurentPoly f0 = e2 * n.b * n.b - e1 * n.b * n.a + e0 * n.a * n.a;
        e2 = f2;
        e1 = f1;
        e0 = f0;
    }

    IntPoly E2 = e2.to_poly(), E1 = e1.to_poly(), E0 = e0.to_poly();
    const IntPoly g = poly_gcd(poly_gcd(E2, E1), E0);
    E2 = poly_divexact(E2, g);
    E1 = poly_divexact(E1, g);
    E0 = poly_divexact(E0, g);
    if (E2.leading() < 0) {
        E2 = -E2;
        E1 = -E1;
        E0 = -E0;
    }
    IntPoly A = -E1;
    const IntPoly B = E1 * E1 - IntPoly(4) * E2 * E0;
    IntPoly C = E2 + E2;

    // Pick the branch that matches the input surd. Both live in the same
    // quadratic field, so B(1) = b m^2 and the comparison is exact.
    const Int A1 = A.eval(Int(1));
    const Int B1 = B.eval(Int(1));
    const Int C1 = C.eval(Int(1));
    if (B1 <= 0 || B1 % x.b != 0)
        throw InternalMismatch("discriminant leaves the field");
    const Int m2 = B1 / x.b;
    Int mroot;
    mpz_sqrt(mroot.get_mpz_t(), m2.get_mpz_t());
    if (mroot * mroot != m2)
        throw InternalMismatch("discriminant leaves the field");
    if (A1 * x.c != x.a * C1)
        throw InternalMismatch("rational part mismatch");
    if (mroot * x.c == -C1) {
        A = -A;
        C = -C;
    } else if (mroot * x.c != C1) {
        throw InternalMismatch("branch selection failed");
    }

    if (B.leading() != 1 || B.reversed() != B)
        throw InternalMismatch("radicand is not a monic palindrome");
    const QQuadraticForm form{A, B, C};
    if (closed_form_series(form, 8) != stabilize(cf, 8).series)
        throw InternalMismatch("closed form disagrees with stabilized series");
    return form;
}

QuadraticEquation quadratic_equation(const QQuadraticForm& f) {
    IntPoly e2 = poly_divexact(f.C, IntPoly(2));
    IntPoly e1 = -f.A;
    IntPoly e0 = poly_divexact(f.A * f.A - f.B, f.C + f.C);
    return {std::move(e2), std::move(e1), std::move(e0)};
}

LaurentSeries closed_form_series(const QQuadraticForm& f, int order) {
    if (order < 1) throw OutOfRange("order must be positive");
    if (order > kMaxOrder) throw SizeLimit("order too large");
    if (f.C.is_zero()) throw ZeroDenominator("closed form with zero denominator");
    if (f.B.coeff(0) != 1)
        throw Unsupported("radicand constant term is not 1");

    const int vc = f.C.valuation();
    const int len = order + vc;
    // sqrt(B) as a power series with the +1 branch, then the numerator.
    std::vector<Rat> num(static_cast<size_t>(std::max(len, 0)));
    if (len > 0) num[0] = 1;
    for (int k = 1; k < len; ++k) {
        Rat acc(f.B.coeff(k));
        for (int i = 1; i < k; ++i) acc -= num[static_cast<size_t>(i)] *
                                           num[static_cast<size_t>(k - i)];
        acc /= 2;
        acc.canonicalize();
        num[static_cast<size_t>(k)] = acc;
    }
    for (int k = 0; k < len; ++k) num[static_cast<size_t>(k)] += Rat(f.A.coeff(k));

    int vn = 0;
    while (vn < len && num[static_cast<size_t>(vn)] == 0) ++vn;
    if (vn == len) return LaurentSeries(order, {}, order);

    const Rat c0(f.C.coeff(vc));
    std::vector<Rat> t(static_cast<size_t>(len - vn));
    for (size_t k = 0; k < t.size(); ++k) {
        Rat acc = num[static_cast<size_t>(vn) + k];
        for (size_t j = 1; j <= k; ++j)
            acc -= Rat(f.C.coeff(vc + static_cast<int>(j))) * t[k - j];
        acc /= c0;
        acc.canonicalize();
        t[k] = acc;
    }
    std::vector<Int> out(t.size());
    for (size_t k = 0; k < t.size(); ++k) {
        if (t[k].get_den() != 1)
            throw NotDivisible("series expansion has non-integer coefficients");
        out[k] = t[k].get_num();
    }
    return LaurentSeries(vn - vc, std::move(out), order);
}

std::pair<double, double> radius_of_convergence(const QQuadraticForm& f) {
    return roots_minmax_modulus(f.B);
}

} // namespace qnum
