#include "qnum/cfrac.hpp"

#include <sstream>

namespace qnum {

Rational::Rational(const Int& r, const Int& s) {
    if (s == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(r, s);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text), Int(1));
        return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw error("cannot parse rational: " + text);
    }
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

long to_machine(const Int& d) {
    if (!d.fits_slong_p()) throw SizeLimit("continued fraction term exceeds machine range");
    return d.get_si();
}

} // namespace

RegularCF cf_regular(const Rational& x) {
    if (x.value() <= 0) throw NonPositive("regular expansion needs a positive rational");
    std::vector<long> a;
    Int r = x.num(), s = x.den();
    while (s != 0) {
        Int d, rem;
        mpz_fdiv_qr(d.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
        a.push_back(to_machine(d));
        r = s;
        s = rem;
    }
    // Floor expansion of an integer is a single term; otherwise it ends with
    // a term >= 2. Rewrite to even length, which is always possible since
    // the leading term may be zero: n = [n-1,1] and 1 = [0,1].
    if (a.size() % 2 == 1) {
        if (a.back() >= 2) {
            a.back() -= 1;
            a.push_back(1);
        } else {
            a = {0, 1};
        }
    }
    return RegularCF{std::move(a)};
}

HJCF cf_hj(const Rational& x) {
    if (x.value() <= 0) throw NonPositive("ceiling expansion needs a positive rational");
    std::vector<long> c;
    Int r = x.num(), s = x.den();
    while (s != 0) {
        Int d, rem;
        mpz_cdiv_qr(d.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
        c.push_back(to_machine(d));
        // x = d - rem'/s with rem' = -rem >= 0; recurse on s/rem'.
        r = s;
        s = -rem;
    }
    return HJCF{std::move(c)};
}

Rational cf_eval(const RegularCF& cf) {
    if (cf.a.empty()) throw error("empty continued fraction");
    mpq_class v(cf.a.back());
    for (auto it = cf.a.rbegin() + 1; it != cf.a.rend(); ++it) {
        if (v == 0) throw DivisionByZero("zero convergent inside continued fraction");
        v = *it + 1 / v;
    }
    return Rational(v);
}

Rational cf_eval(const HJCF& cf) {
    if (cf.c.empty()) throw error("empty continued fraction");
    mpq_class v(cf.c.back());
    for (auto it = cf.c.rbegin() + 1; it != cf.c.rend(); ++it) {
        if (v == 0) throw DivisionByZero("zero convergent inside continued fraction");
        v = *it - 1 / v;
    }
    return Rational(v);
}

std::vector<Rational> convergents(const RegularCF& cf) {
    std::vector<Rational> out;
    out.reserve(cf.a.size());
    // p_k / s_k with the standard two-term recurrence; the denominator
    // sequence stays positive past the first step, so no division occurs.
    Int p0 = 0, s0 = 1, p1 = 1, s1 = 0;
    for (long t : cf.a) {
        Int p = t * p1 + p0;
        Int s = t * s1 + s0;
        if (s == 0) throw DivisionByZero("convergent with zero denominator");
        out.emplace_back(p, s);
        p0 = p1; s0 = s1;
        p1 = p; s1 = s;
    }
    return out;
}

namespace {

std::string joined(const std::vector<long>& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    return out.str();
}

} // namespace

std::string to_text(const RegularCF& cf) { return "[" + joined(cf.a) + "]"; }

std::string to_text(const HJCF& cf) { return "[[" + joined(cf.c) + "]]"; }

} // namespace qnum
