#include "qnum/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qnum {

IntPoly IntPoly::monomial(const Int& c, int exp) {
    assert(exp >= 0);
    if (c == 0) return IntPoly();
    std::vector<Int> v(exp + 1, Int(0));
    v.back() = c;
    return IntPoly(std::move(v));
}

int IntPoly::valuation() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return -1;
}

bool IntPoly::is_monomial() const {
    int nonzero = 0;
    for (const Int& c : c_)
        if (c != 0 && ++nonzero > 1) return false;
    return nonzero == 1;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (Int& c : r.c_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(int k) const {
    assert(k >= 0);
    if (is_zero() || k == 0) return *this;
    std::vector<Int> v(k, Int(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw NotDivisible("division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    int da = a.degree(), db = b.degree();
    if (da < db) throw NotDivisible("degree of divisor exceeds degree of dividend");
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quo(da - db + 1, Int(0));
    const Int& lead = b.leading();
    for (int k = da - db; k >= 0; --k) {
        Int& top = rem[db + k];
        if (top == 0) continue;
        Int t;
        mpz_fdiv_qr(t.get_mpz_t(), top.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (top != 0) throw NotDivisible("leading coefficient does not divide exactly");
        quo[k] = t;
        for (int j = 0; j < db; ++j) rem[j + k] -= t * b.coeff(j);
    }
    for (const Int& c : rem)
        if (c != 0) throw NotDivisible("nonzero remainder");
    return IntPoly(std::move(quo));
}

Int poly_content(const IntPoly& p) {
    Int g = 0;
    for (const Int& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

namespace {

IntPoly primitive_part(const IntPoly& p) {
    Int c = poly_content(p);
    if (c == 0 || c == 1) return p;
    std::vector<Int> v(p.coeffs());
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(v));
}

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b): repeatedly scale a
// by lead(b) so the top term cancels exactly.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const Int& lb = b.leading();
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int k = a.degree() - db;
        IntPoly scaled = a * IntPoly(lb);
        a = scaled - b * IntPoly::monomial(a.leading(), k);
    }
    return a;
}

} // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    Int ca = poly_content(a), cb = poly_content(b);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(pseudo_rem(std::move(a), b));
        a = std::move(b);
        b = std::move(r);
    }
    IntPoly g = a * IntPoly(cg);
    if (g.leading() < 0) g = -g;
    return g;
}

IntPoly poly_derivative(const IntPoly& p) {
    if (p.degree() < 1) return IntPoly();
    std::vector<Int> v(p.degree());
    for (int k = 1; k <= p.degree(); ++k) v[k - 1] = p.coeff(k) * k;
    return IntPoly(std::move(v));
}

void LaurentPoly::assign(const IntPoly& p, int shift) {
    if (p.is_zero()) {
        u_ = IntPoly();
        e_ = 0;
        return;
    }
    int v = p.valuation();
    if (v == 0) {
        u_ = p;
    } else {
        std::vector<Int> c(p.coeffs().begin() + v, p.coeffs().end());
        u_ = IntPoly(std::move(c));
    }
    e_ = shift + v;
}

IntPoly LaurentPoly::to_poly() const {
    if (is_zero()) return IntPoly();
    assert(e_ >= 0);
    return u_.shifted(e_);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int base = std::min(a.e_, b.e_);
    IntPoly sum = a.u_.shifted(a.e_ - base) + b.u_.shifted(b.e_ - base);
    return LaurentPoly(sum, base);
}

RationalFunc::RationalFunc(IntPoly num, IntPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominator("zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    normalize_sign();
}

RationalFunc RationalFunc::from_laurent(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw ZeroDenominator("zero denominator");
    if (num.is_zero()) return RationalFunc();
    // Shift both parts by a common q-power so each becomes a polynomial
    // with nonzero constant term, then reduce.
    return RationalFunc(num.unit().shifted(std::max(0, num.min_exp() - den.min_exp())),
                        den.unit().shifted(std::max(0, den.min_exp() - num.min_exp())));
}

RationalFunc RationalFunc::reduced_unchecked(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw ZeroDenominator("zero denominator");
    if (num.is_zero()) return RationalFunc();
    RationalFunc r(num.unit().shifted(std::max(0, num.min_exp() - den.min_exp())),
                   den.unit().shifted(std::max(0, den.min_exp() - num.min_exp())),
                   raw_tag{});
    r.normalize_sign();
    return r;
}

void RationalFunc::normalize_sign() {
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero");
    return RationalFunc(a.num_ * b.den_, a.den_ * b.num_);
}

Rat RationalFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw ZeroDenominator("denominator vanishes at evaluation point");
    Rat r = num_.eval(x) / d;
    r.canonicalize();
    return r;
}

LaurentSeries::LaurentSeries(int min_exp, std::vector<Int> coeffs, int order)
    : c_(std::move(coeffs)), e_(min_exp), order_(order) {
    assert(e_ + static_cast<int>(c_.size()) == order_ || c_.empty());
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + lead);
        e_ += static_cast<int>(lead);
    }
    if (c_.empty()) e_ = order_;
}

Int LaurentSeries::coeff(int k) const {
    if (k >= order_) throw OutOfRange("coefficient beyond computed order");
    if (k < e_) return 0;
    return c_[k - e_];
}

LaurentSeries series_expand(const LaurentPoly& num, const LaurentPoly& den,
                            int order) {
    if (den.is_zero()) throw ZeroDenominator("series of a fraction with zero denominator");
    if (num.is_zero()) return LaurentSeries(order, {}, order);
    int vn = num.min_exp();
    int vd = den.min_exp();
    int base = vn - vd;
    if (base >= order) return LaurentSeries(order, {}, order);
    int n_terms = order - base;
    // Power-series division of the valuation-free parts over Q; the result
    // is integral whenever the denominator's unit part has constant term
    // +-1, which holds for every series this library produces.
    std::vector<Rat> s(n_terms);
    Rat d0(den.coeff(vd));
    for (int k = 0; k < n_terms; ++k) {
        Rat acc(num.coeff(vn + k));
        for (int j = 1; j <= k; ++j) acc -= Rat(den.coeff(vd + j)) * s[k - j];
        s[k] = acc / d0;
        s[k].canonicalize();
    }
    std::vector<Int> c(n_terms);
    for (int k = 0; k < n_terms; ++k) {
        if (s[k].get_den() != 1)
            throw NotDivisible("series expansion has non-integer coefficients");
        c[k] = s[k].get_num();
    }
    return LaurentSeries(base, std::move(c), order);
}

LaurentSeries series_expand(const RationalFunc& f, int order) {
    return series_expand(LaurentPoly(f.num()), LaurentPoly(f.den()), order);
}

namespace {

void append_term(std::ostringstream& out, bool first, const Int& c, int exp) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (exp == 0) {
        out << a.get_str();
        return;
    }
    if (a != 1) out << a.get_str() << "*";
    out << "q";
    if (exp != 1) out << "^" << exp;
}

std::string terms_to_text(const std::vector<Int>& coeffs, int base) {
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        append_term(out, first, coeffs[k], base + static_cast<int>(k));
        first = false;
    }
    if (first) return "0";
    return out.str();
}

} // namespace

std::string to_text(const IntPoly& p) { return terms_to_text(p.coeffs(), 0); }

std::string to_text(const LaurentPoly& p) {
    return terms_to_text(p.unit().coeffs(), p.min_exp());
}

std::string to_text(const RationalFunc& f) {
    if (f.den().is_one()) return to_text(f.num());
    return "(" + to_text(f.num()) + ") / (" + to_text(f.den()) + ")";
}

std::string to_text(const LaurentSeries& s) {
    return terms_to_text(s.coeffs(), s.min_exp());
}

} // namespace qnum
