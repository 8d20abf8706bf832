#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "qnum/errors.hpp"

namespace qnum {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial in q over arbitrary-precision integers.
// Coefficients are stored by ascending exponent; the zero polynomial is the
// empty vector, otherwise the top coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(const Int& c) { if (c != 0) c_.push_back(c); }
    IntPoly(long c) : IntPoly(Int(c)) {}
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly monomial(const Int& c, int exp);
    static IntPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    // Exponent of the lowest nonzero term; -1 for the zero polynomial.
    int valuation() const;

    Int coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Int(0);
    }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const { return c_.back(); }

    bool is_monomial() const;
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    bool operator==(const IntPoly& o) const = default;

    // Multiplication by q^k, k >= 0.
    IntPoly shifted(int k) const;
    // Coefficient reversal: q^degree * p(1/q). Zero maps to zero.
    IntPoly reversed() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

private:
    std::vector<Int> c_;
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
};

// Quotient when the division is exact; throws NotDivisible otherwise
// (including division by the zero polynomial).
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

// Gcd of the integer contents; content(0) = 0.
Int poly_content(const IntPoly& p);

// Full gcd over Z[q] (content included), normalized to a positive leading
// coefficient. Computed with a primitive pseudo-remainder sequence.
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Formal derivative.
IntPoly poly_derivative(const IntPoly& p);

// Laurent polynomial q^min_exp * u with u(0) != 0 unless the whole thing
// is zero (then u = 0 and min_exp = 0).
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const IntPoly& p) { assign(p, 0); }
    LaurentPoly(const Int& c) : LaurentPoly(IntPoly(c)) {}
    LaurentPoly(long c) : LaurentPoly(IntPoly(c)) {}
    // q^shift * p; shift may be negative.
    LaurentPoly(const IntPoly& p, int shift) { assign(p, shift); }

    static LaurentPoly monomial(const Int& c, int exp) {
        return LaurentPoly(IntPoly(c), exp);
    }

    bool is_zero() const { return u_.is_zero(); }
    int min_exp() const { return e_; }
    int max_exp() const { return e_ + u_.degree(); }
    Int coeff(int k) const { return u_.coeff(k - e_); }
    // The unit part u in q^min_exp * u.
    const IntPoly& unit() const { return u_; }

    // True when no negative exponent occurs.
    bool is_polynomial() const { return is_zero() || e_ >= 0; }
    IntPoly to_poly() const;

    LaurentPoly operator-() const { return LaurentPoly(-u_, e_); }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return a + (-b);
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        return LaurentPoly(a.u_ * b.u_, a.e_ + b.e_);
    }
    bool operator==(const LaurentPoly& o) const = default;

private:
    IntPoly u_;
    int e_ = 0;
    void assign(const IntPoly& p, int shift);
};

// Reduced fraction of integer polynomials: gcd(num, den) = 1 and the
// denominator has a positive leading coefficient.
class RationalFunc {
public:
    RationalFunc() : num_(0), den_(1) {}
    RationalFunc(const IntPoly& n) : num_(n), den_(1) {}
    // Reduces; throws ZeroDenominator when den = 0.
    RationalFunc(IntPoly num, IntPoly den);

    // Clears the q-powers of a Laurent fraction and reduces.
    static RationalFunc from_laurent(const LaurentPoly& num, const LaurentPoly& den);

    // For callers that guarantee coprimality (continuant constructions where
    // the determinant identity forces any common factor to be a unit). Only
    // common q-powers and the denominator sign are normalized.
    static RationalFunc reduced_unchecked(LaurentPoly num, LaurentPoly den);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunc operator-() const;
    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b);
    bool operator==(const RationalFunc& o) const = default;

    // Evaluation at a rational point where the denominator does not vanish.
    Rat eval(const Rat& x) const;

private:
    IntPoly num_, den_;
    struct raw_tag {};
    RationalFunc(IntPoly n, IntPoly d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize_sign();
};

// Truncated Laurent series: coefficients for exponents min_exp .. order-1,
// all of which are known exactly. Leading zeros are absorbed into min_exp;
// the zero series keeps no coefficients and min_exp = order.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(int min_exp, std::vector<Int> coeffs, int order);

    int min_exp() const { return e_; }
    int order() const { return order_; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int k) const;
    bool is_zero() const { return c_.empty(); }

    bool operator==(const LaurentSeries& o) const = default;

private:
    std::vector<Int> c_;
    int e_ = 0;
    int order_ = 0;
};

// Laurent expansion of f around q = 0 through order (exclusive). A pole at
// zero of multiplicity m yields terms from exponent -m upward.
LaurentSeries series_expand(const RationalFunc& f, int order);

// Same expansion for a fraction that is not necessarily reduced.
LaurentSeries series_expand(const LaurentPoly& num, const LaurentPoly& den,
                            int order);

// Plain-text forms: ascending powers, "1 + 2*q + q^3 - q^-2" style, "0" for
// zero. Unit coefficients are elided in front of q.
std::string to_text(const IntPoly& p);
std::string to_text(const LaurentPoly& p);
std::string to_text(const RationalFunc& f);
std::string to_text(const LaurentSeries& s);

} // namespace qnum
