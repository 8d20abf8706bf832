#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qnum/errors.hpp"

namespace qnum {

using Int = mpz_class;

// Rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long r, long s = 1) : Rational(Int(r), Int(s)) {}
    Rational(const Int& r, const Int& s);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "r", "r/s", optional leading minus.
    static Rational parse(const std::string& text);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    const mpq_class& value() const { return v_; }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    auto operator<=>(const Rational& o) const { return cmp(v_, o.v_) <=> 0; }
    bool operator==(const Rational& o) const { return v_ == o.v_; }

private:
    mpq_class v_;
};

// Even-length regular continued fraction [a1, a2, ..., a_2m] with a1 >= 0
// and the remaining entries >= 1.
struct RegularCF {
    std::vector<long> a;
};

// Hirzebruch-Jung (ceiling) continued fraction [[c1, ..., ck]] with c1 >= 1
// and the remaining entries >= 2.
struct HJCF {
    std::vector<long> c;
};

// Expansions of a positive rational; throw NonPositive otherwise.
RegularCF cf_regular(const Rational& x);
HJCF cf_hj(const Rational& x);

// Exact evaluation. The term lists need not satisfy the positivity
// invariants; an intermediate division by zero throws DivisionByZero.
Rational cf_eval(const RegularCF& cf);
Rational cf_eval(const HJCF& cf);

// Values of the prefixes [a1], [a1,a2], ..., in order.
std::vector<Rational> convergents(const RegularCF& cf);

// "[2,3]" and "[[3,2,2]]" forms.
std::string to_text(const RegularCF& cf);
std::string to_text(const HJCF& cf);

} // namespace qnum
