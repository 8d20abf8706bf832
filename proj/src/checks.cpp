#include "qnum/checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "qnum/errors.hpp"
#include "qnum/frieze.hpp"
#include "qnum/qrat.hpp"

namespace qnum {

namespace {

void require_range(long v, long lo, long hi, const char* what) {
    if (v < lo) throw OutOfRange(std::string(what) + " below minimum");
    if (v > hi) throw SizeLimit(std::string(what) + " above documented limit");
}

bool nonnegative(const IntPoly& p) {
    for (const Int& c : p.coeffs())
        if (c < 0) return false;
    return true;
}

long long catalan(int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

} // namespace

std::string CheckReport::summary() const {
    return unit + "=" + std::to_string(cases) +
           ", violations=" + std::to_string(violations.size());
}

CheckReport check_total_positivity(long max_height) {
    require_range(max_height, 1, 100, "max height");
    CheckReport rep{"total-positivity", "pairs", 0, {}, {}};

    struct Frac {
        Rational x;
        QRational d;
    };
    std::vector<Frac> fr;
    for (long r = 1; r <= max_height; ++r)
        for (long s = 1; s <= max_height; ++s) {
            if (std::gcd(r, s) != 1) continue;
            Rational x(r, s);
            fr.push_back({x, q_rational(x)});
        }
    std::sort(fr.begin(), fr.end(),
              [](const Frac& a, const Frac& b) { return b.x < a.x; });

    for (size_t i = 0; i < fr.size(); ++i)
        for (size_t j = i + 1; j < fr.size(); ++j) {
            const IntPoly p = x_polynomial(fr[i].d, fr[j].d);
            ++rep.cases;
            const std::string pair =
                fr[i].x.str() + " vs " + fr[j].x.str();
            if (p.is_zero() || !nonnegative(p))
                rep.violations.push_back(pair + ": negative coefficient");
            if (p.is_monomial() != farey_neighbors(fr[i].x, fr[j].x))
                rep.violations.push_back(pair +
                                         ": monomial/neighbor mismatch");
        }
    return rep;
}

CheckReport check_definition_coincidence(long bound) {
    require_range(bound, 1, 200, "bound");
    CheckReport rep{"definition-coincidence", "fractions", 0, {}, {}};

    for (long r = 1; r <= bound; ++r)
        for (long s = 1; s <= bound; ++s) {
            if (std::gcd(r, s) != 1) continue;
            const Rational x(r, s);
            const std::string at = x.str();
            const QRational a = q_rational_regular(x);
            const QRational b = q_rational_hj(x);
            const QRational m = q_rational_matrix(x);
            ++rep.cases;
            if (!(a == b && b == m)) {
                rep.violations.push_back(at + ": routes disagree");
                continue;
            }
            const IntPoly& num = a.value.num();
            const IntPoly& den = a.value.den();
            bool canonical = den.coeff(0) == 1 && num.leading() > 0 &&
                             den.leading() > 0 &&
                             (num.coeff(0) == 1) == (r >= s) &&
                             num.eval(Int(1)) == r &&
                             den.eval(Int(1)) == s &&
                             poly_gcd(num, den).is_one();
            if (!canonical)
                rep.violations.push_back(at + ": value not canonical");
        }
    return rep;
}

CheckReport check_psl2(int count, unsigned seed) {
    require_range(count, 1, 10000, "count");
    CheckReport rep{"psl2-identities", "draws", 0, {}, {}};

    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> nums(-60, 60);
    std::uniform_int_distribution<long> dens(1, 30);
    std::uniform_int_distribution<long> shifts(-6, 6);

    while (rep.cases < count) {
        const long p = nums(gen);
        const long s = dens(gen);
        const long k = shifts(gen);
        if (p == 0) continue;
        const Rational x(p, s);
        const RationalFunc v = q_rational(x).value;
        ++rep.cases;
        const std::string at = x.str();
        if (psl2_translate(v, k) != q_rational(x + Rational(k)).value)
            rep.violations.push_back(at + ": translation by " +
                                     std::to_string(k) + " failed");
        if (psl2_neg_inv(v) != q_rational(Rational(-x.den(), x.num())).value)
            rep.violations.push_back(at + ": negated inverse failed");
        if (psl2_negate(v) != q_rational(Rational(0) - x).value)
            rep.violations.push_back(at + ": negation failed");
    }
    return rep;
}

CheckReport check_frieze_bijection(int max_ngon) {
    require_range(max_ngon, 3, 10, "ngon");
    CheckReport rep{"frieze-bijection", "cycles", 0, {}, {}};

    for (int n = 3; n <= max_ngon; ++n) {
        std::set<std::vector<long>> from_triangulations;
        for (const Triangulation& t : enumerate_triangulations(n))
            from_triangulations.insert(quiddity_from_triangulation(t).cycle);

        // Every positive cycle whose sum matches the triangle count; the
        // admissible ones must be exactly the quiddities above.
        std::set<std::vector<long>> admissible;
        std::vector<long> cur(static_cast<size_t>(n));
        long target = 3 * (n - 2);
        auto sweep = [&](auto&& self, int pos, long left) -> void {
            if (pos == n) {
                ++rep.cases;
                try {
                    classical_frieze(Quiddity{cur});
                    admissible.insert(cur);
                } catch (const NotAFrieze&) {
                }
                return;
            }
            const long remaining = n - pos - 1;
            const long lo = std::max<long>(1, left - remaining * n);
            const long hi = std::min<long>(n, left - remaining);
            for (long v = lo; v <= hi; ++v) {
                cur[static_cast<size_t>(pos)] = v;
                self(self, pos + 1, left - v);
            }
        };
        sweep(sweep, 0, target);

        if (admissible != from_triangulations)
            rep.violations.push_back("ngon=" + std::to_string(n) +
                                     ": admissible cycles differ from "
                                     "triangulation quiddities");
        const long long want = catalan(n - 2);
        if (static_cast<long long>(from_triangulations.size()) != want)
            rep.violations.push_back("ngon=" + std::to_string(n) +
                                     ": quiddity count is not Catalan");
        rep.lines.push_back("ngon=" + std::to_string(n) + ": triangulations=" +
                            std::to_string(from_triangulations.size()));
    }
    return rep;
}

CheckReport check_unimodality(long max_num, long max_den) {
    require_range(max_num, 1, 400, "max numerator");
    require_range(max_den, 1, 200, "max denominator");
    CheckReport rep{"unimodality", "fractions", 0, {}, {}};

    for (long r = 1; r <= max_num; ++r)
        for (long s = 1; s <= max_den; ++s) {
            if (std::gcd(r, s) != 1) continue;
            const Rational x(r, s);
            const RationalFunc v = q_rational(x).value;
            ++rep.cases;
            if (!is_weakly_unimodal(v.num()))
                rep.violations.push_back(x.str() + ": numerator not unimodal");
            if (!is_weakly_unimodal(v.den()))
                rep.violations.push_back(x.str() +
                                         ": denominator not unimodal");
        }
    return rep;
}

} // namespace qnum
