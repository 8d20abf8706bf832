#include "qnum/frieze.hpp"

#include <algorithm>

#include "qnum/qcore.hpp"

namespace qnum {

namespace {

constexpr long kMaxQuiddityEntry = 1000000;

long wrap(long i, long n) { return ((i % n) + n) % n; }

void validate_quiddity(const Quiddity& quid) {
    long n = static_cast<long>(quid.cycle.size());
    if (n < 3) throw NotAFrieze("quiddity needs at least three entries");
    for (long c : quid.cycle) {
        if (c < 1) throw NotAFrieze("quiddity entries must be positive");
        if (c > kMaxQuiddityEntry) throw SizeLimit("quiddity entry too large");
    }
}

const auto& row_entry(const auto& rows, long w, long i, long n) {
    return rows[w + 1][wrap(i, n)];
}

} // namespace

const Int& ClassicalFrieze::entry(long i, long j) const {
    long w = j - i;
    if (w < -1 || w > period() - 2) throw IndexOutOfRange("row width outside the array");
    return rows_[w + 1][wrap(i, period())];
}

const IntPoly& QFrieze::entry(long i, long j) const {
    long w = j - i;
    if (w < -1 || w > period() - 2) throw IndexOutOfRange("row width outside the array");
    return rows_[w + 1][wrap(i, period())];
}

ClassicalFrieze classical_frieze(const Quiddity& quid) {
    validate_quiddity(quid);
    long n = static_cast<long>(quid.cycle.size());
    std::vector<std::vector<Int>> rows(n);
    rows[0].assign(n, Int(1));
    rows[1].reserve(n);
    for (long c : quid.cycle) rows[1].emplace_back(c);
    for (long w = 1; w <= n - 2; ++w) {
        rows[w + 1].resize(n);
        for (long i = 0; i < n; ++i) {
            Int num = row_entry(rows, w - 1, i, n) * row_entry(rows, w - 1, i + 1, n) - 1;
            const Int& div = row_entry(rows, w - 2, i + 1, n);
            Int quo, rem;
            mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                        div.get_mpz_t());
            if (rem != 0) throw NotAFrieze("diamond rule leaves a remainder");
            if (w <= n - 3 && quo < 1) throw NotAFrieze("non-positive interior entry");
            rows[w + 1][i] = quo;
        }
    }
    for (long i = 0; i < n; ++i) {
        if (rows[n - 2][i] != 1) throw NotAFrieze("next-to-last row is not all 1");
        if (rows[n - 1][i] != 0) throw NotAFrieze("frieze does not close with zeros");
    }
    return ClassicalFrieze(quid, std::move(rows));
}

namespace {

// Exponent of the deformation power for the diamond at columns i..j-1.
int power_sum(const Quiddity& quid, long i, long j) {
    long n = static_cast<long>(quid.cycle.size());
    long s = 0;
    for (long k = i; k < j; ++k) s += quid.cycle[wrap(k, n)] - 1;
    return static_cast<int>(s);
}

// Independent recomputation of C_{ij}: the top-left entry of the generator
// word R^{c_i} S ... R^{c_j} S, multiplied out literally.
IntPoly continuant_entry(const Quiddity& quid, long i, long j) {
    long n = static_cast<long>(quid.cycle.size());
    std::vector<long> window;
    window.reserve(j - i + 1);
    for (long k = i; k <= j; ++k) window.push_back(quid.cycle[wrap(k, n)]);
    QMatrix m = q_matrix_word(HJCF{std::move(window)});
    if (!m.a.is_polynomial())
        throw InternalMismatch("continuant entry is not a polynomial");
    return m.a.to_poly();
}

} // namespace

QFrieze q_frieze(const Quiddity& quid) {
    classical_frieze(quid);
    // The quiddity closes classically, so any failure below is a defect.
    long n = static_cast<long>(quid.cycle.size());
    std::vector<std::vector<IntPoly>> rows(n);
    rows[0].assign(n, IntPoly(1));
    rows[1].reserve(n);
    for (long c : quid.cycle) rows[1].push_back(q_int(c).to_poly());
    for (long w = 1; w <= n - 2; ++w) {
        rows[w + 1].resize(n);
        for (long i = 0; i < n; ++i) {
            IntPoly num =
                row_entry(rows, w - 1, i, n) * row_entry(rows, w - 1, i + 1, n) -
                IntPoly::monomial(1, power_sum(quid, i, i + w));
            IntPoly entry;
            try {
                entry = poly_divexact(num, row_entry(rows, w - 2, i + 1, n));
            } catch (const NotDivisible&) {
                throw InternalMismatch("deformed diamond rule left a remainder");
            }
            rows[w + 1][i] = std::move(entry);
        }
    }
    for (long w = 0; w <= n - 2; ++w) {
        for (long i = 0; i < n; ++i) {
            const IntPoly& e = rows[w + 1][i];
            if (e != continuant_entry(quid, i, i + w))
                throw InternalMismatch("diamond and continuant routes disagree");
            if (w <= n - 3)
                for (const Int& c : e.coeffs())
                    if (c < 0) throw InternalMismatch("negative coefficient in entry");
        }
    }
    for (long i = 0; i < n; ++i) {
        if (!rows[n - 2][i].is_monomial() || rows[n - 2][i].leading() != 1)
            throw InternalMismatch("next-to-last row is not a power of q");
        if (!rows[n - 1][i].is_zero())
            throw InternalMismatch("deformed frieze does not close with zeros");
    }
    return QFrieze(quid, std::move(rows));
}

QRational frieze_quotient(const QFrieze& f, long i, long j) {
    long w = j - i;
    if (w < 0 || w > f.period() - 2)
        throw IndexOutOfRange("quotient needs width between 0 and period-2");
    const IntPoly& num = f.entry(i, j);
    const IntPoly& den = f.entry(i + 1, j);
    return QRational{Rational(num.eval(Int(1)), den.eval(Int(1))),
                     RationalFunc(num, den)};
}

namespace {

struct EdgeSet {
    int n;
    std::vector<std::pair<int, int>> diag;   // sorted pairs (a < b)

    bool has(int u, int v) const {
        if (u > v) std::swap(u, v);
        if (v - u == 1 || (u == 0 && v == n - 1)) return true;
        return std::binary_search(diag.begin(), diag.end(), std::make_pair(u, v));
    }
};

void count_triangles(const EdgeSet& es, int lo, int hi, std::vector<long>& counts) {
    if (hi - lo < 2) return;
    for (int k = lo + 1; k < hi; ++k) {
        if (es.has(lo, k) && es.has(k, hi)) {
            ++counts[lo];
            ++counts[k];
            ++counts[hi];
            count_triangles(es, lo, k, counts);
            count_triangles(es, k, hi, counts);
            return;
        }
    }
    throw InvalidTriangulation("no triangle closes the boundary edge");
}

} // namespace

Quiddity quiddity_from_triangulation(const Triangulation& t) {
    if (t.ngon < 3) throw InvalidTriangulation("polygon needs at least three vertices");
    std::vector<std::pair<int, int>> diag;
    diag.reserve(t.diagonals.size());
    for (auto [a, b] : t.diagonals) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= t.ngon) throw InvalidTriangulation("vertex out of range");
        if (b - a < 2 || (a == 0 && b == t.ngon - 1))
            throw InvalidTriangulation("diagonal coincides with a polygon edge");
        diag.emplace_back(a, b);
    }
    std::sort(diag.begin(), diag.end());
    if (std::adjacent_find(diag.begin(), diag.end()) != diag.end())
        throw InvalidTriangulation("duplicate diagonal");
    if (static_cast<int>(diag.size()) != t.ngon - 3)
        throw InvalidTriangulation("a triangulation has exactly ngon-3 diagonals");
    for (size_t x = 0; x < diag.size(); ++x)
        for (size_t y = x + 1; y < diag.size(); ++y) {
            auto [a, b] = diag[x];
            auto [c, d] = diag[y];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                throw InvalidTriangulation("crossing diagonals");
        }
    std::vector<long> counts(t.ngon, 0);
    count_triangles(EdgeSet{t.ngon, std::move(diag)}, 0, t.ngon - 1, counts);
    return Quiddity{std::move(counts)};
}

namespace {

using DiagList = std::vector<std::pair<int, int>>;

// All triangulations of the sub-polygon lo..hi whose boundary includes the
// chord (lo,hi); each one is produced exactly once via the apex of that chord.
std::vector<DiagList> fan_out(int lo, int hi) {
    if (hi - lo < 2) return {DiagList{}};
    std::vector<DiagList> out;
    for (int k = lo + 1; k < hi; ++k) {
        std::vector<DiagList> left = fan_out(lo, k);
        std::vector<DiagList> right = fan_out(k, hi);
        for (const DiagList& l : left)
            for (const DiagList& r : right) {
                DiagList d = l;
                d.insert(d.end(), r.begin(), r.end());
                if (k - lo >= 2) d.emplace_back(lo, k);
                if (hi - k >= 2) d.emplace_back(k, hi);
                out.push_back(std::move(d));
            }
    }
    return out;
}

} // namespace

std::vector<Triangulation> enumerate_triangulations(int ngon) {
    if (ngon < 3 || ngon > 12) throw SizeLimit("enumeration supports 3 to 12 vertices");
    std::vector<Triangulation> out;
    for (DiagList& d : fan_out(0, ngon - 1)) {
        std::sort(d.begin(), d.end());
        out.push_back(Triangulation{ngon, std::move(d)});
    }
    return out;
}

} // namespace qnum
