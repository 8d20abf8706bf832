#include "qnum/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace qnum {

namespace {

using C = std::complex<double>;

C horner(const std::vector<C>& a, C z) {
    C r = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * z + *it;
    return r;
}

// Simultaneous Weierstrass iteration on all roots of a monic-normalized
// coefficient vector (ascending, a.back() == 1 after scaling).
std::vector<C> durand_kerner(const std::vector<C>& a, double tol) {
    int n = static_cast<int>(a.size()) - 1;
    // Cauchy bound for an initial circle enclosing every root.
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[k]));
    radius = 1.0 + radius;
    std::vector<C> z(n);
    for (int j = 0; j < n; ++j) {
        double ang = 2.0 * M_PI * (j + 0.25) / n;
        z[j] = std::polar(radius, ang);
    }
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            C denom = 1.0;
            for (int k = 0; k < n; ++k)
                if (k != j) denom *= z[j] - z[k];
            C w = horner(a, z[j]) / denom;
            z[j] -= w;
            worst = std::max(worst, std::abs(w));
        }
        if (worst < tol * 1e-3) break;
    }
    // A posteriori certification: n * |p(z)/prod'| bounds the distance from
    // z to the nearest true root.
    for (int j = 0; j < n; ++j) {
        C denom = 1.0;
        for (int k = 0; k < n; ++k)
            if (k != j) denom *= z[j] - z[k];
        double err = n * std::abs(horner(a, z[j]) / denom);
        if (!(err <= tol * std::max(1.0, std::abs(z[j]))))
            throw ToleranceNotReached("root estimate not certified to tolerance");
    }
    return z;
}

} // namespace

std::pair<double, double> roots_minmax_modulus(const IntPoly& p, double tol) {
    if (p.degree() < 1) throw error("polynomial must have degree at least 1");
    // Multiple roots stall the iteration, so work with the square-free part.
    IntPoly g = poly_gcd(p, poly_derivative(p));
    IntPoly sf = g.is_one() ? p : poly_divexact(p, g);
    int v = sf.valuation();
    double rmin = v > 0 ? 0.0 : -1.0;
    double rmax = v > 0 ? 0.0 : -1.0;
    std::vector<Int> cs(sf.coeffs().begin() + v, sf.coeffs().end());
    if (cs.size() > 1) {
        // Scale to doubles relative to the largest magnitude, then make monic.
        double biggest = 0.0;
        for (const Int& c : cs) biggest = std::max(biggest, std::abs(c.get_d()));
        std::vector<C> a(cs.size());
        for (size_t k = 0; k < cs.size(); ++k) a[k] = cs[k].get_d() / biggest;
        C lead = a.back();
        for (C& c : a) c /= lead;
        std::vector<C> roots = durand_kerner(a, tol);
        for (const C& z : roots) {
            double m = std::abs(z);
            if (rmin < 0 || m < rmin) rmin = m;
            if (m > rmax) rmax = m;
        }
    }
    if (rmin < 0) throw error("polynomial must have degree at least 1");
    return {rmin, rmax};
}

} // namespace qnum
