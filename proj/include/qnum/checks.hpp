#pragma once

#include <string>
#include <vector>

namespace qnum {

// Outcome of one exhaustive property sweep. Violations are stored as
// human-readable lines in a canonical order (sorted by the offending input),
// so a report is reproducible no matter how the sweep ran.
struct CheckReport {
    std::string name;
    std::string unit;                    // what "cases" counts
    long long cases = 0;
    std::vector<std::string> lines;      // per-bound summaries
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;         // "pairs=1234, violations=0"
};

// Differences of deformed fractions x > y > 0 expand with nonnegative
// coefficients, and the difference is a monomial exactly when x and y are
// Farey neighbors. Sweeps all pairs with numerators and denominators up to
// max_height (1..100).
CheckReport check_total_positivity(long max_height);

// The three evaluation routes agree on every coprime r, s up to the bound
// (1..200), and the common value is canonical: coprime parts, positive
// leading coefficients, unit constant term in the denominator, q = 1
// recovering r and s.
CheckReport check_definition_coincidence(long bound);

// Translation, negated-inverse, and negation identities on the deformations
// of count (1..10000) rationals drawn from a fixed-seed generator.
CheckReport check_psl2(int count, unsigned seed);

// For each polygon size 3..max_ngon (max 10): among all positive cycles
// with the triangle-count sum, those admitting a classical frieze are
// exactly the quiddities of triangulations, and their number is a Catalan
// number.
CheckReport check_frieze_bijection(int max_ngon);

// Coefficients of numerator and denominator of every deformation with
// numerator up to max_num (1..400) and denominator up to max_den (1..200)
// rise weakly then fall weakly. This supports an open conjecture, so
// counterexamples are reported, never fatal.
CheckReport check_unimodality(long max_num, long max_den);

} // namespace qnum
