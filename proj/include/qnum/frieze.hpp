#pragma once

#include <utility>
#include <vector>

#include "qnum/qrat.hpp"

namespace qnum {

// Periodic sequence (c_0, ..., c_{n-1}) of triangle counts; the second row
// of a frieze pattern.
struct Quiddity {
    std::vector<long> cycle;

    bool operator==(const Quiddity& o) const = default;
};

// Convex polygon triangulation: vertices 0..ngon-1 counterclockwise,
// diagonals stored as sorted index pairs.
struct Triangulation {
    int ngon = 0;
    std::vector<std::pair<int, int>> diagonals;

    bool operator==(const Triangulation& o) const = default;
};

// Frieze arrays store one period of each row. Row width w runs from -1 (the
// top row of 1's) through period-2 (the closing row of zeros); the entry at
// column i of row w is C_{i,i+w}, and the array continues periodically with
// C_{i+n,j+n} = C_{ij}.
class ClassicalFrieze {
public:
    ClassicalFrieze(Quiddity quid, std::vector<std::vector<Int>> rows)
        : quiddity_(std::move(quid)), rows_(std::move(rows)) {}

    long period() const { return static_cast<long>(quiddity_.cycle.size()); }
    const Quiddity& quiddity() const { return quiddity_; }
    // rows()[w+1] is the period of row w.
    const std::vector<std::vector<Int>>& rows() const { return rows_; }
    // C_{ij}; any i, with j-i between -1 and period-2.
    const Int& entry(long i, long j) const;

private:
    Quiddity quiddity_;
    std::vector<std::vector<Int>> rows_;
};

class QFrieze {
public:
    QFrieze(Quiddity quid, std::vector<std::vector<IntPoly>> rows)
        : quiddity_(std::move(quid)), rows_(std::move(rows)) {}

    long period() const { return static_cast<long>(quiddity_.cycle.size()); }
    const Quiddity& quiddity() const { return quiddity_; }
    const std::vector<std::vector<IntPoly>>& rows() const { return rows_; }
    const IntPoly& entry(long i, long j) const;

private:
    Quiddity quiddity_;
    std::vector<std::vector<IntPoly>> rows_;
};

// Triangle count at each vertex. Also fully validates the diagonal set and
// throws InvalidTriangulation when it is not a triangulation.
Quiddity quiddity_from_triangulation(const Triangulation& t);

// Fills the array by the unimodular diamond rule. Throws NotAFrieze when the
// quiddity does not close into a frieze (inexact division, a non-positive
// interior entry, or wrong boundary rows).
ClassicalFrieze classical_frieze(const Quiddity& quid);

// Deformed frieze of a valid quiddity. Entries are computed two independent
// ways (diamond-rule division and generator-word continuants) and must
// agree; a mismatch or any malformed row throws InternalMismatch.
QFrieze q_frieze(const Quiddity& quid);

// The quotient C_{ij}/C_{i+1,j} as a deformed rational; j-i between 0 and
// period-2 (IndexOutOfRange otherwise). Equals the deformation of the
// ceiling-expansion value of (c_i, ..., c_j).
QRational frieze_quotient(const QFrieze& f, long i, long j);

// All triangulations of the ngon, 3 <= ngon <= 12 (SizeLimit otherwise).
std::vector<Triangulation> enumerate_triangulations(int ngon);

} // namespace qnum
