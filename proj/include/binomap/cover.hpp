#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binomap/incidence.hpp"
#include "binomap/poly.hpp"

namespace binomap {

// Variables chosen to be set to zero; members are variable indices in
// canonical ascending order, always a subset of the active incidence columns.
struct Selection {
    std::vector<int> members;

    bool contains(int var) const;
    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const Selection& o) const { return members == o.members; }
    bool operator<(const Selection& o) const;  // by size, then lexicographic
};

std::string format_selection(const PolynomialSystem& sys, const Selection& S);

enum class EquationStatus {
    Vanished,  // every term covered
    Residual,  // no term covered, both binomial monomials survive
    Mixed,     // some but not all terms covered: inconsistent on the torus
};

struct Classification {
    std::vector<EquationStatus> status;  // one per equation
    int vanished = 0;
    std::vector<int> residual;  // equation indices
};

Classification classify(const PolynomialSystem& sys, const IncidenceMatrix& M, const Selection& S);

struct EnumerationOptions {
    bool pure_dim = false;     // each zeroed variable must be paid for by a vanished equation
    bool covers_only = false;  // full covers only: every monomial must be covered
    std::optional<int> max_size;
    bool dedupe = true;
};

// Row-expansion enumeration of full covers: at each row, advance when some
// selected variable already covers it, otherwise branch over the row's
// columns. Rows are pre-sorted by ascending popcount (fail-first); output is
// depth-first with columns in ascending index.
std::vector<Selection> enumerate_covers(const IncidenceMatrix& M, const EnumerationOptions& opts);

// Generalized enumeration: same row expansion plus a "leave this row
// uncovered" branch, pruned as soon as an equation becomes Mixed. Returns all
// reachable S (including the empty selection) whose classification has no
// Mixed equation; under pure_dim additionally |S| = #Vanished. Output is
// deduped and sorted by size, then lexicographically.
std::vector<Selection> enumerate_consistent(const PolynomialSystem& sys, const IncidenceMatrix& M,
                                            const EnumerationOptions& opts);

}  // namespace binomap
