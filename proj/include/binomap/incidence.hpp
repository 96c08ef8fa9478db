#pragma once

#include <string>
#include <utility>
#include <vector>

#include "binomap/poly.hpp"

namespace binomap {

struct Selection;

// 0/1 incidence between the distinct monomials of a system (rows) and its
// variables (columns): bit set iff the variable occurs with positive exponent.
// Variables occurring anywhere with a negative exponent get no column.
struct IncidenceMatrix {
    struct Row {
        ExponentVector monomial;
        std::vector<std::pair<int, int>> origins;  // (equation, term) pairs, in order of occurrence
        std::vector<bool> bits;                    // indexed by column position
        std::vector<int> ones;                     // column positions with a set bit, ascending
    };

    std::vector<Row> rows;        // distinct monomials, first-occurrence order
    std::vector<int> cols;        // active variable indices, ascending
    std::vector<int> dropped;     // variables excluded by the negative-exponent rule
    std::vector<int> col_of_var;  // variable index -> column position, -1 if dropped

    std::vector<std::vector<int>> term_row;  // term_row[eq][term] = row id

    int nrows() const { return static_cast<int>(rows.size()); }
    int ncols() const { return static_cast<int>(cols.size()); }
};

IncidenceMatrix build_incidence(const PolynomialSystem& sys);

// true iff some selected variable has a set bit in the given row
bool row_covered(const IncidenceMatrix& M, int row, const Selection& S);

// true iff every row is covered, i.e. substituting 0 for S annihilates every
// term of every equation. Errors if S touches a dropped variable.
bool vanishes(const PolynomialSystem& sys, const IncidenceMatrix& M, const Selection& S);

// tabular rendering: monomial row labels, variable column labels, 0/1 entries
std::string format_incidence(const PolynomialSystem& sys, const IncidenceMatrix& M);

}  // namespace binomap
