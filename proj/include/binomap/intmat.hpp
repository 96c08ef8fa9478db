#pragma once

#include <vector>

#include "binomap/numbers.hpp"

namespace binomap {

// Dense arbitrary-precision integer matrix, row-major.
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IntegerMatrix identity(int n);
    IntegerMatrix transposed() const;
    IntegerMatrix top_rows(int n) const;
    IntegerMatrix bottom_rows(int n) const;
    IntegerMatrix select_columns(const std::vector<int>& idx) const;

    bool is_zero() const;
    bool operator==(const IntegerMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntegerMatrix mul(const IntegerMatrix& A, const IntegerMatrix& B);

// Row-style Hermite normal form: U*A = H with U unimodular, H in row-echelon
// form, pivots positive and strictly moving right, entries above each pivot
// reduced into [0, pivot), zero rows last.
struct HNFResult {
    IntegerMatrix H;
    IntegerMatrix U;
    int rank = 0;
};

HNFResult hnf(const IntegerMatrix& A);

// Canonical primitive basis of { v : A v^T = 0 }, one basis vector per row,
// (cols - rank) rows, HNF-reduced.
IntegerMatrix kernel_lattice(const IntegerMatrix& A);

}  // namespace binomap
