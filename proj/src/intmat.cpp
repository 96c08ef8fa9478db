#include "binomap/intmat.hpp"

#include <tuple>
#include <utility>

namespace binomap {

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix T(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) T.at(c, r) = at(r, c);
    return T;
}

IntegerMatrix IntegerMatrix::top_rows(int n) const {
    IntegerMatrix R(n, cols);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < cols; ++c) R.at(r, c) = at(r, c);
    return R;
}

IntegerMatrix IntegerMatrix::bottom_rows(int n) const {
    IntegerMatrix R(n, cols);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < cols; ++c) R.at(r, c) = at(rows - n + r, c);
    return R;
}

IntegerMatrix IntegerMatrix::select_columns(const std::vector<int>& idx) const {
    IntegerMatrix R(rows, static_cast<int>(idx.size()));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < R.cols; ++c) R.at(r, c) = at(r, idx[c]);
    return R;
}

bool IntegerMatrix::is_zero() const {
    for (const Int& v : a)
        if (v != 0) return false;
    return true;
}

IntegerMatrix mul(const IntegerMatrix& A, const IntegerMatrix& B) {
    IntegerMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Int& v = A.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < B.cols; ++j) C.at(i, j) += v * B.at(k, j);
        }
    return C;
}

namespace {

// g = s*a + t*b, g = gcd(|a|,|b|) >= 0
std::tuple<Int, Int, Int> xgcd(Int a, Int b) {
    if (a != 0 && b % a == 0) return {a < 0 ? Int(-a) : a, a < 0 ? -1 : 1, 0};
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        a -= q * b;
        std::swap(a, b);
        Int s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        Int t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    if (a < 0) return {-a, -s0, -t0};
    return {a, s0, t0};
}

struct RowOps {
    IntegerMatrix& A;
    IntegerMatrix& U;

    // (R_i, R_j) <- (s R_i + t R_j, -bg R_i + ag R_j), unimodular since s*ag + t*bg = 1
    void combine(int i, int j, const Int& s, const Int& t, const Int& ag, const Int& bg) {
        for (IntegerMatrix* m : {&A, &U}) {
            for (int c = 0; c < m->cols; ++c) {
                Int x = m->at(i, c), y = m->at(j, c);
                m->at(i, c) = s * x + t * y;
                m->at(j, c) = ag * y - bg * x;
            }
        }
    }

    void negate(int i) {
        for (IntegerMatrix* m : {&A, &U})
            for (int c = 0; c < m->cols; ++c) m->at(i, c) = -m->at(i, c);
    }

    void subtract(int i, int j, const Int& q) {  // R_i -= q R_j
        if (q == 0) return;
        for (IntegerMatrix* m : {&A, &U})
            for (int c = 0; c < m->cols; ++c) m->at(i, c) -= q * m->at(j, c);
    }
};

}  // namespace

HNFResult hnf(const IntegerMatrix& A_in) {
    HNFResult res{A_in, IntegerMatrix::identity(A_in.rows), 0};
    IntegerMatrix& A = res.H;
    RowOps ops{A, res.U};
    int row = 0;
    for (int col = 0; col < A.cols && row < A.rows; ++col) {
        for (int i = row + 1; i < A.rows; ++i) {
            if (A.at(i, col) == 0) continue;
            auto [g, s, t] = xgcd(A.at(row, col), A.at(i, col));
            ops.combine(row, i, s, t, A.at(row, col) / g, A.at(i, col) / g);
        }
        if (A.at(row, col) == 0) continue;
        if (A.at(row, col) < 0) ops.negate(row);
        for (int i = 0; i < row; ++i) ops.subtract(i, row, floor_div(A.at(i, col), A.at(row, col)));
        ++row;
    }
    res.rank = row;
    return res;
}

IntegerMatrix kernel_lattice(const IntegerMatrix& A) {
    // rows of U beyond the rank of A^T form a basis of { v : A v^T = 0 }
    auto h = hnf(A.transposed());
    IntegerMatrix basis = h.U.bottom_rows(A.cols - h.rank);
    if (basis.rows == 0) return basis;
    return hnf(basis).H;
}

}  // namespace binomap
