#include "binomap/cover.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "binomap/errors.hpp"

namespace binomap {

bool Selection::contains(int var) const {
    return std::binary_search(members.begin(), members.end(), var);
}

bool Selection::operator<(const Selection& o) const {
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return members < o.members;
}

std::string format_selection(const PolynomialSystem& sys, const Selection& S) {
    if (S.members.empty()) return "{}";
    std::vector<std::string> names;
    for (int k : S.members) names.push_back(sys.vars.names[k]);
    std::sort(names.begin(), names.end());
    std::string out;
    for (const std::string& n : names) {
        if (!out.empty()) out += ' ';
        out += n;
    }
    return out;
}

Classification classify(const PolynomialSystem& sys, const IncidenceMatrix& M, const Selection& S) {
    for (int var : S.members)
        if (var < 0 || var >= static_cast<int>(M.col_of_var.size()) || M.col_of_var[var] < 0)
            throw invalid_selection_error("selection is not a subset of the active columns");
    Classification out;
    for (std::size_t e = 0; e < sys.equations.size(); ++e) {
        int covered = 0;
        int nterms = static_cast<int>(M.term_row[e].size());
        for (int t = 0; t < nterms; ++t)
            if (row_covered(M, M.term_row[e][t], S)) ++covered;
        if (covered == nterms) {
            out.status.push_back(EquationStatus::Vanished);
            ++out.vanished;
        } else if (covered == 0) {
            out.status.push_back(EquationStatus::Residual);
            out.residual.push_back(static_cast<int>(e));
        } else {
            out.status.push_back(EquationStatus::Mixed);
        }
    }
    return out;
}

namespace {

// rows by ascending popcount, stable (fail-first)
std::vector<int> greedy_row_order(const IncidenceMatrix& M) {
    std::vector<int> order(M.nrows());
    for (int i = 0; i < M.nrows(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return M.rows[a].ones.size() < M.rows[b].ones.size();
    });
    return order;
}

std::vector<std::vector<int>> rows_per_column(const IncidenceMatrix& M) {
    std::vector<std::vector<int>> rows_of(M.ncols());
    for (int r = 0; r < M.nrows(); ++r)
        for (int c : M.rows[r].ones) rows_of[c].push_back(r);
    return rows_of;
}

Selection to_selection(const IncidenceMatrix& M, const std::vector<int>& sel_cols) {
    Selection s;
    for (int c : sel_cols) s.members.push_back(M.cols[c]);
    std::sort(s.members.begin(), s.members.end());
    return s;
}

struct CoverSearch {
    const IncidenceMatrix& M;
    const EnumerationOptions& opts;
    int neqs;
    std::vector<int> order;
    std::vector<std::vector<int>> rows_of_col;
    std::vector<int> cover_count;
    std::vector<int> sel;
    std::vector<Selection> out;
    std::set<std::vector<int>> seen;

    CoverSearch(const IncidenceMatrix& m, const EnumerationOptions& o)
        : M(m),
          opts(o),
          neqs(static_cast<int>(m.term_row.size())),
          order(greedy_row_order(m)),
          rows_of_col(rows_per_column(m)),
          cover_count(m.nrows(), 0) {}

    bool size_ok_after_add() const {
        int next = static_cast<int>(sel.size()) + 1;
        if (opts.max_size && next > *opts.max_size) return false;
        if (opts.pure_dim && next > neqs) return false;
        return true;
    }

    void emit() {
        if (opts.pure_dim && static_cast<int>(sel.size()) != neqs) return;
        Selection s = to_selection(M, sel);
        if (opts.dedupe && !seen.insert(s.members).second) return;
        out.push_back(std::move(s));
    }

    void rec(std::size_t pos) {
        if (pos == order.size()) {
            emit();
            return;
        }
        int r = order[pos];
        if (cover_count[r] > 0) {
            rec(pos + 1);
            return;
        }
        if (!size_ok_after_add()) return;
        for (int c : M.rows[r].ones) {
            sel.push_back(c);
            for (int rr : rows_of_col[c]) ++cover_count[rr];
            rec(pos + 1);
            for (int rr : rows_of_col[c]) --cover_count[rr];
            sel.pop_back();
        }
    }
};

struct ConsistentSearch {
    const IncidenceMatrix& M;
    const EnumerationOptions& opts;
    int neqs;
    std::vector<int> order;
    std::vector<std::vector<int>> rows_of_col;
    std::vector<int> cover_count;
    std::vector<int> covered_terms;    // per equation
    std::vector<int> uncovered_terms;  // per equation, decided-final only
    std::vector<int> nterms;
    std::vector<int> sel;
    std::set<std::vector<int>> out;

    ConsistentSearch(const IncidenceMatrix& m, const EnumerationOptions& o)
        : M(m),
          opts(o),
          neqs(static_cast<int>(m.term_row.size())),
          order(greedy_row_order(m)),
          rows_of_col(rows_per_column(m)),
          cover_count(m.nrows(), 0),
          covered_terms(neqs, 0),
          uncovered_terms(neqs, 0) {
        for (int e = 0; e < neqs; ++e) nterms.push_back(static_cast<int>(m.term_row[e].size()));
    }

    // adding this column must not cover a row decided uncovered, nor flip an
    // equation with a decided-uncovered term into Mixed
    bool addable(int c) const {
        for (int r : rows_of_col[c]) {
            if (cover_count[r] > 0) continue;
            for (auto [e, t] : M.rows[r].origins)
                if (uncovered_terms[e] > 0) return false;
        }
        return true;
    }

    void apply_add(int c) {
        sel.push_back(c);
        for (int r : rows_of_col[c]) {
            if (cover_count[r]++ == 0)
                for (auto [e, t] : M.rows[r].origins) ++covered_terms[e];
        }
    }

    void undo_add(int c) {
        sel.pop_back();
        for (int r : rows_of_col[c]) {
            if (--cover_count[r] == 0)
                for (auto [e, t] : M.rows[r].origins) --covered_terms[e];
        }
    }

    void emit() {
        if (opts.pure_dim) {
            int vanished = 0;
            for (int e = 0; e < neqs; ++e)
                if (covered_terms[e] == nterms[e]) ++vanished;
            if (static_cast<int>(sel.size()) != vanished) return;
        }
        out.insert(to_selection(M, sel).members);
    }

    void rec(std::size_t pos) {
        if (pos == order.size()) {
            emit();
            return;
        }
        int r = order[pos];
        if (cover_count[r] > 0) {
            rec(pos + 1);
            return;
        }
        int next = static_cast<int>(sel.size()) + 1;
        bool may_add = !(opts.max_size && next > *opts.max_size) && !(opts.pure_dim && next > neqs);
        if (may_add) {
            for (int c : M.rows[r].ones) {
                if (!addable(c)) continue;
                apply_add(c);
                rec(pos + 1);
                undo_add(c);
            }
        }
        // leave this row uncovered; an already covered sibling term would make
        // its equation Mixed, which prunes the branch here
        for (auto [e, t] : M.rows[r].origins)
            if (covered_terms[e] > 0) return;
        for (auto [e, t] : M.rows[r].origins) ++uncovered_terms[e];
        rec(pos + 1);
        for (auto [e, t] : M.rows[r].origins) --uncovered_terms[e];
    }
};

}  // namespace

std::vector<Selection> enumerate_covers(const IncidenceMatrix& M, const EnumerationOptions& opts) {
    CoverSearch search(M, opts);
    search.rec(0);
    return std::move(search.out);
}

std::vector<Selection> enumerate_consistent(const PolynomialSystem& sys, const IncidenceMatrix& M,
                                            const EnumerationOptions& opts) {
    if (!sys.is_binomial())
        throw not_binomial_error("consistent enumeration requires a binomial system");
    ConsistentSearch search(M, opts);
    search.rec(0);
    std::vector<Selection> result;
    for (const auto& members : search.out) result.push_back(Selection{members});
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace binomap
