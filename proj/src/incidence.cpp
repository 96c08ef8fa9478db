#include "binomap/incidence.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "binomap/cover.hpp"
#include "binomap/errors.hpp"

namespace binomap {

IncidenceMatrix build_incidence(const PolynomialSystem& sys) {
    IncidenceMatrix M;
    int nv = sys.nvars();

    std::vector<bool> has_negative(nv, false);
    for (const auto& eq : sys.equations)
        for (const auto& t : eq)
            for (int k = 0; k < nv; ++k)
                if (t.exponents[k] < 0) has_negative[k] = true;

    M.col_of_var.assign(nv, -1);
    for (int k = 0; k < nv; ++k) {
        if (has_negative[k]) {
            M.dropped.push_back(k);
        } else {
            M.col_of_var[k] = static_cast<int>(M.cols.size());
            M.cols.push_back(k);
        }
    }

    std::map<ExponentVector, int> row_of;
    M.term_row.resize(sys.equations.size());
    for (std::size_t e = 0; e < sys.equations.size(); ++e) {
        for (std::size_t t = 0; t < sys.equations[e].size(); ++t) {
            const ExponentVector& mono = sys.equations[e][t].exponents;
            auto it = row_of.find(mono);
            int r;
            if (it == row_of.end()) {
                r = M.nrows();
                row_of.emplace(mono, r);
                IncidenceMatrix::Row row;
                row.monomial = mono;
                row.bits.assign(M.cols.size(), false);
                for (int c = 0; c < M.ncols(); ++c) {
                    if (mono[M.cols[c]] > 0) {
                        row.bits[c] = true;
                        row.ones.push_back(c);
                    }
                }
                M.rows.push_back(std::move(row));
            } else {
                r = it->second;
            }
            M.rows[r].origins.emplace_back(static_cast<int>(e), static_cast<int>(t));
            M.term_row[e].push_back(r);
        }
    }
    return M;
}

bool row_covered(const IncidenceMatrix& M, int row, const Selection& S) {
    if (row < 0 || row >= M.nrows()) throw error("row_covered: row index out of range");
    for (int var : S.members) {
        int c = var >= 0 && var < static_cast<int>(M.col_of_var.size()) ? M.col_of_var[var] : -1;
        if (c >= 0 && M.rows[row].bits[c]) return true;
    }
    return false;
}

bool vanishes(const PolynomialSystem& sys, const IncidenceMatrix& M, const Selection& S) {
    (void)sys;
    for (int var : S.members) {
        if (var < 0 || var >= static_cast<int>(M.col_of_var.size()))
            throw invalid_selection_error("selection references unknown variable index " +
                                          std::to_string(var));
        if (M.col_of_var[var] < 0)
            throw invalid_selection_error(
                "variable with a negative exponent cannot be set to zero");
    }
    for (int r = 0; r < M.nrows(); ++r)
        if (!row_covered(M, r, S)) return false;
    return true;
}

std::string format_incidence(const PolynomialSystem& sys, const IncidenceMatrix& M) {
    std::vector<std::string> labels;
    std::size_t width = 0;
    for (const auto& row : M.rows) {
        labels.push_back(format_monomial(sys, row.monomial));
        width = std::max(width, labels.back().size());
    }
    std::ostringstream os;
    os << std::string(width, ' ');
    for (int c : M.cols) os << ' ' << sys.vars.names[c];
    os << '\n';
    for (int r = 0; r < M.nrows(); ++r) {
        os << labels[r] << std::string(width - labels[r].size(), ' ');
        for (int c = 0; c < M.ncols(); ++c) {
            std::size_t w = sys.vars.names[M.cols[c]].size();
            os << ' ' << std::string(w - 1, ' ') << (M.rows[r].bits[c] ? '1' : '0');
        }
        os << '\n';
    }
    if (!M.dropped.empty()) {
        os << "dropped:";
        for (int k : M.dropped) os << ' ' << sys.vars.names[k];
        os << '\n';
    }
    return os.str();
}

}  // namespace binomap
