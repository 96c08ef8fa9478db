#include "binomap/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "binomap/errors.hpp"

namespace binomap {

int VariableTable::add(const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    if (!valid_identifier(name)) throw error("invalid variable name: '" + name + "'");
    int pos = static_cast<int>(names.size());
    names.push_back(name);
    index.emplace(name, pos);
    return pos;
}

int VariableTable::find(const std::string& name) const {
    auto it = index.find(name);
    return it == index.end() ? -1 : it->second;
}

bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

bool PolynomialSystem::is_binomial() const {
    for (const auto& eq : equations)
        if (eq.size() != 2) return false;
    return true;
}

namespace {

std::string format_coeff(const Rat& c) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(c);
    if (boost::multiprecision::denominator(c) != 1) os << '/' << boost::multiprecision::denominator(c);
    return os.str();
}

}  // namespace

std::string format_monomial(const PolynomialSystem& sys, const ExponentVector& e) {
    std::string out;
    for (int k = 0; k < sys.nvars(); ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += '*';
        out += sys.vars.names[k];
        if (e[k] != 1) {
            out += '^';
            if (e[k] < 0)
                out += "(" + std::to_string(e[k]) + ")";
            else
                out += std::to_string(e[k]);
        }
    }
    if (out.empty()) out = "1";
    return out;
}

std::string format_term(const PolynomialSystem& sys, const Term& t) {
    bool constant = std::all_of(t.exponents.begin(), t.exponents.end(),
                                [](std::int64_t e) { return e == 0; });
    Rat c = t.coeff < 0 ? Rat(-t.coeff) : t.coeff;
    if (constant) return format_coeff(c);
    std::string mono = format_monomial(sys, t.exponents);
    if (c == 1) return mono;
    return format_coeff(c) + "*" + mono;
}

std::string serialize_system(const PolynomialSystem& sys) {
    std::string out;
    for (const auto& eq : sys.equations) {
        std::string line;
        for (std::size_t i = 0; i < eq.size(); ++i) {
            if (i == 0)
                line += eq[i].coeff < 0 ? "-" : "";
            else
                line += eq[i].coeff < 0 ? " - " : " + ";
            line += format_term(sys, eq[i]);
        }
        out += line + ";\n";
    }
    return out;
}

PolynomialSystem adjacent_minors(int m, int n) {
    if (m < 2 || n < 2) throw error("adjacent_minors: both dimensions must be at least 2");
    int wi = m > 9 ? static_cast<int>(std::to_string(m).size()) : 1;
    int wj = n > 9 ? static_cast<int>(std::to_string(n).size()) : 1;
    auto pad = [](int v, int w) {
        std::string s = std::to_string(v);
        while (static_cast<int>(s.size()) < w) s.insert(s.begin(), '0');
        return s;
    };
    auto name = [&](int i, int j) { return "x" + pad(i, wi) + pad(j, wj); };

    PolynomialSystem sys;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) sys.vars.add(name(i, j));

    int nv = m * n;
    auto var_at = [&](int i, int j) { return (i - 1) * n + (j - 1); };
    for (int i = 1; i < m; ++i) {
        for (int j = 1; j < n; ++j) {
            Term pos{Rat(1), ExponentVector(nv, 0)};
            pos.exponents[var_at(i, j)] += 1;
            pos.exponents[var_at(i + 1, j + 1)] += 1;
            Term neg{Rat(-1), ExponentVector(nv, 0)};
            neg.exponents[var_at(i + 1, j)] += 1;
            neg.exponents[var_at(i, j + 1)] += 1;
            sys.equations.push_back({pos, neg});
        }
    }
    return sys;
}

// structural equality: same variable names (any order, matched by name),
// same equations with term order ignored
bool same_system(const PolynomialSystem& a, const PolynomialSystem& b) {
    if (a.nvars() != b.nvars() || a.equations.size() != b.equations.size()) return false;
    std::vector<int> remap(b.nvars());  // b position -> a position
    for (int k = 0; k < b.nvars(); ++k) {
        int pos = a.vars.find(b.vars.names[k]);
        if (pos < 0) return false;
        remap[k] = pos;
    }
    auto key = [](const Term& t) { return std::make_pair(t.exponents, t.coeff); };
    auto lt = [&](const Term& x, const Term& y) { return key(x) < key(y); };
    for (std::size_t i = 0; i < a.equations.size(); ++i) {
        auto ta = a.equations[i];
        Polynomial tb;
        for (const Term& t : b.equations[i]) {
            Term r{t.coeff, ExponentVector(a.nvars(), 0)};
            for (int k = 0; k < b.nvars(); ++k) r.exponents[remap[k]] = t.exponents[k];
            tb.push_back(std::move(r));
        }
        std::sort(ta.begin(), ta.end(), lt);
        std::sort(tb.begin(), tb.end(), lt);
        if (!(ta == tb)) return false;
    }
    return true;
}

}  // namespace binomap
