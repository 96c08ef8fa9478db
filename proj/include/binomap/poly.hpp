#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "binomap/numbers.hpp"

namespace binomap {

// Ordered table of distinct variable names, position = order of first appearance.
struct VariableTable {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;

    // registers the name if new; returns its position
    int add(const std::string& name);
    // -1 if absent
    int find(const std::string& name) const;
    int size() const { return static_cast<int>(names.size()); }

    bool operator==(const VariableTable& o) const { return names == o.names; }
};

bool valid_identifier(const std::string& name);

// one integer exponent per variable; negative entries are Laurent exponents
using ExponentVector = std::vector<std::int64_t>;

struct Term {
    Rat coeff;  // nonzero
    ExponentVector exponents;

    bool operator==(const Term& o) const { return coeff == o.coeff && exponents == o.exponents; }
};

using Polynomial = std::vector<Term>;  // nonempty, pairwise distinct exponent vectors

struct PolynomialSystem {
    VariableTable vars;
    std::vector<Polynomial> equations;

    int nvars() const { return vars.size(); }
    bool is_binomial() const;
};

// Text format: `;`-terminated polynomials, terms joined by +/-, factors by `*`,
// powers via `^` with integer exponent (parens allowed: x^(-2)), optional
// integer or rational (p/q) coefficients. Variables ordered by first appearance.
PolynomialSystem parse_system(const std::string& text);

// Inverse of the parse format, one equation per line.
std::string serialize_system(const PolynomialSystem& sys);

// render a single term / monomial, e.g. "2*x^3*y" / "x11*x22"
std::string format_term(const PolynomialSystem& sys, const Term& t);
std::string format_monomial(const PolynomialSystem& sys, const ExponentVector& e);

// All adjacent 2x2 minors of an m x n matrix of indeterminates x{i}{j}:
// x_{i,j} x_{i+1,j+1} - x_{i+1,j} x_{i,j+1}, i = 1..m-1, j = 1..n-1.
// Indices are zero-padded to a fixed per-axis width when the axis exceeds 9.
PolynomialSystem adjacent_minors(int m, int n);

// equality with term order ignored inside each equation
bool same_system(const PolynomialSystem& a, const PolynomialSystem& b);

}  // namespace binomap
