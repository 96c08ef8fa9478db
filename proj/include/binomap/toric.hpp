#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "binomap/cover.hpp"
#include "binomap/intmat.hpp"
#include "binomap/numbers.hpp"
#include "binomap/poly.hpp"

namespace binomap {

using Complex = std::complex<double>;

// What is left of a binomial system after zeroing a selection: one exponent-
// difference row and one rational right-hand side per surviving equation.
// Variables split into S (zeroed), linked (constrained) and free.
struct ResidualSystem {
    std::vector<int> linked_vars;   // ascending variable indices
    std::vector<int> free_vars;     // ascending variable indices
    std::vector<int> residual_eqs;  // surviving equation indices
    IntegerMatrix A;                // residual_eqs x linked_vars exponent differences
    std::vector<Rat> gamma;         // -c_b/c_a per surviving equation
};

// Keeps only Residual equations of classify(sys, M, S); errors on a Mixed
// equation or a surviving non-binomial equation.
ResidualSystem residual(const PolynomialSystem& sys, const IncidenceMatrix& M, const Selection& S);

// Particular solutions of x^A = gamma over nonzero complex vectors.
// Consistency is decided exactly (gamma^w = 1 for the integer left kernel of
// A); the finitely many branches come from the triangularized system, one per
// combination of the Hermite pivots' roots of unity.
struct SolveResult {
    bool consistent = true;
    std::vector<std::vector<Complex>> solutions;  // one vector of size cols(A) per branch
};

SolveResult solve_coefficients(const IntegerMatrix& A, const std::vector<Rat>& gamma,
                               std::int64_t branch_limit);

// Parametrization x_k = c_k * t_1^{v_{1,k}} ... t_d^{v_{d,k}} of one
// d-dimensional solution component.
struct MonomialMap {
    int nvars = 0;
    int d = 0;                    // parameter count
    std::vector<int> zero_set;    // variables with c_k = 0, ascending
    std::vector<int> free_vars;   // variables carrying their own parameter
    std::vector<Complex> coeffs;  // c_k per variable
    IntegerMatrix exponents;      // d x nvars, column k = exponents of x_k

    bool is_zero_var(int var) const;
};

// Assembles the map from a selection, its residual partition, a kernel basis
// V of the residual matrix and one particular coefficient solution. Free
// parameters come first, then one parameter per kernel row.
MonomialMap build_map(const Selection& S, const ResidualSystem& res, const IntegerMatrix& V,
                      const std::vector<Complex>& particular, int nvars);

// Numerical oracle: substitutes `samples` random parameter points with moduli
// in [0.5, 2] and checks every equation vanishes to tol relative to its
// largest term.
bool verify_map(const PolynomialSystem& sys, const MonomialMap& map, int samples, double tol,
                std::uint64_t seed);

}  // namespace binomap
