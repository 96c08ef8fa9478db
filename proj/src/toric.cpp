#include "binomap/toric.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "binomap/errors.hpp"

namespace binomap {

namespace {

Complex cpow(const Complex& base, std::int64_t e) {
    if (e == 0) return {1.0, 0.0};
    Complex b = e < 0 ? 1.0 / base : base;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    Complex r{1.0, 0.0};
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

Complex cpow(const Complex& base, const Int& e) { return cpow(base, to_i64(e)); }

Rat rat_pow_row(const std::vector<Rat>& gamma, const IntegerMatrix& W, int row) {
    Rat r(1);
    for (int j = 0; j < W.cols; ++j) {
        const Int& e = W.at(row, j);
        if (e != 0) r *= rat_pow(gamma[j], to_i64(e));
    }
    return r;
}

Complex to_complex(const Rat& v) { return {to_double(v), 0.0}; }

double log_abs(const Int& v) {
    Int a = v < 0 ? Int(-v) : v;
    if (a == 0) throw error("log of zero");
    std::size_t bits = boost::multiprecision::msb(a) + 1;
    if (bits <= 900) return std::log(a.convert_to<double>());
    Int top = a >> (bits - 64);
    return std::log(top.convert_to<double>()) +
           static_cast<double>(bits - 64) * std::log(2.0);
}

double log_abs(const Rat& v) {
    return log_abs(boost::multiprecision::numerator(v)) -
           log_abs(boost::multiprecision::denominator(v));
}

// into (-pi, pi]
double normalize_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::remainder(a, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    return a;
}

// deterministic generator independent of the standard library's
// distribution implementations
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

ResidualSystem residual(const PolynomialSystem& sys, const IncidenceMatrix& M, const Selection& S) {
    auto cls = classify(sys, M, S);
    ResidualSystem res;
    for (std::size_t e = 0; e < cls.status.size(); ++e) {
        if (cls.status[e] == EquationStatus::Mixed)
            throw invalid_selection_error("selection leaves equation " + std::to_string(e) +
                                          " with exactly one surviving monomial");
        if (cls.status[e] == EquationStatus::Residual && sys.equations[e].size() != 2)
            throw not_binomial_error("surviving equation " + std::to_string(e) +
                                     " is not a binomial");
    }
    res.residual_eqs = cls.residual;

    int nv = sys.nvars();
    std::vector<bool> linked(nv, false);
    for (int e : res.residual_eqs)
        for (const Term& t : sys.equations[e])
            for (int k = 0; k < nv; ++k)
                if (t.exponents[k] != 0) linked[k] = true;
    for (int k = 0; k < nv; ++k) {
        if (S.contains(k)) continue;
        if (linked[k])
            res.linked_vars.push_back(k);
        else
            res.free_vars.push_back(k);
    }

    res.A = IntegerMatrix(static_cast<int>(res.residual_eqs.size()),
                          static_cast<int>(res.linked_vars.size()));
    for (int i = 0; i < res.A.rows; ++i) {
        const Polynomial& eq = sys.equations[res.residual_eqs[i]];
        const Term& lead = eq[0];
        const Term& trail = eq[1];
        for (int j = 0; j < res.A.cols; ++j) {
            int k = res.linked_vars[j];
            res.A.at(i, j) = Int(lead.exponents[k]) - Int(trail.exponents[k]);
        }
        res.gamma.push_back(-trail.coeff / lead.coeff);
    }
    return res;
}

SolveResult solve_coefficients(const IntegerMatrix& A, const std::vector<Rat>& gamma,
                               std::int64_t branch_limit) {
    assert(static_cast<int>(gamma.size()) == A.rows);
    for (const Rat& g : gamma)
        if (g == 0) throw error("solve_coefficients: zero right-hand side");

    auto h = hnf(A);
    int q = h.rank;
    int m = A.cols;

    // rows of U past the rank span the integer left kernel of A; each one
    // yields the exact consistency condition gamma^w = 1
    for (int i = q; i < A.rows; ++i)
        if (rat_pow_row(gamma, h.U, i) != 1) return {false, {}};

    // right-hand sides of the reduced system, kept exact
    std::vector<Rat> delta(q);
    for (int i = 0; i < q; ++i) delta[i] = rat_pow_row(gamma, h.U, i);

    // triangularize columns: hnf(H'^T).U recoordinatizes the torus so the
    // reduced system becomes y_i^{p_i} = (known), p_i the Hermite pivots
    auto ht = hnf(h.H.top_rows(q).transposed());
    assert(ht.rank == q);
    const IntegerMatrix& B = ht.U;  // x_j = prod_i y_i^{B[i][j]}

    Int nbranches = 1;
    std::vector<std::int64_t> pivots(q);
    for (int i = 0; i < q; ++i) {
        pivots[i] = to_i64(ht.H.at(i, i));
        nbranches *= pivots[i];
    }
    if (nbranches > branch_limit) throw branch_limit_error(nbranches.str(), branch_limit);

    // intermediate magnitudes can dwarf the double range even when the final
    // coordinates do not, so y is carried as (log-modulus, angle)
    SolveResult out;
    std::vector<std::int64_t> counter(q, 0);
    std::int64_t total = nbranches.convert_to<std::int64_t>();
    for (std::int64_t b = 0; b < total; ++b) {
        std::vector<double> ylog(q, 0.0), yang(q, 0.0);
        for (int i = 0; i < q; ++i) {
            double rlog = log_abs(delta[i]);
            double rang = delta[i] < 0 ? std::numbers::pi : 0.0;
            for (int j = 0; j < i; ++j) {
                double e = static_cast<double>(-to_i64(ht.H.at(j, i)));
                rlog += e * ylog[j];
                rang += e * yang[j];
            }
            double p = static_cast<double>(pivots[i]);
            ylog[i] = rlog / p;
            yang[i] = normalize_angle(rang) / p +
                      2.0 * std::numbers::pi * static_cast<double>(counter[i]) / p;
        }
        std::vector<Complex> x(m);
        for (int j = 0; j < m; ++j) {
            double lg = 0.0, ag = 0.0;
            for (int i = 0; i < q; ++i) {
                double e = static_cast<double>(to_i64(B.at(i, j)));
                lg += e * ylog[i];
                ag += e * yang[i];
            }
            x[j] = std::polar(std::exp(lg), normalize_angle(ag));
        }
        out.solutions.push_back(std::move(x));
        for (int i = q - 1; i >= 0; --i) {  // mixed-radix increment
            if (++counter[i] < pivots[i]) break;
            counter[i] = 0;
        }
    }
    return out;
}

bool MonomialMap::is_zero_var(int var) const {
    return std::binary_search(zero_set.begin(), zero_set.end(), var);
}

MonomialMap build_map(const Selection& S, const ResidualSystem& res, const IntegerMatrix& V,
                      const std::vector<Complex>& particular, int nvars) {
    if (V.cols != static_cast<int>(res.linked_vars.size()) ||
        particular.size() != res.linked_vars.size())
        throw error("build_map: dimension mismatch");

    MonomialMap map;
    map.nvars = nvars;
    map.zero_set = S.members;
    map.free_vars = res.free_vars;
    int nfree = static_cast<int>(res.free_vars.size());
    map.d = nfree + V.rows;
    map.coeffs.assign(nvars, Complex{0.0, 0.0});
    map.exponents = IntegerMatrix(map.d, nvars);

    for (int p = 0; p < nfree; ++p) {
        int k = res.free_vars[p];
        map.coeffs[k] = Complex{1.0, 0.0};
        map.exponents.at(p, k) = 1;
    }
    for (int j = 0; j < V.cols; ++j) {
        int k = res.linked_vars[j];
        map.coeffs[k] = particular[j];
        for (int i = 0; i < V.rows; ++i) map.exponents.at(nfree + i, k) = V.at(i, j);
    }
    return map;
}

bool verify_map(const PolynomialSystem& sys, const MonomialMap& map, int samples, double tol,
                std::uint64_t seed) {
    SplitMix64 rng{seed};
    int nv = sys.nvars();
    for (int s = 0; s < samples; ++s) {
        std::vector<Complex> t(map.d);
        for (int i = 0; i < map.d; ++i) {
            double mod = 0.5 + 1.5 * rng.uniform();
            double ang = 2.0 * std::numbers::pi * rng.uniform();
            t[i] = std::polar(mod, ang);
        }
        std::vector<Complex> x(nv);
        for (int k = 0; k < nv; ++k) {
            Complex v = map.coeffs[k];
            if (v != Complex{0.0, 0.0})
                for (int i = 0; i < map.d; ++i) v *= cpow(t[i], map.exponents.at(i, k));
            x[k] = v;
        }
        for (const Polynomial& eq : sys.equations) {
            Complex value{0.0, 0.0};
            double max_term = 0.0;
            for (const Term& term : eq) {
                Complex tv = to_complex(term.coeff);
                bool zero = false;
                for (int k = 0; k < nv; ++k) {
                    std::int64_t e = term.exponents[k];
                    if (e == 0) continue;
                    if (x[k] == Complex{0.0, 0.0}) {
                        if (e < 0) return false;  // zeroed variable under a negative power
                        zero = true;
                        break;
                    }
                    tv *= cpow(x[k], e);
                }
                if (zero) continue;
                value += tv;
                max_term = std::max(max_term, std::abs(tv));
            }
            double mag = std::abs(value);
            if (!std::isfinite(mag) || !std::isfinite(max_term)) return false;
            if (mag > tol * (1.0 + max_term)) return false;
        }
    }
    return true;
}

}  // namespace binomap
