#include "binomap/decomp.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "binomap/errors.hpp"

namespace binomap {

IntegerMatrix lattice_relations(const MonomialMap& map) {
    std::vector<int> nonzero;
    for (int k = 0; k < map.nvars; ++k)
        if (!map.is_zero_var(k)) nonzero.push_back(k);
    return kernel_lattice(map.exponents.select_columns(nonzero));
}

namespace {

Complex cpow_i64(Complex base, std::int64_t e) {
    if (e == 0) return {1.0, 0.0};
    if (e < 0) {
        base = 1.0 / base;
        e = -e;
    }
    Complex r{1.0, 0.0};
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

constexpr double kCoeffTol = 1e-10;

}  // namespace

bool contains(const MonomialMap& outer, const MonomialMap& inner) {
    if (outer.nvars != inner.nvars) throw error("contains: maps over different variable sets");
    if (!std::includes(inner.zero_set.begin(), inner.zero_set.end(), outer.zero_set.begin(),
                       outer.zero_set.end()))
        return false;

    std::vector<int> nz;  // inner's nonzero variables; outer is nonzero there too
    for (int k = 0; k < inner.nvars; ++k)
        if (!inner.is_zero_var(k)) nz.push_back(k);

    // relations of the outer map that only involve the inner's nonzero
    // variables; the inner map must satisfy each one, exponents exactly and
    // coefficients numerically
    IntegerMatrix K = kernel_lattice(outer.exponents.select_columns(nz));
    if (K.rows == 0) return true;
    if (!mul(inner.exponents.select_columns(nz), K.transposed()).is_zero()) return false;

    for (int w = 0; w < K.rows; ++w) {
        Complex ci{1.0, 0.0}, co{1.0, 0.0};
        for (int j = 0; j < K.cols; ++j) {
            std::int64_t e = to_i64(K.at(w, j));
            if (e == 0) continue;
            ci *= cpow_i64(inner.coeffs[nz[j]], e);
            co *= cpow_i64(outer.coeffs[nz[j]], e);
        }
        if (std::abs(ci - co) > kCoeffTol * std::max({1.0, std::abs(ci), std::abs(co)}))
            return false;
    }
    return true;
}

namespace {

double coeff_angle(const Complex& c) {
    if (c == Complex{0.0, 0.0}) return 0.0;
    return std::arg(c);
}

// |zero_set|, zero_set lex, then coefficient angles; exponent entries break
// remaining ties so the order is total
bool map_key_less(const MonomialMap& a, const MonomialMap& b) {
    if (a.zero_set.size() != b.zero_set.size()) return a.zero_set.size() < b.zero_set.size();
    if (a.zero_set != b.zero_set) return a.zero_set < b.zero_set;
    if (a.d != b.d) return a.d < b.d;
    for (int k = 0; k < a.nvars; ++k) {
        double aa = coeff_angle(a.coeffs[k]), ba = coeff_angle(b.coeffs[k]);
        if (aa != ba) return aa < ba;
        double am = std::abs(a.coeffs[k]), bm = std::abs(b.coeffs[k]);
        if (am != bm) return am < bm;
    }
    return a.exponents.a < b.exponents.a;
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        threads = hc == 0 ? 1 : static_cast<int>(hc);
    }
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0x94d049bb133111ebULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Decomposition decompose(const PolynomialSystem& sys, const DecomposeOptions& opts) {
    if (!sys.is_binomial())
        throw not_binomial_error("decompose requires a binomial system");
    auto t0 = std::chrono::steady_clock::now();

    IncidenceMatrix M = build_incidence(sys);
    std::vector<Selection> sels = enumerate_consistent(sys, M, opts.enumeration);

    Decomposition dec;
    dec.stats.explored = static_cast<std::int64_t>(sels.size());

    std::vector<std::vector<MapEntry>> slots(sels.size());
    std::vector<char> inconsistent(sels.size(), 0);
    parallel_for(static_cast<int>(sels.size()), opts.threads, [&](int i) {
        ResidualSystem res = residual(sys, M, sels[i]);
        SolveResult sol = solve_coefficients(res.A, res.gamma, opts.branch_limit);
        if (!sol.consistent) {
            inconsistent[i] = 1;
            return;
        }
        IntegerMatrix V = kernel_lattice(res.A);
        for (std::size_t b = 0; b < sol.solutions.size(); ++b) {
            MonomialMap map = build_map(sels[i], res, V, sol.solutions[b], sys.nvars());
            if (!verify_map(sys, map, opts.verify_samples, opts.tol,
                            mix_seed(opts.seed, static_cast<std::uint64_t>(i), b)))
                throw error("internal: assembled map failed residual verification");
            slots[i].push_back(MapEntry{std::move(map), sels[i], static_cast<int>(b)});
        }
    });

    std::vector<MapEntry> entries;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        dec.stats.inconsistent += inconsistent[i];
        for (auto& e : slots[i]) entries.push_back(std::move(e));
    }
    dec.stats.branches = static_cast<std::int64_t>(entries.size());

    // containment filter, smaller canonical key wins mutual containment
    std::vector<int> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return map_key_less(entries[x].map, entries[y].map); });
    std::vector<bool> alive(entries.size(), true);
    for (std::size_t a = 0; a < order.size(); ++a) {
        if (!alive[order[a]]) continue;
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            if (!alive[order[b]]) continue;
            if (contains(entries[order[a]].map, entries[order[b]].map)) {
                alive[order[b]] = false;
                ++dec.stats.pruned;
            } else if (contains(entries[order[b]].map, entries[order[a]].map)) {
                alive[order[a]] = false;
                ++dec.stats.pruned;
                break;
            }
        }
    }
    for (int idx : order)
        if (alive[idx]) dec.maps.push_back(std::move(entries[idx]));

    dec.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return dec;
}

namespace {

double clean_zero(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

nlohmann::json to_json(const PolynomialSystem& sys, const Decomposition& dec) {
    nlohmann::json maps = nlohmann::json::array();
    for (const MapEntry& entry : dec.maps) {
        const MonomialMap& m = entry.map;
        auto names_of = [&](const std::vector<int>& vars) {
            std::vector<std::string> names;
            for (int k : vars) names.push_back(sys.vars.names[k]);
            std::sort(names.begin(), names.end());
            return nlohmann::json(names);
        };
        nlohmann::json zero = names_of(m.zero_set);
        nlohmann::json free_list = names_of(m.free_vars);
        nlohmann::json coeff = nlohmann::json::object();
        nlohmann::json exps = nlohmann::json::object();
        for (int k = 0; k < m.nvars; ++k) {
            coeff[sys.vars.names[k]] = {clean_zero(m.coeffs[k].real()),
                                        clean_zero(m.coeffs[k].imag())};
            nlohmann::json col = nlohmann::json::array();
            for (int i = 0; i < m.d; ++i) col.push_back(to_i64(m.exponents.at(i, k)));
            exps[sys.vars.names[k]] = col;
        }
        maps.push_back({{"zero", zero},
                        {"free", free_list},
                        {"dim", m.d},
                        {"coeff", coeff},
                        {"exponents", exps}});
    }
    nlohmann::json stats = {{"explored", dec.stats.explored},
                            {"branches", dec.stats.branches},
                            {"inconsistent", dec.stats.inconsistent},
                            {"pruned", dec.stats.pruned}};
    return {{"count", dec.maps.size()}, {"maps", maps}, {"stats", stats}};
}

namespace {

std::string format_complex(const Complex& c) {
    std::ostringstream os;
    if (std::abs(c.imag()) < 1e-12) {
        os << c.real();
    } else {
        os << '(' << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i)";
    }
    return os.str();
}

}  // namespace

std::string format_decomposition(const PolynomialSystem& sys, const Decomposition& dec) {
    std::ostringstream os;
    os << dec.maps.size() << " component" << (dec.maps.size() == 1 ? "" : "s") << '\n';
    for (std::size_t i = 0; i < dec.maps.size(); ++i) {
        const MonomialMap& m = dec.maps[i].map;
        os << "component " << i + 1 << ": dim " << m.d << ", zero = {"
           << (m.zero_set.empty() ? "" : format_selection(sys, Selection{m.zero_set})) << "}\n";
        for (int k = 0; k < m.nvars; ++k) {
            os << "  " << sys.vars.names[k] << " = ";
            if (m.is_zero_var(k)) {
                os << "0\n";
                continue;
            }
            std::string monos;
            for (int p = 0; p < m.d; ++p) {
                std::int64_t e = to_i64(m.exponents.at(p, k));
                if (e == 0) continue;
                monos += " t" + std::to_string(p + 1);
                if (e != 1) monos += "^" + std::to_string(e);
            }
            Complex c = m.coeffs[k];
            if (monos.empty())
                os << format_complex(c);
            else if (c == Complex{1.0, 0.0})
                os << monos.substr(1);
            else
                os << format_complex(c) << " *" << monos;
            os << '\n';
        }
    }
    os << "stats: selections " << dec.stats.explored << ", branches " << dec.stats.branches
       << ", inconsistent " << dec.stats.inconsistent << ", pruned " << dec.stats.pruned
       << ", time " << std::fixed << std::setprecision(3) << dec.stats.seconds << " s\n";
    return os.str();
}

}  // namespace binomap
