#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "binomap/decomp.hpp"
#include "binomap/errors.hpp"

namespace {

using namespace binomap;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::int64_t fibonacci(int n) {
    std::int64_t a = 1, b = 1;  // F(1) = F(2) = 1
    for (int i = 3; i <= n; ++i) {
        std::int64_t c = a + b;
        a = b;
        b = c;
    }
    return n <= 2 ? 1 : b;
}

int cmd_solve(const std::string& path, bool json, const DecomposeOptions& opts) {
    PolynomialSystem sys = parse_system(read_file(path));
    if (sys.equations.empty()) throw parse_error("input contains no polynomials", 1, 1);
    Decomposition dec = decompose(sys, opts);
    if (json)
        std::cout << to_json(sys, dec).dump(2) << '\n';
    else
        std::cout << format_decomposition(sys, dec);
    return 0;
}

int cmd_bench(int min_n, int max_n, bool csv, int threads, std::uint64_t seed) {
    bool ok = true;
    if (csv) std::cout << "n,maps,expected,seconds\n";
    for (int n = min_n; n <= max_n; ++n) {
        DecomposeOptions opts;
        opts.enumeration.pure_dim = true;
        opts.threads = threads;
        opts.seed = seed;
        Decomposition dec = decompose(adjacent_minors(2, n), opts);
        std::int64_t maps = static_cast<std::int64_t>(dec.maps.size());
        std::int64_t expected = fibonacci(n);
        bool match = maps == expected;
        ok = ok && match;
        if (csv) {
            std::cout << n << ',' << maps << ',' << expected << ',' << std::fixed
                      << std::setprecision(3) << dec.stats.seconds << '\n';
        } else {
            std::cout << "n = " << std::setw(2) << n << "  maps = " << std::setw(6) << maps
                      << "  expected = " << std::setw(6) << expected << "  search = " << std::fixed
                      << std::setprecision(3) << dec.stats.seconds << " s"
                      << (match ? "" : "  MISMATCH") << '\n';
        }
        if (!match) std::cerr << "bench: count mismatch at n = " << n << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_incidence(const std::string& path) {
    PolynomialSystem sys = parse_system(read_file(path));
    std::cout << format_incidence(sys, build_incidence(sys));
    return 0;
}

int cmd_enumerate(const std::string& path, const EnumerationOptions& opts, bool json) {
    PolynomialSystem sys = parse_system(read_file(path));
    IncidenceMatrix M = build_incidence(sys);
    std::vector<Selection> sels = opts.covers_only ? enumerate_covers(M, opts)
                                                   : enumerate_consistent(sys, M, opts);
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Selection& s : sels) {
            nlohmann::json one = nlohmann::json::array();
            for (int k : s.members) one.push_back(sys.vars.names[k]);
            arr.push_back(one);
        }
        std::cout << nlohmann::json{{"count", sels.size()}, {"selections", arr}}.dump(2) << '\n';
    } else {
        for (const Selection& s : sels) std::cout << format_selection(sys, s) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine solution sets of binomial systems as monomial maps"};
    app.require_subcommand(1);

    std::string path;
    bool json = false;
    DecomposeOptions dopts;

    auto* solve = app.add_subcommand("solve", "decompose a binomial system file");
    solve->add_option("file", path, "input system, ';'-terminated polynomials")->required();
    solve->add_flag("--json", json, "machine-readable output");
    solve->add_flag("--pure-dim", dopts.enumeration.pure_dim,
                    "restrict to selections zeroing one variable per vanished equation");
    solve->add_option("--seed", dopts.seed, "verification sampling seed");
    solve->add_option("--tol", dopts.tol, "verification tolerance");
    solve->add_option("--samples", dopts.verify_samples, "verification sample count");
    solve->add_option("--branch-limit", dopts.branch_limit, "max toric branches per selection");
    solve->add_option("--threads", dopts.threads, "worker threads (0 = all cores)")
        ->envname("BINOMAP_THREADS");

    int min_n = 3, max_n = 12;
    bool csv = false;
    int bench_threads = 0;
    std::uint64_t bench_seed = 42;
    auto* bench = app.add_subcommand("bench", "adjacent-minors benchmark sweep");
    bench->add_option("min_n", min_n, "first board width")->required()->check(CLI::Range(3, 64));
    bench->add_option("max_n", max_n, "last board width")->required()->check(CLI::Range(3, 64));
    bench->add_flag("--csv", csv, "CSV output (n,maps,expected,seconds)");
    bench->add_option("--threads", bench_threads, "worker threads (0 = all cores)")
        ->envname("BINOMAP_THREADS");
    bench->add_option("--seed", bench_seed, "verification sampling seed");

    auto* incidence = app.add_subcommand("incidence", "print the monomial/variable incidence matrix");
    incidence->add_option("file", path, "input system")->required();

    EnumerationOptions eopts;
    int max_size = -1;
    auto* enumerate = app.add_subcommand("enumerate", "list zero-variable selections");
    enumerate->add_option("file", path, "input system")->required();
    enumerate->add_flag("--covers-only", eopts.covers_only, "full covers only (row expansion)");
    enumerate->add_flag("--pure-dim", eopts.pure_dim, "one vanished equation per zeroed variable");
    enumerate->add_option("--max-size", max_size, "largest selection to emit");
    enumerate->add_flag("--json", json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(path, json, dopts);
        if (bench->parsed()) {
            if (min_n > max_n) throw binomap::error("bench: min_n must not exceed max_n");
            return cmd_bench(min_n, max_n, csv, bench_threads, bench_seed);
        }
        if (incidence->parsed()) return cmd_incidence(path);
        if (enumerate->parsed()) {
            if (max_size >= 0) eopts.max_size = max_size;
            return cmd_enumerate(path, eopts, json);
        }
    } catch (const binomap::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const binomap::not_binomial_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const binomap::branch_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const binomap::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
