#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binomap/cover.hpp"
#include "binomap/toric.hpp"

#include <nlohmann/json_fwd.hpp>

namespace binomap {

// Integer basis W of the left relations of the map's nonzero exponent
// columns: each row w satisfies x^w = c^w identically on the map's image.
IntegerMatrix lattice_relations(const MonomialMap& map);

// Exact sufficient test for the inner map's image closure lying inside the
// outer one's: zero-pattern inclusion plus every outer relation supported on
// the inner's nonzero variables holding on the inner map (lattice part exact,
// coefficient part to 1e-10 relative).
bool contains(const MonomialMap& outer, const MonomialMap& inner);

struct DecomposeOptions {
    EnumerationOptions enumeration;
    double tol = 1e-8;
    int verify_samples = 10;
    std::uint64_t seed = 42;
    std::int64_t branch_limit = 64;
    int threads = 1;  // 0 = hardware concurrency
};

struct DecompStats {
    std::int64_t explored = 0;      // consistent selections enumerated
    std::int64_t branches = 0;      // particular-solution branches solved
    std::int64_t inconsistent = 0;  // selections whose residual had no toric solution
    std::int64_t pruned = 0;        // maps removed by the containment filter
    double seconds = 0.0;
};

struct MapEntry {
    MonomialMap map;
    Selection selection;
    int branch = 0;
};

struct Decomposition {
    std::vector<MapEntry> maps;  // pairwise non-contained, canonical order
    DecompStats stats;
};

// Full pipeline: enumerate consistent selections, solve each residual
// torically, assemble and verify maps, drop maps contained in another.
Decomposition decompose(const PolynomialSystem& sys, const DecomposeOptions& opts = {});

// machine-readable form; stable field names: count, maps[].{zero,free,dim,
// coeff,exponents}, stats. Excludes wall time so equal runs dump identically.
nlohmann::json to_json(const PolynomialSystem& sys, const Decomposition& dec);

std::string format_decomposition(const PolynomialSystem& sys, const Decomposition& dec);

}  // namespace binomap
