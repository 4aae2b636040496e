#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tiling.hpp"

namespace htile {

/// Hard limits for the exhaustive oracles; exceeding them is an error, not a
/// silent truncation.
struct SearchLimits {
    std::size_t max_facets = 12;
    int max_dim = 3;
};

/// All tilings by basic or critical tiles, one tile per facet, found by
/// exhaustive assignment with partition pruning; deterministic order. Tile
/// choices on a facet are the distinct face intervals: every
/// removed-opposite subset, plus the critical variants for orders
/// 1..dim-1 (index 0 and the open simplex coincide with interval choices).
std::vector<Tiling> enumerate_h_tilings(const RelativeComplex& s, std::size_t limit,
                                        const SearchLimits& limits = {});

/// Decides shellability of a tiling by permutation search over tile orders
/// with prefix-closedness pruning.
bool tiling_is_shellable(const Tiling& t);

/// Minimal number of critical tiles over all tilings (require_shellable
/// false) or over tilings admitting a shelling order (true); absent when no
/// such tiling exists.
std::optional<long long> min_critical_tiles(const RelativeComplex& s, bool require_shellable,
                                            const SearchLimits& limits = {});

struct CrossCheckReport {
    bool ok = false;
    std::string text;
};

/// Compares the constructive shelling against the exhaustive oracle: when
/// the construction needs no subdivision its tiling must appear among the
/// enumerated ones, and enumerated tilings with equal c-vectors must have
/// equal h-vectors.
CrossCheckReport cross_check(const RelativeComplex& s, const SearchLimits& limits = {});

struct ShellingSample {
    std::size_t found = 0;
    std::size_t nodes = 0;
    long long min_closed_tiles = -1; // over the found shellings
    bool budget_exhausted = false;
};

/// Depth-first sample of shelled h-tilings (bounded, order-deterministic):
/// partial evidence only, never an exhaustive statement.
ShellingSample sample_shelled_h_tilings(const RelativeComplex& s, std::size_t max_found,
                                        std::size_t node_budget,
                                        const SearchLimits& limits = {});

} // namespace htile
