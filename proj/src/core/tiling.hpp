#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "relative_simplex.hpp"
#include "tile.hpp"

namespace htile {

enum class ViolationKind { NotPartition, NotClosed, NotPrefixClosed, BadTile };

struct Violation {
    ViolationKind kind;
    Simplex witness;
    std::optional<std::size_t> tile_index;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    /// One line per violation; non-verbose keeps the first witness per kind.
    std::string to_string(bool verbose = false) const;
};

/// Ordered list of Morse tiles against a relative target; the order is the
/// candidate shelling order. `notes` optionally traces how each tile was
/// produced.
struct Tiling {
    RelativeComplex target;
    std::vector<MorseTile> tiles;
    std::vector<std::string> notes;

    std::string to_string(const std::string& target_ref) const;
};

/// Partition and closedness checks: every face of the target lies in exactly
/// one tile, and for every d the union of faces of tiles of dimension >= d
/// is downward-closed within the target.
ValidationReport validate_tiling(const Tiling& t);

/// Additionally checks that every prefix of the tile order is
/// downward-closed within the target.
ValidationReport validate_shelling(const Tiling& t);

enum class RewriteMode { IsoCopy, Split };

struct TileRewrite {
    std::vector<MorseTile> tiles;
    int copy_index = -1; // position of the designated isomorphic copy, -1 for split
};

/// Shelled tile list over the stellar subdivision of the tile at tau.
/// IsoCopy keeps one tile isomorphic to the input among regular companions;
/// Split (Morse face strictly inside tau, regular non-basic input) yields
/// the critical pair of consecutive indices instead.
TileRewrite subdivide_tile(const MorseTile& t, const Simplex& tau,
                           RewriteMode mode = RewriteMode::IsoCopy);
TileRewrite subdivide_tile_with_apex(const MorseTile& t, const Simplex& tau, Vertex apex,
                                     RewriteMode mode = RewriteMode::IsoCopy);

/// The tile's local target after subdividing at tau (for validating rewrites).
RelativeComplex subdivided_local_target(const MorseTile& t, const Simplex& tau, Vertex apex);

/// Replace every tile whose facet contains tau by its rewrite, in place;
/// per-tile Split requests come through `modes` (default IsoCopy).
Tiling subdivide_tiling(const Tiling& t, const Simplex& tau,
                        const std::map<std::size_t, RewriteMode>& modes = {});

} // namespace htile
