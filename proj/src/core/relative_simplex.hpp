#pragma once

#include <string>
#include <vector>

#include "complex.hpp"
#include "simplex.hpp"
#include "tile.hpp"

namespace htile {

/// A simplex deprived of a set of proper faces, normalized as: the removed
/// ridges (as their opposite vertices) plus the remaining missing faces of
/// codimension >= 2 that contain the restriction set. Missing faces that do
/// not contain the restriction set never exclude a face of the interval and
/// are dropped; kept extras are pairwise incomparable and sorted.
struct RelativeSimplex {
    Simplex simplex;
    Simplex removed_opposite;
    std::vector<Simplex> extras;

    static RelativeSimplex from_missing(Simplex simplex, std::vector<Simplex> missing);
    static RelativeSimplex from_morse_tile(const MorseTile& t);

    int dim() const { return simplex.dim(); }
    int order() const { return static_cast<int>(removed_opposite.size()); }
    bool is_morse() const { return extras.size() <= 1; }
    MorseTile to_morse_tile() const; // requires is_morse()

    long long extra_dim_total() const;

    bool contains(const Simplex& face) const;
    std::vector<Simplex> faces() const;

    /// Subcomplex generated by the removed ridges and the extras.
    SimplicialComplex missing_complex() const;

    std::string to_string() const;

    friend bool operator==(const RelativeSimplex&, const RelativeSimplex&) = default;
};

/// A vertex numbering of the underlying simplex for a stellar subdivision at
/// tau. Vertices order[0..kr-1] are the removed-opposite set, the vertices of
/// tau occupy the contiguous index window [k1, k2], and the subdivided star
/// is shelled by the cones over the ridges opposite to the window indices.
struct SubdivisionPlan {
    std::vector<Vertex> order;
    int k1 = 0;
    int k2 = 0;
    int kr = 0;
    int copy_window_index = -1; // window index of the designated isomorphic copy
};

/// Numbering with every group ascending; used for basic tiles and for tiles
/// whose Morse face contains tau, and for neighbours hit by a shared-ridge
/// subdivision.
SubdivisionPlan plan_default(const RelativeSimplex& p, const Simplex& tau);

/// Numbering that pins a vertex of tau outside the Morse face at window
/// index kr, so the copy keeps the Morse face intact. Requires a Morse input
/// with non-empty Morse face not containing tau.
SubdivisionPlan plan_iso(const RelativeSimplex& p, const Simplex& tau);

/// Numbering making the Morse face an index prefix; yields the critical pair
/// of consecutive indices. Requires a regular non-basic Morse input with
/// morse_face strictly contained in tau.
SubdivisionPlan plan_split(const RelativeSimplex& p, const Simplex& tau);

/// Numbering pinning a vertex that lies in the second extra but not the
/// first, shrinking the missing data of the emitted pieces. Requires at
/// least two extras and tau equal to the facet or to a present ridge.
SubdivisionPlan plan_reduction(const RelativeSimplex& p, const Simplex& tau);

/// Case dispatch for Morse inputs (and plain default for others); split is
/// only honoured where legal.
SubdivisionPlan plan_auto(const RelativeSimplex& p, const Simplex& tau, bool want_split);

/// Shelled decomposition of the stellar subdivision of p at tau with the
/// given apex: one piece per window index, in shelling order. Piece i lives
/// on the cone facet (simplex \ {order[i]}) + apex; its missing data is the
/// restriction of the subdivided missing subcomplex together with the ridges
/// shared with earlier pieces.
std::vector<RelativeSimplex> subdivide_piece(const RelativeSimplex& p, const Simplex& tau,
                                             Vertex apex, const SubdivisionPlan& plan);

} // namespace htile
