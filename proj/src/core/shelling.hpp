#pragma once

#include <string>
#include <vector>

#include "complex.hpp"
#include "relative_simplex.hpp"
#include "tiling.hpp"

namespace htile {

enum class ShellMode { Barycentric, Facets, Ridges, Mixed };

ShellMode parse_shell_mode(const std::string& name);
std::string shell_mode_name(ShellMode mode);

struct SubdivisionLogEntry {
    Simplex face;
    std::string role; // facet | ridge | face, relative to the complex at that step
};

struct ShellingStats {
    long long num_subdivisions = 0;
    std::vector<long long> h; // tiles by order, length dim+2
    std::vector<long long> c; // critical tiles by index, length dim+1
    long long euler = 0;
};

struct ShellingResult {
    RelativeComplex complex; // the subdivided target
    Tiling tiling;
    std::vector<SubdivisionLogEntry> log;
    ShellingStats stats;

    std::string stats_to_string() const;
    std::string log_to_string() const;
};

/// Facets of the ambient in decreasing dimension (lexicographic tiebreak);
/// piece j is facet j minus the earlier facets and the removed subcomplex.
std::vector<RelativeSimplex> facet_filtration(const RelativeComplex& s);

/// Filtration of a closed strongly connected pseudo-manifold grown across
/// boundary ridges: starts at the lexicographically least facet, repeatedly
/// adjoins the facet on the other side of the least ridge met only once.
std::vector<RelativeSimplex> pseudomanifold_filtration(const SimplicialComplex& k);

/// Morse shelling of the first barycentric subdivision of a relative simplex.
ShellingResult morse_shell_barycentric(const RelativeSimplex& p);

/// Shellable h-tiling of a regular non-basic Morse tile after 2^(l-k)
/// stellar subdivisions, where k is the order and l the Morse face dimension.
ShellingResult h_tile_regular_morse(const MorseTile& t, ShellMode mode);

/// Morse shelling (then h-shelling for the stellar modes) of a relative
/// simplex after finitely many subdivisions.
ShellingResult shell_relative_simplex(const RelativeSimplex& p, ShellMode mode);

/// Whole-complex driver: facet filtration, then per-mode subdivisions.
/// Barycentric yields a Morse shelling of the barycentric subdivision; the
/// stellar modes yield an h-shelling (basic and critical tiles only).
ShellingResult shell_complex(const RelativeComplex& s, ShellMode mode);

/// Same over the pseudomanifold filtration; the resulting h-shelling uses
/// exactly one tile of order zero (a closed simplex) and at least one open
/// simplex.
ShellingResult shell_pseudomanifold(const SimplicialComplex& k, ShellMode mode);

/// Replays the subdivision log on the given input; the result must equal
/// the ambient complex of the shelling result.
SimplicialComplex replay_log(const SimplicialComplex& start,
                             const std::vector<SubdivisionLogEntry>& log);

ShellingStats compute_stats(const Tiling& t, long long num_subdivisions);

} // namespace htile
