#pragma once

#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "simplex.hpp"

namespace htile {

enum class TileKind { Basic, Critical, RegularMorse, Invalid };

struct TileClass {
    TileKind kind = TileKind::Invalid;
    int value = -1;     // order for Basic/RegularMorse, index for Critical
    int morse_dim = -1; // dimension of the Morse face, RegularMorse only

    friend bool operator==(const TileClass&, const TileClass&) = default;
    std::string to_string() const;
};

/// A facet deprived of the ridges opposite to `removed_opposite` and
/// optionally of one further face (`morse_face`) containing the restriction
/// set. A face belongs to the tile iff it contains every removed-opposite
/// vertex and is not contained in the Morse face.
///
/// Canonical representations: a critical tile stores morse_face == r(T) with
/// the critical flag set; the open simplex stores removed_opposite == facet
/// and no Morse face; zero-dimensional tiles are stored as open vertices
/// (the vertex interval has no closed lower end once the empty face is
/// excluded).
class MorseTile {
public:
    MorseTile(Simplex facet, Simplex removed_opposite,
              std::optional<Simplex> morse_face = std::nullopt, bool critical = false);

    const Simplex& facet() const { return facet_; }
    const Simplex& removed_opposite() const { return removed_; }
    const std::optional<Simplex>& morse_face() const { return morse_; }
    bool critical_flag() const { return critical_; }

    int dim() const { return facet_.dim(); }
    int order() const { return static_cast<int>(removed_.size()); }
    Simplex restriction_set() const { return removed_; }

    bool is_open() const { return removed_.size() == facet_.size(); }
    bool is_closed_simplex() const;

    std::optional<std::string> invalid_reason() const;
    bool valid() const { return !invalid_reason().has_value(); }

    TileClass classify() const;

    bool contains(const Simplex& face) const;
    std::vector<Simplex> faces() const;

    /// The relative complex this tile fills on its own: the facet's complex
    /// relative to the removed ridges and the Morse face.
    RelativeComplex local_target() const;

    std::string to_string() const; // canonical tile line

    friend bool operator==(const MorseTile&, const MorseTile&) = default;
    friend auto operator<=>(const MorseTile&, const MorseTile&) = default;

private:
    Simplex facet_;
    Simplex removed_;
    std::optional<Simplex> morse_;
    bool critical_ = false;
};

/// Number of j-faces of the basic tile of dimension n and order k.
long long tile_face_count(int n, int k, int j);
/// Same with the minimum face removed (critical tile of index k <= n-1).
long long tile_face_count_critical(int n, int k, int j);

/// Tiles of the same combinatorial type: equal dimension and class.
bool same_tile_type(const MorseTile& a, const MorseTile& b);

long long binomial(int n, int k);

} // namespace htile
