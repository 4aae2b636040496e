#include "tile.hpp"

#include "error.hpp"

namespace htile {

std::string TileClass::to_string() const {
    switch (kind) {
        case TileKind::Basic: return "basic(" + std::to_string(value) + ")";
        case TileKind::Critical: return "critical(" + std::to_string(value) + ")";
        case TileKind::RegularMorse:
            return "morse(" + std::to_string(value) + "," + std::to_string(morse_dim) + ")";
        case TileKind::Invalid: return "invalid";
    }
    return "invalid";
}

MorseTile::MorseTile(Simplex facet, Simplex removed_opposite, std::optional<Simplex> morse_face,
                     bool critical)
    : facet_(std::move(facet)),
      removed_(std::move(removed_opposite)),
      morse_(std::move(morse_face)),
      critical_(critical) {
    if (facet_.empty()) throw Error(ErrorCode::MalformedInput, "tile facet is empty");
    if (!facet_.contains(removed_))
        return; // left raw, classify() reports Invalid
    const int n = dim();
    if (n == 0) {
        // Vertex tiles: the only face interval is the semi-open one.
        removed_ = facet_;
        morse_.reset();
        critical_ = true;
        return;
    }
    if (removed_.size() == facet_.size()) { // open simplex
        morse_.reset();
        critical_ = true;
        return;
    }
    if (critical_ && !morse_) morse_ = removed_;
    if (morse_ && *morse_ == removed_) critical_ = true;
    if (critical_ && morse_ && *morse_ == removed_ && static_cast<int>(removed_.size()) == n) {
        // Removing the restriction set of an order-n tile leaves the open simplex.
        removed_ = facet_;
        morse_.reset();
    }
}

bool MorseTile::is_closed_simplex() const {
    return removed_.empty() && (!morse_ || morse_->empty());
}

std::optional<std::string> MorseTile::invalid_reason() const {
    if (!facet_.contains(removed_)) return "removed_opposite is not a subset of the facet";
    const int n = dim();
    if (is_open()) {
        if (morse_) return "open simplex carries a Morse face";
        return std::nullopt;
    }
    if (critical_ && !morse_) return "critical flag without Morse face";
    if (!morse_) return std::nullopt;
    if (!facet_.contains(*morse_)) return "Morse face is not a face of the facet";
    if (*morse_ == facet_) return "Morse face equals the facet";
    if (!morse_->contains(removed_)) return "Morse face does not contain the restriction set";
    if (*morse_ == removed_) {
        if (!critical_) return "Morse face equals the restriction set but tile is not critical";
        if (morse_->dim() > n - 2) return "critical index out of range";
        return std::nullopt;
    }
    if (critical_) return "critical flag with Morse face distinct from the restriction set";
    if (morse_->dim() > n - 2) return "Morse face must have codimension at least two";
    return std::nullopt;
}

TileClass MorseTile::classify() const {
    if (invalid_reason()) return {TileKind::Invalid, -1, -1};
    const int n = dim();
    const int k = order();
    if (k == n + 1) return {TileKind::Critical, n, -1};
    if (critical_) return {TileKind::Critical, k, -1};
    if (!morse_) return {TileKind::Basic, k, -1};
    return {TileKind::RegularMorse, k, morse_->dim()};
}

bool MorseTile::contains(const Simplex& face) const {
    if (face.empty() || !facet_.contains(face)) return false;
    if (!face.contains(removed_)) return false;
    if (morse_ && morse_->contains(face)) return false;
    return true;
}

std::vector<Simplex> MorseTile::faces() const {
    std::vector<Simplex> out;
    for (Simplex& s : facet_.nonempty_subsets())
        if (contains(s)) out.push_back(std::move(s));
    return out;
}

RelativeComplex MorseTile::local_target() const {
    std::vector<Simplex> missing;
    for (Vertex v : removed_) missing.push_back(facet_.without(v));
    if (morse_ && !morse_->empty()) missing.push_back(*morse_);
    SimplicialComplex removed =
        missing.empty() ? SimplicialComplex() : SimplicialComplex::from_facets(std::move(missing));
    return RelativeComplex(SimplicialComplex::from_facets({facet_}), std::move(removed));
}

std::string MorseTile::to_string() const {
    std::string s = "tile " + facet_.to_string() + " ; opp ";
    s += removed_.empty() ? "-" : removed_.to_string();
    s += " ; morse ";
    if (morse_ && !critical_ && !morse_->empty())
        s += morse_->to_string();
    else
        s += "-";
    s += " ; critical ";
    s += critical_ ? "1" : "0";
    return s;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long tile_face_count(int n, int k, int j) {
    if (n < 0 || k < 0 || k > n + 1 || j < 0 || j > n)
        throw Error(ErrorCode::InvalidInput, "tile_face_count argument out of range");
    if (j < k - 1) return 0;
    return binomial(n + 1 - k, n - j);
}

long long tile_face_count_critical(int n, int k, int j) {
    if (k > n) throw Error(ErrorCode::InvalidInput, "critical index out of range");
    if (j == k - 1) return 0;
    return tile_face_count(n, k, j);
}

bool same_tile_type(const MorseTile& a, const MorseTile& b) {
    // The closed simplex and the index-zero critical tile carry the same
    // face interval once the empty face is excluded.
    auto canonical = [](const MorseTile& t) {
        if (t.is_closed_simplex()) return TileClass{TileKind::Critical, 0, -1};
        return t.classify();
    };
    return a.dim() == b.dim() && canonical(a) == canonical(b);
}

} // namespace htile
