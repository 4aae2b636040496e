#include "tiling.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace htile {

namespace {

const char* kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::NotPartition: return "not_partition";
        case ViolationKind::NotClosed: return "not_closed";
        case ViolationKind::NotPrefixClosed: return "not_prefix_closed";
        case ViolationKind::BadTile: return "bad_tile";
    }
    return "?";
}

std::string violation_line(const Violation& v) {
    std::string s = "violation kind=";
    s += kind_name(v.kind);
    s += " face=";
    s += v.witness.empty() ? "-" : v.witness.to_string();
    s += " tile=";
    s += v.tile_index ? std::to_string(*v.tile_index) : std::string("-");
    if (!v.detail.empty()) s += " detail=" + v.detail;
    return s;
}

} // namespace

std::string ValidationReport::to_string(bool verbose) const {
    std::string s = ok ? "ok = true\n" : "ok = false\n";
    std::set<ViolationKind> seen;
    for (const Violation& v : violations) {
        if (!verbose && seen.count(v.kind)) continue;
        seen.insert(v.kind);
        s += violation_line(v);
        s += '\n';
    }
    return s;
}

std::string Tiling::to_string(const std::string& target_ref) const {
    std::string s = "target " + target_ref + "\n";
    for (const MorseTile& t : tiles) {
        s += t.to_string();
        s += '\n';
    }
    return s;
}

ValidationReport validate_tiling(const Tiling& t) {
    ValidationReport report;
    auto add = [&report](ViolationKind kind, Simplex witness, std::optional<std::size_t> idx,
                         std::string detail = {}) {
        report.ok = false;
        report.violations.push_back({kind, std::move(witness), idx, std::move(detail)});
    };

    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        const MorseTile& tile = t.tiles[i];
        if (auto reason = tile.invalid_reason()) {
            add(ViolationKind::BadTile, tile.facet(), i, *reason);
            continue;
        }
        if (!t.target.ambient().is_facet(tile.facet()))
            add(ViolationKind::BadTile, tile.facet(), i, "tile facet is not an ambient facet");
    }
    if (!report.ok) return report;

    // Partition: every target face in exactly one tile.
    std::set<Simplex> target_faces = t.target.faces();
    std::map<Simplex, std::size_t> owner;
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        for (Simplex& f : t.tiles[i].faces()) {
            if (!target_faces.count(f)) {
                add(ViolationKind::NotPartition, f, i, "tile face outside the target");
                continue;
            }
            auto [it, inserted] = owner.emplace(std::move(f), i);
            if (!inserted) add(ViolationKind::NotPartition, it->first, i, "face covered twice");
        }
    }
    for (const Simplex& f : target_faces)
        if (!owner.count(f)) add(ViolationKind::NotPartition, f, std::nullopt, "face uncovered");
    if (!report.ok) return report;

    // Closedness: the union of faces of tiles of dimension >= d is
    // downward-closed within the target, for every d.
    std::set<int> dims;
    for (const MorseTile& tile : t.tiles) dims.insert(tile.dim());
    for (int d : dims) {
        std::set<Simplex> in_union;
        for (const MorseTile& tile : t.tiles)
            if (tile.dim() >= d)
                for (Simplex& f : tile.faces()) in_union.insert(std::move(f));
        for (const Simplex& f : in_union)
            for (const Simplex& sub : f.nonempty_subsets())
                if (!in_union.count(sub) && t.target.contains(sub))
                    add(ViolationKind::NotClosed, sub, std::nullopt,
                        "missing below dimension " + std::to_string(d));
    }
    return report;
}

ValidationReport validate_shelling(const Tiling& t) {
    ValidationReport report = validate_tiling(t);
    if (!report.ok) return report;

    std::set<Simplex> prefix;
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        std::vector<Simplex> added = t.tiles[i].faces();
        for (Simplex& f : added) prefix.insert(std::move(f));
        for (const Simplex& f : t.tiles[i].faces())
            for (const Simplex& sub : f.nonempty_subsets())
                if (!prefix.count(sub) && t.target.contains(sub)) {
                    report.ok = false;
                    report.violations.push_back({ViolationKind::NotPrefixClosed, sub, i,
                                                 "prefix of length " + std::to_string(i + 1)});
                }
        if (!report.ok) return report;
    }
    return report;
}

TileRewrite subdivide_tile_with_apex(const MorseTile& t, const Simplex& tau, Vertex apex,
                                     RewriteMode mode) {
    if (auto reason = t.invalid_reason())
        throw Error(ErrorCode::InvalidInput, "invalid tile: " + *reason);
    RelativeSimplex p = RelativeSimplex::from_morse_tile(t);
    if (mode == RewriteMode::Split) {
        if (p.extras.size() != 1 || p.extras[0] == p.removed_opposite)
            throw Error(ErrorCode::InvalidInput, "split mode requires a regular Morse tile");
        if (!tau.contains(p.extras[0]) || tau == p.extras[0])
            throw Error(ErrorCode::InvalidInput,
                        "split mode requires the Morse face strictly inside tau");
    }
    SubdivisionPlan plan = plan_auto(p, tau, mode == RewriteMode::Split);
    TileRewrite out;
    for (RelativeSimplex& piece : subdivide_piece(p, tau, apex, plan)) {
        MorseTile tile = piece.to_morse_tile();
        if (tile.is_closed_simplex()) // closed simplices are the index-zero critical tiles
            tile = MorseTile(tile.facet(), Simplex(), Simplex(), true);
        out.tiles.push_back(std::move(tile));
    }
    out.copy_index = plan.copy_window_index >= 0 ? plan.copy_window_index - plan.k1 : -1;
    return out;
}

TileRewrite subdivide_tile(const MorseTile& t, const Simplex& tau, RewriteMode mode) {
    return subdivide_tile_with_apex(t, tau, t.facet().vertices().back() + 1, mode);
}

RelativeComplex subdivided_local_target(const MorseTile& t, const Simplex& tau, Vertex apex) {
    return stellar_subdivide_pair_with_apex(t.local_target(), tau, apex);
}

Tiling subdivide_tiling(const Tiling& t, const Simplex& tau,
                        const std::map<std::size_t, RewriteMode>& modes) {
    if (!t.target.ambient().is_face(tau))
        throw Error(ErrorCode::UnknownFace, "tau is not a face of the target");
    if (tau.dim() < 1)
        throw Error(ErrorCode::DegenerateSubdivision,
                    "stellar subdivision requires a face of positive dimension");
    Vertex apex = t.target.ambient().fresh_vertex();
    Tiling out;
    out.target = stellar_subdivide_pair_with_apex(t.target, tau, apex);
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        const MorseTile& tile = t.tiles[i];
        const std::string note = i < t.notes.size() ? t.notes[i] : std::string();
        if (!tile.facet().contains(tau)) {
            out.tiles.push_back(tile);
            out.notes.push_back(note);
            continue;
        }
        auto it = modes.find(i);
        RewriteMode mode = it == modes.end() ? RewriteMode::IsoCopy : it->second;
        TileRewrite rw = subdivide_tile_with_apex(tile, tau, apex, mode);
        for (std::size_t j = 0; j < rw.tiles.size(); ++j) {
            out.tiles.push_back(rw.tiles[j]);
            std::string tag = note.empty() ? std::string() : note + " ";
            tag += static_cast<int>(j) == rw.copy_index ? "copy" : "companion";
            out.notes.push_back(tag);
        }
    }
    return out;
}

} // namespace htile
