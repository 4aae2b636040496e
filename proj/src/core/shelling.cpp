#include "shelling.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace htile {

namespace {

constexpr std::size_t kStepCap = 100000;

std::string role_of(const SimplicialComplex& ambient, const Simplex& tau) {
    if (ambient.is_facet(tau)) return "facet";
    for (const Simplex& f : ambient.facets())
        if (f.contains(tau) && f.dim() == tau.dim() + 1) return "ridge";
    return "face";
}

/// Mutable shelling state: a list of relative simplices in shelling order
/// against an evolving target.
struct Driver {
    RelativeComplex target;
    std::vector<RelativeSimplex> tiles;
    std::vector<std::string> notes;
    std::vector<SubdivisionLogEntry> log;

    // Subdivides the global target at tau. `chosen` selects the tile that
    // receives the special numbering (split or reduction); every other
    // affected tile keeps an isomorphic copy.
    void subdivide(const Simplex& tau, std::size_t chosen, bool split, bool reduction) {
        log.push_back({tau, role_of(target.ambient(), tau)});
        Vertex apex = target.ambient().fresh_vertex();
        target = stellar_subdivide_pair_with_apex(target, tau, apex);

        std::vector<RelativeSimplex> next_tiles;
        std::vector<std::string> next_notes;
        for (std::size_t i = 0; i < tiles.size(); ++i) {
            if (!tiles[i].simplex.contains(tau)) {
                next_tiles.push_back(tiles[i]);
                next_notes.push_back(notes[i]);
                continue;
            }
            SubdivisionPlan plan;
            if (i == chosen && reduction)
                plan = plan_reduction(tiles[i], tau);
            else if (i == chosen && split)
                plan = plan_split(tiles[i], tau);
            else
                plan = plan_auto(tiles[i], tau, false);
            std::vector<RelativeSimplex> pieces = subdivide_piece(tiles[i], tau, apex, plan);
            for (std::size_t j = 0; j < pieces.size(); ++j) {
                next_tiles.push_back(std::move(pieces[j]));
                std::string tag = notes[i];
                if (i == chosen)
                    tag += split ? "/split" : "/reduce";
                else if (static_cast<int>(j) + plan.k1 == plan.copy_window_index)
                    tag += "/copy";
                else
                    tag += "/side";
                next_notes.push_back(std::move(tag));
            }
        }
        tiles = std::move(next_tiles);
        notes = std::move(next_notes);
    }

    // Removes every missing face of codimension >= 2 by subdividing, so all
    // tiles become Morse tiles.
    void reduce_extras(ShellMode mode) {
        const bool use_ridges = mode == ShellMode::Ridges;
        for (std::size_t step = 0;; ++step) {
            if (step > kStepCap) throw Error(ErrorCode::Internal, "reduction did not terminate");
            std::size_t chosen = tiles.size();
            if (use_ridges) {
                long long best = -1;
                for (std::size_t i = 0; i < tiles.size(); ++i)
                    if (tiles[i].extras.size() >= 2 && tiles[i].extra_dim_total() > best) {
                        best = tiles[i].extra_dim_total();
                        chosen = i;
                    }
            } else {
                for (std::size_t i = 0; i < tiles.size(); ++i)
                    if (tiles[i].extras.size() >= 2) {
                        chosen = i;
                        break;
                    }
            }
            if (chosen == tiles.size()) return;
            Simplex tau = use_ridges ? reduction_ridge(tiles[chosen]) : tiles[chosen].simplex;
            subdivide(tau, chosen, /*split=*/false, /*reduction=*/true);
        }
    }

    // Lexicographically least present ridge of the tile admitting a
    // reduction vertex.
    static Simplex reduction_ridge(const RelativeSimplex& p) {
        const Simplex& sigma = p.simplex;
        Simplex candidates = p.extras[1].difference(p.extras[0]);
        std::vector<Simplex> ridges;
        for (Vertex v : sigma)
            if (!p.removed_opposite.contains(v)) ridges.push_back(sigma.without(v));
        std::sort(ridges.begin(), ridges.end());
        for (const Simplex& r : ridges)
            if (!candidates.intersect(r).empty()) return r;
        throw Error(ErrorCode::Internal, "no admissible reduction ridge");
    }

    // Turns every regular non-basic Morse tile into basic and critical tiles.
    void convert_to_h(ShellMode mode) {
        const bool use_ridges = mode == ShellMode::Ridges || mode == ShellMode::Mixed;
        for (std::size_t step = 0;; ++step) {
            if (step > kStepCap) throw Error(ErrorCode::Internal, "conversion did not terminate");
            std::size_t chosen = tiles.size();
            for (std::size_t i = 0; i < tiles.size(); ++i) {
                const RelativeSimplex& p = tiles[i];
                if (p.extras.size() == 1 && p.extras[0] != p.removed_opposite) {
                    chosen = i;
                    break;
                }
            }
            if (chosen == tiles.size()) return;
            const RelativeSimplex& p = tiles[chosen];
            Simplex tau;
            if (use_ridges) {
                // Least present ridge containing the Morse face: drop the
                // largest vertex outside it.
                Simplex outside = p.simplex.difference(p.extras[0]);
                tau = p.simplex.without(outside.vertices().back());
            } else {
                tau = p.simplex;
            }
            subdivide(tau, chosen, /*split=*/true, /*reduction=*/false);
        }
    }

    Tiling to_tiling() const {
        Tiling t;
        t.target = target;
        for (const RelativeSimplex& p : tiles) {
            MorseTile tile = p.to_morse_tile();
            if (tile.is_closed_simplex()) // closed simplices are the index-zero critical tiles
                tile = MorseTile(tile.facet(), Simplex(), Simplex(), true);
            t.tiles.push_back(std::move(tile));
        }
        t.notes = notes;
        return t;
    }
};

ShellingResult finish(const Driver& d) {
    ShellingResult r;
    r.complex = d.target;
    r.tiling = d.to_tiling();
    r.log = d.log;
    r.stats = compute_stats(r.tiling, static_cast<long long>(d.log.size()));
    return r;
}

Driver driver_for_pieces(RelativeComplex target, std::vector<RelativeSimplex> pieces) {
    Driver d;
    d.target = std::move(target);
    d.tiles = std::move(pieces);
    for (std::size_t i = 0; i < d.tiles.size(); ++i) d.notes.push_back("p" + std::to_string(i));
    return d;
}

/// Barycentric pipeline for one piece. The piece's interval part is carried
/// through the stellar cascade over all faces of its simplex (using the
/// shared id assignment), then the extras' subdivision is cut out of each
/// chain tile as a Morse face: the cut is the chain prefix whose members lie
/// in the extras' subcomplex.
std::vector<MorseTile> barycentric_piece_tiles(const RelativeSimplex& piece,
                                               const std::map<Simplex, Vertex>& ids,
                                               std::vector<SubdivisionLogEntry>* log) {
    const Simplex& sigma = piece.simplex;
    SimplicialComplex local = SimplicialComplex::from_facets({sigma});
    std::vector<Simplex> ridge_facets;
    for (Vertex v : piece.removed_opposite) ridge_facets.push_back(sigma.without(v));
    SimplicialComplex removed = ridge_facets.empty()
                                    ? SimplicialComplex()
                                    : SimplicialComplex::from_facets(std::move(ridge_facets));

    Tiling t;
    t.target = RelativeComplex(local, removed);
    t.tiles.push_back(RelativeSimplex{sigma, piece.removed_opposite, {}}.to_morse_tile());
    t.notes.push_back("");

    std::vector<Simplex> order;
    for (const Simplex& f : local.faces())
        if (f.dim() >= 1) order.push_back(f);
    std::sort(order.begin(), order.end(), [](const Simplex& a, const Simplex& b) {
        if (a.dim() != b.dim()) return a.dim() > b.dim();
        return a < b;
    });
    for (const Simplex& f : order) {
        if (log) log->push_back({f, role_of(t.target.ambient(), f)});
        Vertex apex = ids.at(f);
        Tiling next;
        next.target = stellar_subdivide_pair_with_apex(t.target, f, apex);
        for (const MorseTile& tile : t.tiles) {
            if (!tile.facet().contains(f)) {
                next.tiles.push_back(tile);
                continue;
            }
            TileRewrite rw = subdivide_tile_with_apex(tile, f, apex, RewriteMode::IsoCopy);
            for (MorseTile& piece_tile : rw.tiles) next.tiles.push_back(std::move(piece_tile));
        }
        next.notes.assign(next.tiles.size(), "");
        t = std::move(next);
    }

    if (piece.extras.empty()) return t.tiles;

    SimplicialComplex extras_complex = SimplicialComplex::from_facets(piece.extras);
    std::map<Vertex, Simplex> prov;
    for (const auto& [face, id] : ids) prov[id] = face;

    std::vector<MorseTile> out;
    for (const MorseTile& tile : t.tiles) {
        // Chain prefix lying inside the extras.
        std::vector<Vertex> by_dim = tile.facet().vertices();
        std::sort(by_dim.begin(), by_dim.end(), [&prov](Vertex a, Vertex b) {
            return prov.at(a).dim() < prov.at(b).dim();
        });
        std::vector<Vertex> cut;
        for (Vertex w : by_dim) {
            if (!extras_complex.is_face(prov.at(w))) break;
            cut.push_back(w);
        }
        if (cut.empty()) {
            out.push_back(tile);
            continue;
        }
        Simplex morse{std::vector<Vertex>(cut)};
        if (!morse.contains(tile.removed_opposite())) {
            out.push_back(tile);
            continue;
        }
        out.emplace_back(tile.facet(), tile.removed_opposite(), morse,
                         morse == tile.removed_opposite());
    }
    return out;
}

ShellingResult shell_barycentric(const RelativeComplex& s, std::vector<RelativeSimplex> pieces) {
    auto ids = barycentric_vertex_ids(s.ambient());
    ShellingResult r;
    r.complex = barycentric_subdivide_pair(s);

    // Global log: every face of positive dimension once, high to low.
    std::vector<Simplex> order;
    for (const Simplex& f : s.ambient().faces())
        if (f.dim() >= 1) order.push_back(f);
    std::sort(order.begin(), order.end(), [](const Simplex& a, const Simplex& b) {
        if (a.dim() != b.dim()) return a.dim() > b.dim();
        return a < b;
    });
    for (const Simplex& f : order) r.log.push_back({f, role_of(s.ambient(), f)});

    Tiling t;
    t.target = r.complex;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (MorseTile& tile : barycentric_piece_tiles(pieces[i], ids, nullptr)) {
            if (tile.is_closed_simplex())
                tile = MorseTile(tile.facet(), Simplex(), Simplex(), true);
            t.tiles.push_back(std::move(tile));
            t.notes.push_back("p" + std::to_string(i));
        }
    }
    r.tiling = std::move(t);
    r.stats = compute_stats(r.tiling, static_cast<long long>(r.log.size()));
    return r;
}

} // namespace

ShellMode parse_shell_mode(const std::string& name) {
    if (name == "barycentric") return ShellMode::Barycentric;
    if (name == "facets") return ShellMode::Facets;
    if (name == "ridges") return ShellMode::Ridges;
    if (name == "mixed") return ShellMode::Mixed;
    throw Error(ErrorCode::InvalidInput, "unknown mode: " + name);
}

std::string shell_mode_name(ShellMode mode) {
    switch (mode) {
        case ShellMode::Barycentric: return "barycentric";
        case ShellMode::Facets: return "facets";
        case ShellMode::Ridges: return "ridges";
        case ShellMode::Mixed: return "mixed";
    }
    return "?";
}

std::string ShellingResult::stats_to_string() const {
    auto vec = [](const std::vector<long long>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(v[i]);
        }
        return s + "]";
    };
    std::string s;
    s += "num_subdivisions = " + std::to_string(stats.num_subdivisions) + "\n";
    s += "h = " + vec(stats.h) + "\n";
    s += "c = " + vec(stats.c) + "\n";
    s += "euler = " + std::to_string(stats.euler) + "\n";
    return s;
}

std::string ShellingResult::log_to_string() const {
    std::string s;
    for (const SubdivisionLogEntry& e : log)
        s += "subdivide " + e.role + " " + e.face.to_string() + "\n";
    return s;
}

ShellingStats compute_stats(const Tiling& t, long long num_subdivisions) {
    ShellingStats stats;
    stats.num_subdivisions = num_subdivisions;
    const int n = t.target.dim();
    stats.h.assign(static_cast<std::size_t>(n + 2), 0);
    stats.c.assign(static_cast<std::size_t>(n + 1), 0);
    for (const MorseTile& tile : t.tiles) {
        TileClass cls = tile.classify();
        if (cls.kind == TileKind::Invalid)
            throw Error(ErrorCode::InvalidInput, "invalid tile in tiling");
        stats.h[static_cast<std::size_t>(tile.order())]++;
        if (cls.kind == TileKind::Critical)
            stats.c[static_cast<std::size_t>(cls.value)]++;
        else if (tile.is_closed_simplex()) // closed simplices carry index zero
            stats.c[0]++;
    }
    stats.euler = t.target.euler();
    return stats;
}

std::vector<RelativeSimplex> facet_filtration(const RelativeComplex& s) {
    std::vector<Simplex> facets = s.ambient().facets();
    std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) {
        if (a.dim() != b.dim()) return a.dim() > b.dim();
        return a < b;
    });
    std::vector<RelativeSimplex> pieces;
    for (std::size_t j = 0; j < facets.size(); ++j) {
        std::vector<Simplex> missing;
        for (std::size_t i = 0; i < j; ++i) {
            Simplex g = facets[i].intersect(facets[j]);
            if (!g.empty()) missing.push_back(std::move(g));
        }
        for (const Simplex& f : s.removed().facets()) {
            Simplex g = f.intersect(facets[j]);
            if (!g.empty()) missing.push_back(std::move(g));
        }
        pieces.push_back(RelativeSimplex::from_missing(facets[j], std::move(missing)));
    }
    return pieces;
}

std::vector<RelativeSimplex> pseudomanifold_filtration(const SimplicialComplex& k) {
    StructuralPredicates p = structural_predicates(k);
    if (!p.is_pure || !p.is_strongly_connected || !p.is_closed_pseudomanifold)
        throw Error(ErrorCode::NotPseudomanifold,
                    "input is not a closed strongly connected pseudo-manifold");

    std::vector<Simplex> chosen{k.facets().front()};
    std::vector<bool> used(k.facets().size(), false);
    used[0] = true;
    while (chosen.size() < k.facets().size()) {
        // Least ridge of the current union lying in exactly one chosen facet.
        std::map<Simplex, int> count;
        for (const Simplex& f : chosen)
            for (const Simplex& r : f.ridges()) count[r]++;
        bool grown = false;
        for (const auto& [ridge, c] : count) {
            if (c != 1) continue;
            for (std::size_t i = 0; i < k.facets().size(); ++i) {
                if (used[i] || !k.facets()[i].contains(ridge)) continue;
                chosen.push_back(k.facets()[i]);
                used[i] = true;
                grown = true;
                break;
            }
            if (grown) break;
        }
        if (!grown) throw Error(ErrorCode::Internal, "pseudomanifold filtration stalled");
    }

    std::vector<RelativeSimplex> pieces;
    for (std::size_t j = 0; j < chosen.size(); ++j) {
        std::vector<Simplex> missing;
        for (std::size_t i = 0; i < j; ++i) {
            Simplex g = chosen[i].intersect(chosen[j]);
            if (!g.empty()) missing.push_back(std::move(g));
        }
        pieces.push_back(RelativeSimplex::from_missing(chosen[j], std::move(missing)));
    }
    return pieces;
}

ShellingResult morse_shell_barycentric(const RelativeSimplex& p) {
    SimplicialComplex ambient = SimplicialComplex::from_facets({p.simplex});
    RelativeComplex target(ambient, p.missing_complex());
    return shell_barycentric(target, {p});
}

ShellingResult h_tile_regular_morse(const MorseTile& t, ShellMode mode) {
    if (mode == ShellMode::Barycentric)
        throw Error(ErrorCode::InvalidInput, "conversion uses stellar modes");
    TileClass cls = t.classify();
    if (cls.kind != TileKind::RegularMorse)
        throw Error(ErrorCode::NothingToDo, "tile is already basic or critical");
    Driver d = driver_for_pieces(t.local_target(), {RelativeSimplex::from_morse_tile(t)});
    d.convert_to_h(mode);
    return finish(d);
}

ShellingResult shell_relative_simplex(const RelativeSimplex& p, ShellMode mode) {
    if (mode == ShellMode::Barycentric) return morse_shell_barycentric(p);
    SimplicialComplex ambient = SimplicialComplex::from_facets({p.simplex});
    Driver d = driver_for_pieces(RelativeComplex(ambient, p.missing_complex()), {p});
    d.reduce_extras(mode == ShellMode::Mixed ? ShellMode::Facets : mode);
    d.convert_to_h(mode);
    return finish(d);
}

ShellingResult shell_complex(const RelativeComplex& s, ShellMode mode) {
    if (s.ambient().empty()) throw Error(ErrorCode::InvalidInput, "empty complex");
    std::vector<RelativeSimplex> pieces = facet_filtration(s);
    if (mode == ShellMode::Barycentric) return shell_barycentric(s, std::move(pieces));
    Driver d = driver_for_pieces(s, std::move(pieces));
    d.reduce_extras(mode == ShellMode::Mixed ? ShellMode::Facets : mode);
    d.convert_to_h(mode);
    return finish(d);
}

ShellingResult shell_pseudomanifold(const SimplicialComplex& k, ShellMode mode) {
    std::vector<RelativeSimplex> pieces = pseudomanifold_filtration(k);
    RelativeComplex target{k};
    if (mode == ShellMode::Barycentric) return shell_barycentric(target, std::move(pieces));
    Driver d = driver_for_pieces(std::move(target), std::move(pieces));
    d.reduce_extras(mode == ShellMode::Mixed ? ShellMode::Facets : mode);
    d.convert_to_h(mode);
    return finish(d);
}

SimplicialComplex replay_log(const SimplicialComplex& start,
                             const std::vector<SubdivisionLogEntry>& log) {
    SimplicialComplex cur = start;
    for (const SubdivisionLogEntry& e : log) cur = stellar_subdivide(cur, e.face).complex;
    return cur;
}

} // namespace htile
