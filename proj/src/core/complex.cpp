#include "complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "error.hpp"

namespace htile {

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets,
                                                 std::map<Vertex, Simplex> provenance) {
    for (const Simplex& f : facets)
        if (f.empty())
            throw Error(ErrorCode::MalformedInput, "empty facet");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // Absorb facets that are faces of other facets.
    std::vector<Simplex> maximal;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool absorbed = false;
        for (std::size_t j = 0; j < facets.size() && !absorbed; ++j)
            if (i != j && facets[j].contains(facets[i]) && facets[j] != facets[i])
                absorbed = true;
        if (!absorbed) maximal.push_back(facets[i]);
    }
    SimplicialComplex k;
    k.facets_ = std::move(maximal);
    k.provenance_ = std::move(provenance);
    return k;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const Simplex& f : facets_) d = std::max(d, f.dim());
    return d;
}

bool SimplicialComplex::is_face(const Simplex& f) const {
    if (f.empty()) return false;
    for (const Simplex& g : facets_)
        if (g.contains(f)) return true;
    return false;
}

bool SimplicialComplex::is_facet(const Simplex& f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
}

std::set<Simplex> SimplicialComplex::faces() const {
    std::set<Simplex> out;
    for (const Simplex& f : facets_)
        for (Simplex& s : f.nonempty_subsets()) out.insert(std::move(s));
    return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f(static_cast<std::size_t>(dim() + 1), 0);
    for (const Simplex& s : faces()) f[static_cast<std::size_t>(s.dim())]++;
    return f;
}

long long SimplicialComplex::euler() const {
    long long chi = 0;
    int sign = 1;
    for (long long fj : f_vector()) {
        chi += sign * fj;
        sign = -sign;
    }
    return chi;
}

Vertex SimplicialComplex::max_vertex() const {
    Vertex m = -1;
    for (const Simplex& f : facets_)
        if (!f.empty()) m = std::max(m, f.vertices().back());
    for (const auto& [v, face] : provenance_) m = std::max(m, v);
    return m;
}

Vertex SimplicialComplex::fresh_vertex() const { return max_vertex() + 1; }

std::string SimplicialComplex::to_string() const {
    std::string s;
    for (const Simplex& f : facets_) {
        s += "facet ";
        s += f.to_string();
        s += '\n';
    }
    return s;
}

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facet_lists) {
    std::vector<Simplex> facets;
    facets.reserve(facet_lists.size());
    for (const auto& list : facet_lists) {
        if (list.empty())
            throw Error(ErrorCode::MalformedInput, "empty facet list");
        facets.emplace_back(list);
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

StructuralPredicates structural_predicates(const SimplicialComplex& k) {
    StructuralPredicates p;
    if (k.empty()) return p;

    const auto& facets = k.facets();
    const int d = k.dim();
    p.is_pure = std::all_of(facets.begin(), facets.end(),
                            [d](const Simplex& f) { return f.dim() == d; });

    if (p.is_pure) {
        // Facet adjacency through shared ridges.
        const std::size_t n = facets.size();
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j)
                if (!seen[j] && facets[i].intersect(facets[j]).dim() == d - 1) {
                    seen[j] = true;
                    stack.push_back(j);
                }
        }
        p.is_strongly_connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });

        std::map<Simplex, int> ridge_count;
        for (const Simplex& f : facets)
            for (const Simplex& r : f.ridges()) ridge_count[r]++;
        p.is_closed_pseudomanifold =
            std::all_of(ridge_count.begin(), ridge_count.end(),
                        [](const auto& kv) { return kv.second == 2; });
    }
    return p;
}

SimplicialComplex make_simplex(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidInput, "simplex dimension must be >= 0");
    std::vector<Vertex> v(static_cast<std::size_t>(n + 1));
    std::iota(v.begin(), v.end(), 0);
    return SimplicialComplex::from_facets({Simplex(std::move(v))});
}

SimplicialComplex make_boundary(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "boundary requires n >= 1");
    std::vector<Vertex> v(static_cast<std::size_t>(n + 1));
    std::iota(v.begin(), v.end(), 0);
    return SimplicialComplex::from_facets(Simplex(std::move(v)).ridges());
}

SimplicialComplex make_wedge_two_simplices(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "wedge requires n >= 1");
    std::vector<Vertex> a(static_cast<std::size_t>(n + 1)), b(static_cast<std::size_t>(n + 1));
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), n); // shares vertex n
    return SimplicialComplex::from_facets({Simplex(std::move(a)), Simplex(std::move(b))});
}

SimplicialComplex make_disjoint_simplices(int n, int count) {
    if (n < 0 || count < 1)
        throw Error(ErrorCode::InvalidInput, "disjoint_simplices requires n >= 0, count >= 1");
    std::vector<Simplex> facets;
    for (int c = 0; c < count; ++c) {
        std::vector<Vertex> v(static_cast<std::size_t>(n + 1));
        std::iota(v.begin(), v.end(), c * (n + 1));
        facets.emplace_back(std::move(v));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex make_cone(const SimplicialComplex& base) {
    if (base.empty()) throw Error(ErrorCode::InvalidInput, "cone over the empty complex");
    Vertex apex = base.fresh_vertex();
    std::vector<Simplex> facets;
    for (const Simplex& f : base.facets()) facets.push_back(f.with(apex));
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex make_join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.empty() || b.empty()) throw Error(ErrorCode::InvalidInput, "join with empty complex");
    Vertex shift = a.fresh_vertex();
    std::vector<Simplex> facets;
    for (const Simplex& fa : a.facets())
        for (const Simplex& fb : b.facets()) {
            Simplex g = fa;
            for (Vertex v : fb) g = g.with(v + shift);
            facets.push_back(std::move(g));
        }
    return SimplicialComplex::from_facets(std::move(facets));
}

StellarResult stellar_subdivide_with_apex(const SimplicialComplex& k, const Simplex& tau,
                                          Vertex apex) {
    if (!k.is_face(tau))
        throw Error(ErrorCode::UnknownFace, "stellar subdivision at a non-face: " + tau.to_string());
    if (tau.dim() < 1)
        throw Error(ErrorCode::DegenerateSubdivision,
                    "stellar subdivision requires a face of positive dimension");
    if (apex <= k.max_vertex())
        throw Error(ErrorCode::Internal, "apex id must exceed every existing vertex id");

    std::vector<Simplex> facets;
    for (const Simplex& f : k.facets()) {
        if (!f.contains(tau)) {
            facets.push_back(f);
            continue;
        }
        for (Vertex v : tau) facets.push_back(f.without(v).with(apex));
    }
    auto provenance = k.provenance();
    provenance[apex] = tau;
    return {SimplicialComplex::from_facets(std::move(facets), std::move(provenance)), apex};
}

StellarResult stellar_subdivide(const SimplicialComplex& k, const Simplex& tau) {
    return stellar_subdivide_with_apex(k, tau, k.fresh_vertex());
}

std::map<Simplex, Vertex> barycentric_vertex_ids(const SimplicialComplex& k) {
    std::map<Simplex, Vertex> ids;
    for (const Simplex& f : k.faces())
        if (f.dim() == 0) ids[f] = f.vertices()[0];
    // Faces of dimension >= 1 in (dim desc, lex asc) order.
    std::vector<Simplex> rest;
    for (const Simplex& f : k.faces())
        if (f.dim() >= 1) rest.push_back(f);
    std::sort(rest.begin(), rest.end(), [](const Simplex& a, const Simplex& b) {
        if (a.dim() != b.dim()) return a.dim() > b.dim();
        return a < b;
    });
    Vertex next = k.fresh_vertex();
    for (const Simplex& f : rest) ids[f] = next++;
    return ids;
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& k) {
    if (k.empty()) throw Error(ErrorCode::InvalidInput, "barycentric subdivision of empty complex");
    auto ids = barycentric_vertex_ids(k);
    std::map<Vertex, Simplex> provenance = k.provenance();
    for (const auto& [face, id] : ids)
        if (face.dim() >= 1) provenance[id] = face;

    // Facets are maximal chains within each facet: one per vertex permutation.
    std::vector<Simplex> facets;
    for (const Simplex& f : k.facets()) {
        std::vector<Vertex> perm = f.vertices();
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<Vertex> chain_ids;
            Simplex prefix;
            for (Vertex v : perm) {
                prefix = prefix.with(v);
                chain_ids.push_back(ids.at(prefix));
            }
            facets.emplace_back(std::move(chain_ids));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex::from_facets(std::move(facets), std::move(provenance));
}

SimplicialComplex barycentric_cascade(const SimplicialComplex& k) {
    if (k.empty()) throw Error(ErrorCode::InvalidInput, "barycentric subdivision of empty complex");
    auto ids = barycentric_vertex_ids(k);
    std::vector<Simplex> order;
    for (const auto& [face, id] : ids)
        if (face.dim() >= 1) order.push_back(face);
    std::sort(order.begin(), order.end(), [](const Simplex& a, const Simplex& b) {
        if (a.dim() != b.dim()) return a.dim() > b.dim();
        return a < b;
    });
    SimplicialComplex cur = k;
    for (const Simplex& f : order) cur = stellar_subdivide_with_apex(cur, f, ids.at(f)).complex;
    return cur;
}

RelativeComplex::RelativeComplex(SimplicialComplex ambient, SimplicialComplex removed)
    : ambient_(std::move(ambient)), removed_(std::move(removed)) {
    for (const Simplex& f : removed_.facets()) {
        if (!ambient_.is_face(f))
            throw Error(ErrorCode::MalformedInput,
                        "removed facet is not a face of the ambient complex: " + f.to_string());
        if (ambient_.is_facet(f))
            throw Error(ErrorCode::MalformedInput,
                        "removed subcomplex contains an ambient facet: " + f.to_string());
    }
}

bool RelativeComplex::contains(const Simplex& f) const {
    return ambient_.is_face(f) && !removed_.is_face(f);
}

std::set<Simplex> RelativeComplex::faces() const {
    std::set<Simplex> out = ambient_.faces();
    for (const Simplex& f : removed_.faces()) out.erase(f);
    return out;
}

std::vector<long long> RelativeComplex::f_vector() const {
    std::vector<long long> f(static_cast<std::size_t>(dim() + 1), 0);
    for (const Simplex& s : faces()) f[static_cast<std::size_t>(s.dim())]++;
    return f;
}

long long RelativeComplex::euler() const {
    long long chi = 0;
    int sign = 1;
    for (long long fj : f_vector()) {
        chi += sign * fj;
        sign = -sign;
    }
    return chi;
}

RelativeComplex stellar_subdivide_pair_with_apex(const RelativeComplex& s, const Simplex& tau,
                                                 Vertex apex) {
    SimplicialComplex ambient = stellar_subdivide_with_apex(s.ambient(), tau, apex).complex;
    SimplicialComplex removed = s.removed();
    if (removed.is_face(tau))
        removed = stellar_subdivide_with_apex(removed, tau, apex).complex;
    return RelativeComplex(std::move(ambient), std::move(removed));
}

RelativeComplex stellar_subdivide_pair(const RelativeComplex& s, const Simplex& tau) {
    return stellar_subdivide_pair_with_apex(s, tau, s.ambient().fresh_vertex());
}

RelativeComplex barycentric_subdivide_pair(const RelativeComplex& s) {
    SimplicialComplex ambient = barycentric_subdivide(s.ambient());
    SimplicialComplex removed;
    if (!s.removed().empty()) {
        // Reuse the ambient id assignment so shared faces agree.
        auto ids = barycentric_vertex_ids(s.ambient());
        std::vector<Simplex> facets;
        for (const Simplex& f : s.removed().facets()) {
            std::vector<Vertex> perm = f.vertices();
            std::sort(perm.begin(), perm.end());
            do {
                std::vector<Vertex> chain_ids;
                Simplex prefix;
                for (Vertex v : perm) {
                    prefix = prefix.with(v);
                    chain_ids.push_back(ids.at(prefix));
                }
                facets.emplace_back(std::move(chain_ids));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        removed = SimplicialComplex::from_facets(std::move(facets));
    }
    return RelativeComplex(std::move(ambient), std::move(removed));
}

} // namespace htile
