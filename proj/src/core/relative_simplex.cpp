#include "relative_simplex.hpp"

#include <algorithm>

#include "error.hpp"

namespace htile {

RelativeSimplex RelativeSimplex::from_missing(Simplex simplex, std::vector<Simplex> missing) {
    RelativeSimplex p;
    p.simplex = std::move(simplex);
    if (p.simplex.empty()) throw Error(ErrorCode::MalformedInput, "relative simplex is empty");

    // Keep only maximal missing faces.
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    std::vector<Simplex> maximal;
    for (std::size_t i = 0; i < missing.size(); ++i) {
        if (missing[i].empty()) continue;
        if (!p.simplex.contains(missing[i]) || missing[i] == p.simplex)
            throw Error(ErrorCode::MalformedInput,
                        "missing face is not a proper face: " + missing[i].to_string());
        bool dominated = false;
        for (std::size_t j = 0; j < missing.size() && !dominated; ++j)
            if (i != j && missing[j].contains(missing[i]) && missing[j] != missing[i])
                dominated = true;
        if (!dominated) maximal.push_back(missing[i]);
    }

    std::vector<Vertex> removed;
    std::vector<Simplex> lower;
    for (const Simplex& m : maximal) {
        if (m.dim() == p.simplex.dim() - 1)
            removed.push_back(p.simplex.difference(m).vertices()[0]);
        else
            lower.push_back(m);
    }
    p.removed_opposite = Simplex(std::move(removed));
    for (const Simplex& m : lower)
        if (m.contains(p.removed_opposite)) p.extras.push_back(m);
    std::sort(p.extras.begin(), p.extras.end());
    return p;
}

RelativeSimplex RelativeSimplex::from_morse_tile(const MorseTile& t) {
    if (!t.valid()) throw Error(ErrorCode::InvalidInput, "invalid tile");
    RelativeSimplex p;
    p.simplex = t.facet();
    p.removed_opposite = t.removed_opposite();
    if (t.morse_face() && !t.morse_face()->empty()) p.extras.push_back(*t.morse_face());
    return p;
}

MorseTile RelativeSimplex::to_morse_tile() const {
    if (!is_morse())
        throw Error(ErrorCode::Internal, "relative simplex with several extras is not a tile");
    if (extras.empty()) return MorseTile(simplex, removed_opposite);
    return MorseTile(simplex, removed_opposite, extras[0], extras[0] == removed_opposite);
}

long long RelativeSimplex::extra_dim_total() const {
    long long t = 0;
    for (const Simplex& m : extras) t += m.dim();
    return t;
}

bool RelativeSimplex::contains(const Simplex& face) const {
    if (face.empty() || !simplex.contains(face)) return false;
    if (!face.contains(removed_opposite)) return false;
    for (const Simplex& m : extras)
        if (m.contains(face)) return false;
    return true;
}

std::vector<Simplex> RelativeSimplex::faces() const {
    std::vector<Simplex> out;
    for (Simplex& s : simplex.nonempty_subsets())
        if (contains(s)) out.push_back(std::move(s));
    return out;
}

SimplicialComplex RelativeSimplex::missing_complex() const {
    std::vector<Simplex> facets;
    for (Vertex v : removed_opposite) facets.push_back(simplex.without(v));
    for (const Simplex& m : extras) facets.push_back(m);
    if (facets.empty()) return SimplicialComplex();
    return SimplicialComplex::from_facets(std::move(facets));
}

std::string RelativeSimplex::to_string() const {
    std::string s = "rel " + simplex.to_string() + " ; opp ";
    s += removed_opposite.empty() ? "-" : removed_opposite.to_string();
    for (const Simplex& m : extras) s += " ; miss " + m.to_string();
    return s;
}

namespace {

void append_ascending(std::vector<Vertex>& order, const Simplex& group) {
    for (Vertex v : group) order.push_back(v);
}

SubdivisionPlan make_plan(const RelativeSimplex& p, const Simplex& tau,
                          const std::vector<Vertex>& window_group) {
    // window_group lists tau's vertices in their final index order; the
    // removed-opposite vertices outside tau come first, then tau's window,
    // then the rest.
    const Simplex& sigma = p.simplex;
    const Simplex& r = p.removed_opposite;
    SubdivisionPlan plan;
    Simplex r_out = r.difference(tau);
    append_ascending(plan.order, r_out);
    plan.k1 = static_cast<int>(r_out.size());
    for (Vertex v : window_group) plan.order.push_back(v);
    plan.k2 = plan.k1 + static_cast<int>(window_group.size()) - 1;
    plan.kr = static_cast<int>(r.size());
    Simplex rest = sigma.difference(r.unite(tau));
    append_ascending(plan.order, rest);
    if (static_cast<int>(plan.order.size()) != static_cast<int>(sigma.size()))
        throw Error(ErrorCode::Internal, "inconsistent subdivision numbering");
    plan.copy_window_index = plan.k1 < plan.kr ? plan.kr - 1 : plan.kr;
    return plan;
}

void check_tau(const RelativeSimplex& p, const Simplex& tau) {
    if (!p.simplex.contains(tau) || tau.empty())
        throw Error(ErrorCode::UnknownFace, "tau is not a face of the simplex");
    if (tau.dim() < 1)
        throw Error(ErrorCode::DegenerateSubdivision,
                    "stellar subdivision requires a face of positive dimension");
}

} // namespace

SubdivisionPlan plan_default(const RelativeSimplex& p, const Simplex& tau) {
    check_tau(p, tau);
    std::vector<Vertex> window;
    append_ascending(window, tau.intersect(p.removed_opposite));
    append_ascending(window, tau.difference(p.removed_opposite));
    return make_plan(p, tau, window);
}

SubdivisionPlan plan_iso(const RelativeSimplex& p, const Simplex& tau) {
    check_tau(p, tau);
    if (p.extras.size() != 1)
        throw Error(ErrorCode::Internal, "iso numbering requires a single Morse face");
    const Simplex& mu = p.extras[0];
    if (mu.contains(tau)) throw Error(ErrorCode::Internal, "tau lies inside the Morse face");
    // Window index kr must carry a vertex of tau outside mu so that the
    // Morse face survives in exactly one cone.
    Simplex candidates = tau.difference(mu);
    Vertex pin = candidates.vertices()[0];
    std::vector<Vertex> window;
    append_ascending(window, tau.intersect(p.removed_opposite));
    window.push_back(pin);
    append_ascending(window, tau.difference(p.removed_opposite).without(pin));
    SubdivisionPlan plan = make_plan(p, tau, window);
    plan.copy_window_index = plan.kr;
    return plan;
}

SubdivisionPlan plan_split(const RelativeSimplex& p, const Simplex& tau) {
    check_tau(p, tau);
    if (p.extras.size() != 1)
        throw Error(ErrorCode::InvalidInput, "split requires a single Morse face");
    const Simplex& mu = p.extras[0];
    if (mu == p.removed_opposite || mu.empty())
        throw Error(ErrorCode::InvalidInput, "split requires a regular Morse tile");
    if (!tau.contains(mu) || tau == mu)
        throw Error(ErrorCode::InvalidInput, "split requires the Morse face strictly inside tau");
    // The Morse face occupies the lowest window indices.
    std::vector<Vertex> window;
    append_ascending(window, p.removed_opposite); // inside mu, hence inside tau
    append_ascending(window, mu.difference(p.removed_opposite));
    append_ascending(window, tau.difference(mu));
    SubdivisionPlan plan = make_plan(p, tau, window);
    plan.copy_window_index = -1;
    return plan;
}

SubdivisionPlan plan_reduction(const RelativeSimplex& p, const Simplex& tau) {
    check_tau(p, tau);
    if (p.extras.size() < 2)
        throw Error(ErrorCode::Internal, "reduction requires at least two extras");
    const Simplex& first = p.extras[0];
    const Simplex& second = p.extras[1];
    Simplex candidates = second.difference(first).intersect(tau);
    if (candidates.empty())
        throw Error(ErrorCode::Internal, "no admissible reduction vertex inside tau");
    Vertex pin = candidates.vertices()[0];
    std::vector<Vertex> window;
    append_ascending(window, tau.intersect(p.removed_opposite));
    window.push_back(pin);
    append_ascending(window, tau.difference(p.removed_opposite).without(pin));
    SubdivisionPlan plan = make_plan(p, tau, window);
    plan.copy_window_index = -1;
    return plan;
}

SubdivisionPlan plan_auto(const RelativeSimplex& p, const Simplex& tau, bool want_split) {
    if (p.extras.size() >= 2) return plan_default(p, tau);
    if (p.extras.size() == 1) {
        const Simplex& mu = p.extras[0];
        if (mu.contains(tau)) return plan_default(p, tau);
        if (want_split && mu != p.removed_opposite && tau.contains(mu))
            return plan_split(p, tau);
        return plan_iso(p, tau);
    }
    if (want_split) throw Error(ErrorCode::InvalidInput, "split requires a regular Morse tile");
    return plan_default(p, tau);
}

std::vector<RelativeSimplex> subdivide_piece(const RelativeSimplex& p, const Simplex& tau,
                                             Vertex apex, const SubdivisionPlan& plan) {
    const Simplex& sigma = p.simplex;
    SimplicialComplex missing = p.missing_complex();
    if (missing.is_face(tau))
        missing = stellar_subdivide_with_apex(missing, tau, apex).complex;

    std::vector<RelativeSimplex> out;
    for (int i = plan.k1; i <= plan.k2; ++i) {
        Simplex cone = sigma.without(plan.order[static_cast<std::size_t>(i)]).with(apex);
        std::vector<Simplex> miss;
        for (int j = plan.k1; j < i; ++j)
            miss.push_back(cone.without(plan.order[static_cast<std::size_t>(j)]));
        for (const Simplex& f : missing.facets()) {
            Simplex g = f.intersect(cone);
            if (!g.empty()) miss.push_back(std::move(g));
        }
        out.push_back(RelativeSimplex::from_missing(std::move(cone), std::move(miss)));
    }
    return out;
}

} // namespace htile
