// Acceptance suite: one timed pass/fail line per criterion, exit status is
// the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/search.hpp"
#include "core/shelling.hpp"
#include "core/tiling.hpp"
#include "core/vectors.hpp"

using namespace htile;

namespace {

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

Simplex range_simplex(int n) {
    std::vector<Vertex> v(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
    return Simplex(std::move(v));
}

Simplex prefix_simplex(int k) {
    std::vector<Vertex> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i;
    return Simplex(std::move(v));
}

// Aggregated counting-identity audit over every tiling produced while the
// earlier criteria run; reported as criterion 7.
struct IdentityAudit {
    long long h_checked = 0;
    long long euler_checked = 0;
    long long sphere_checked = 0;
    bool ok = true;
    std::string first_failure;

    void fail(const std::string& what) {
        ok = false;
        if (first_failure.empty()) first_failure = what;
    }

    void audit(const Tiling& t, bool sphere_target, const std::string& context) {
        TilingVectors v = compute_vectors(t);
        long long alternating = 0;
        int sign = 1;
        for (long long c : v.c) {
            alternating += sign * c;
            sign = -sign;
        }
        euler_checked++;
        if (alternating != v.euler()) fail("euler identity: " + context);
        if (is_h_tiling(t)) {
            h_checked++;
            if (!check_h_identity(v).ok) fail("h identity: " + context);
            if (sphere_target) {
                sphere_checked++;
                if (!check_palindromic(v, v.euler()).ok) fail("palindromic: " + context);
                if (!check_corollary_identities(v).all_pass()) fail("corollary: " + context);
            }
        }
    }
};

IdentityAudit g_audit;

long long critical_total(const std::vector<long long>& c) {
    long long t = 0;
    for (long long x : c) t += x;
    return t;
}

// ---- criterion 1 ----------------------------------------------------

bool criterion_face_counts(std::string& detail) {
    long long checked = 0;
    for (int n = 0; n <= 8; ++n) {
        Simplex sigma = range_simplex(n);
        for (int k = 0; k <= n + 1; ++k) {
            Simplex r = prefix_simplex(k);
            std::vector<long long> per_dim(static_cast<std::size_t>(n + 1), 0);
            for (const Simplex& f : sigma.nonempty_subsets())
                if (f.contains(r)) per_dim[static_cast<std::size_t>(f.dim())]++;
            for (int j = 0; j <= n; ++j) {
                checked++;
                if (per_dim[static_cast<std::size_t>(j)] != tile_face_count(n, k, j)) {
                    detail = "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             " j=" + std::to_string(j);
                    return false;
                }
            }
        }
    }
    detail = std::to_string(checked) + " entries";
    return true;
}

// ---- criterion 2 ----------------------------------------------------

bool check_iso_census(const MorseTile& tile, const Simplex& tau, const TileRewrite& rw,
                      std::string& detail) {
    TileClass cls = tile.classify();
    const Simplex mu_eff = tile.critical_flag() ? tile.removed_opposite()
                           : tile.morse_face()  ? *tile.morse_face()
                                                : Simplex{};
    const bool case_inside = !tile.is_open() && tile.morse_face() && mu_eff.contains(tau);

    if (rw.copy_index < 0 ||
        !same_tile_type(rw.tiles[static_cast<std::size_t>(rw.copy_index)], tile)) {
        detail = "designated copy does not match the input type";
        return false;
    }
    int same = 0;
    for (std::size_t i = 0; i < rw.tiles.size(); ++i) {
        const MorseTile& out = rw.tiles[i];
        TileClass out_cls = out.classify();
        if (out_cls.kind == TileKind::Invalid) {
            detail = "invalid output tile";
            return false;
        }
        if (same_tile_type(out, tile)) {
            same++;
            continue;
        }
        if (case_inside) {
            if (out_cls.kind != TileKind::RegularMorse) {
                detail = "companion is not a regular Morse tile";
                return false;
            }
        } else {
            bool regular_basic = out_cls.kind == TileKind::Basic && out_cls.value >= 1 &&
                                 out_cls.value <= out.dim();
            if (!regular_basic) {
                detail = "companion is not a regular basic tile";
                return false;
            }
        }
    }
    bool regular_input = cls.kind == TileKind::RegularMorse ||
                         (cls.kind == TileKind::Basic && cls.value >= 1 &&
                          cls.value <= tile.dim());
    if (!regular_input && same != 1) {
        detail = "non-regular input needs a unique copy, found " + std::to_string(same);
        return false;
    }
    return true;
}

bool criterion_rewrite(std::string& detail) {
    long long iso_cases = 0, split_cases = 0;
    for (int n = 1; n <= 5; ++n) {
        Simplex sigma = range_simplex(n);
        auto subsets = sigma.nonempty_subsets();
        std::vector<Simplex> rsets;
        if (n <= 3) { // full sweep at small dimension, canonical orders above
            rsets = subsets;
            rsets.push_back(Simplex{});
        } else {
            for (int k = 0; k <= n + 1; ++k) rsets.push_back(prefix_simplex(k));
        }
        for (const Simplex& r : rsets) {
            std::vector<std::pair<std::optional<Simplex>, bool>> morse_options;
            morse_options.push_back({std::nullopt, false});
            if (static_cast<int>(r.size()) <= n - 1) morse_options.push_back({r, true});
            for (const Simplex& m : subsets)
                if (m.contains(r) && m != r && m.dim() <= n - 2)
                    morse_options.push_back({m, false});
            for (const auto& [mu, crit] : morse_options) {
                if (static_cast<int>(r.size()) == n + 1 && mu) continue;
                MorseTile tile(sigma, r, mu, crit);
                if (!tile.valid()) {
                    detail = "invalid input tile in sweep";
                    return false;
                }
                for (const Simplex& tau : subsets) {
                    if (tau.dim() < 1) continue;
                    Vertex apex = sigma.vertices().back() + 1;
                    auto rw = subdivide_tile(tile, tau);
                    Tiling local{subdivided_local_target(tile, tau, apex), rw.tiles, {}};
                    if (!validate_tiling(local).ok || !validate_shelling(local).ok) {
                        detail = "rewrite not a shelling: n=" + std::to_string(n) + " tile=" +
                                 tile.to_string() + " tau=" + tau.to_string();
                        return false;
                    }
                    if (!check_iso_census(tile, tau, rw, detail)) return false;
                    g_audit.audit(local, false, "criterion 2 iso");
                    iso_cases++;

                    bool split_ok = mu && !crit && !mu->empty() && tau.contains(*mu) &&
                                    tau != *mu;
                    if (!split_ok) continue;
                    auto sp = subdivide_tile(tile, tau, RewriteMode::Split);
                    Tiling split_local{subdivided_local_target(tile, tau, apex), sp.tiles, {}};
                    if (!validate_tiling(split_local).ok || !validate_shelling(split_local).ok) {
                        detail = "split rewrite not a shelling";
                        return false;
                    }
                    int k = static_cast<int>(r.size()), l = mu->dim();
                    std::vector<int> crit_idx;
                    int morse_count = 0;
                    for (const MorseTile& out : sp.tiles) {
                        TileClass c = out.classify();
                        if (c.kind == TileKind::Critical || out.is_closed_simplex())
                            crit_idx.push_back(c.kind == TileKind::Critical ? c.value : 0);
                        if (c.kind == TileKind::RegularMorse) {
                            morse_count++;
                            if (c.morse_dim != l - 1 || c.value < k || c.value > l - 1) {
                                detail = "split companion out of range";
                                return false;
                            }
                        }
                    }
                    std::sort(crit_idx.begin(), crit_idx.end());
                    if (crit_idx != std::vector<int>{l, l + 1} || morse_count != l - k) {
                        detail = "split census wrong at n=" + std::to_string(n) +
                                 " k=" + std::to_string(k) + " l=" + std::to_string(l);
                        return false;
                    }
                    g_audit.audit(split_local, false, "criterion 2 split");
                    split_cases++;
                }
            }
        }
    }
    detail = std::to_string(iso_cases) + " iso + " + std::to_string(split_cases) + " split cases";
    return true;
}

// ---- criterion 3 ----------------------------------------------------

bool criterion_conversion_counts(std::string& detail) {
    long long cases = 0;
    for (int n = 2; n <= 5; ++n) {
        Simplex sigma = range_simplex(n);
        for (int k = 0; k <= n - 2; ++k)
            for (int l = k; l <= n - 2; ++l) {
                std::vector<Vertex> mv;
                for (int i = 0; i <= l; ++i) mv.push_back(i);
                MorseTile tile(sigma, prefix_simplex(k), Simplex(mv), false);
                for (ShellMode mode :
                     {ShellMode::Facets, ShellMode::Ridges, ShellMode::Mixed}) {
                    auto r = h_tile_regular_morse(tile, mode);
                    if (!validate_shelling(r.tiling).ok) {
                        detail = "conversion is not a shelling";
                        return false;
                    }
                    if (r.stats.num_subdivisions != (1LL << (l - k))) {
                        detail = "subdivision count wrong at k=" + std::to_string(k) +
                                 " l=" + std::to_string(l);
                        return false;
                    }
                    if (critical_total(r.stats.c) != (1LL << (l + 1 - k)) ||
                        r.stats.c[static_cast<std::size_t>(k)] != 1 ||
                        r.stats.c[static_cast<std::size_t>(l + 1)] != 1) {
                        detail = "critical census wrong";
                        return false;
                    }
                    for (int j = 0; j <= n; ++j)
                        if (r.stats.c[static_cast<std::size_t>(j)] && (j < k || j > l + 1)) {
                            detail = "critical index out of range";
                            return false;
                        }
                    g_audit.audit(r.tiling, false, "criterion 3");
                    cases++;
                }
            }
    }
    // The one-ridge one-edge instance: critical pair {1,2}, basic orders {1,3}.
    MorseTile instance(Simplex{0, 1, 2, 3}, Simplex{0}, Simplex{0, 1}, false);
    auto r = h_tile_regular_morse(instance, ShellMode::Facets);
    std::multiset<std::string> classes;
    for (const MorseTile& t : r.tiling.tiles) classes.insert(t.classify().to_string());
    std::multiset<std::string> expected{"basic(1)", "critical(1)", "critical(2)", "basic(3)"};
    if (r.stats.num_subdivisions != 1 || classes != expected) {
        detail = "the dimension-three instance census is wrong";
        return false;
    }
    detail = std::to_string(cases) + " (k,l,mode) cases";
    return true;
}

// ---- criterion 4 ----------------------------------------------------

bool criterion_barycentric(std::string& detail) {
    long long cases = 0;
    for (int n = 1; n <= 4; ++n) {
        Simplex sigma = range_simplex(n);
        auto subsets = sigma.nonempty_subsets();
        for (int k = 0; k <= n + 1; ++k) {
            std::vector<Simplex> base_missing;
            for (int i = 0; i < k; ++i) base_missing.push_back(sigma.without(i));
            std::vector<std::optional<Simplex>> extras{std::nullopt};
            for (const Simplex& m : subsets)
                if (m != sigma) extras.push_back(m);
            for (const auto& extra : extras) {
                auto missing = base_missing;
                if (extra) missing.push_back(*extra);
                RelativeSimplex p = RelativeSimplex::from_missing(sigma, missing);
                auto r = morse_shell_barycentric(p);
                if (!validate_tiling(r.tiling).ok || !validate_shelling(r.tiling).ok) {
                    detail = "barycentric shelling invalid at n=" + std::to_string(n) +
                             " k=" + std::to_string(k);
                    return false;
                }
                int ridges_removed = p.order();
                long long h0 = r.stats.h[0];
                long long top = r.stats.h[static_cast<std::size_t>(n + 1)];
                bool ord0_ok = ridges_removed == 0 ? h0 == 1 : h0 == 0;
                bool open_ok = ridges_removed == n + 1 ? top == 1 : top == 0;
                if (!ord0_ok || !open_ok) {
                    detail = "order-zero/open uniqueness clause failed";
                    return false;
                }
                g_audit.audit(r.tiling, false, "criterion 4");
                cases++;
            }
        }
    }
    detail = std::to_string(cases) + " relative simplices";
    return true;
}

// ---- criterion 5 ----------------------------------------------------

bool criterion_shell_complex(std::string& detail) {
    std::vector<std::pair<std::string, RelativeComplex>> inputs;
    for (int n = 1; n <= 4; ++n)
        inputs.push_back({"boundary(" + std::to_string(n) + ")",
                          RelativeComplex{make_boundary(n)}});
    inputs.push_back({"wedge_two_simplices(2)", RelativeComplex{make_wedge_two_simplices(2)}});
    inputs.push_back({"disjoint_simplices(2,3)", RelativeComplex{make_disjoint_simplices(2, 3)}});
    inputs.push_back({"cone(boundary(3))", RelativeComplex{make_cone(make_boundary(3))}});
    inputs.push_back({"(simplex(3), boundary(3))",
                      RelativeComplex(make_simplex(3), make_boundary(3))});

    long long runs = 0;
    for (const auto& [name, s] : inputs) {
        bool sphere = name.rfind("boundary(", 0) == 0;
        for (ShellMode mode : {ShellMode::Barycentric, ShellMode::Facets, ShellMode::Ridges,
                               ShellMode::Mixed}) {
            auto r = shell_complex(s, mode);
            if (!validate_tiling(r.tiling).ok || !validate_shelling(r.tiling).ok) {
                detail = name + " " + shell_mode_name(mode) + " is not a shelling";
                return false;
            }
            if (mode != ShellMode::Barycentric && !is_h_tiling(r.tiling)) {
                detail = name + " " + shell_mode_name(mode) + " is not basic+critical";
                return false;
            }
            long long alternating = 0;
            int sign = 1;
            for (long long c : r.stats.c) {
                alternating += sign * c;
                sign = -sign;
            }
            if (alternating != s.euler()) {
                detail = name + " " + shell_mode_name(mode) + " fails the Euler identity";
                return false;
            }
            g_audit.audit(r.tiling, sphere, "criterion 5 " + name);
            runs++;
        }
    }
    detail = std::to_string(runs) + " input/mode runs";
    return true;
}

// ---- criterion 6 ----------------------------------------------------

bool criterion_pseudomanifold(std::string& detail) {
    for (int n = 2; n <= 4; ++n) {
        for (ShellMode mode : {ShellMode::Barycentric, ShellMode::Facets, ShellMode::Ridges,
                               ShellMode::Mixed}) {
            auto r = shell_pseudomanifold(make_boundary(n), mode);
            if (!validate_shelling(r.tiling).ok) {
                detail = "not a shelling at n=" + std::to_string(n);
                return false;
            }
            int closed = 0;
            for (const MorseTile& t : r.tiling.tiles)
                if (t.is_closed_simplex()) closed++;
            long long open_count = r.stats.h[static_cast<std::size_t>(n)];
            if (r.stats.h[0] != 1 || closed != 1 || open_count < 1) {
                detail = "census failed at n=" + std::to_string(n) + " mode " +
                         shell_mode_name(mode);
                return false;
            }
            g_audit.audit(r.tiling, true, "criterion 6");
        }
    }
    detail = "boundary(2..4), four modes each";
    return true;
}

// ---- criterion 7 ----------------------------------------------------

bool criterion_identities(std::string& detail) {
    // Pinned values for the classical shelling.
    auto r = shell_pseudomanifold(make_boundary(3), ShellMode::Facets);
    TilingVectors v = compute_vectors(r.tiling);
    auto id = check_h_identity(v);
    IntPolynomial expected({1, 4, 6, 4});
    if (v.h != std::vector<long long>{1, 1, 1, 1} || v.c != std::vector<long long>{1, 0, 1} ||
        !id.ok || id.lhs != expected || id.rhs != expected) {
        detail = "pinned boundary(3) values are wrong";
        return false;
    }
    if (!g_audit.ok) {
        detail = g_audit.first_failure;
        return false;
    }
    detail = std::to_string(g_audit.h_checked) + " h-identity, " +
             std::to_string(g_audit.euler_checked) + " Euler, " +
             std::to_string(g_audit.sphere_checked) + " sphere checks";
    return true;
}

// ---- criterion 8 ----------------------------------------------------

bool criterion_oracle(std::string& detail) {
    RelativeComplex b2{make_boundary(2)};
    auto all = enumerate_h_tilings(b2, std::size_t(-1));
    int critical_free = 0;
    for (const Tiling& t : all) {
        long long c = critical_total(compute_stats(t, 0).c);
        if (c == 0) {
            critical_free++;
            if (tiling_is_shellable(t)) {
                detail = "a critical-free tiling of the circle claims to be shellable";
                return false;
            }
        }
    }
    if (critical_free != 2) {
        detail = "expected 2 critical-free tilings, found " + std::to_string(critical_free);
        return false;
    }
    auto mu = min_critical_tiles(b2, true);
    if (!mu || *mu != 2) {
        detail = "minimal critical count on the circle is not 2";
        return false;
    }
    if (!enumerate_h_tilings(RelativeComplex{make_wedge_two_simplices(2)}, std::size_t(-1))
             .empty()) {
        detail = "the vertex wedge unexpectedly carries an interval tiling";
        return false;
    }
    detail = std::to_string(all.size()) + " tilings enumerated on the circle";
    return true;
}

// ---- criterion 9 ----------------------------------------------------

bool criterion_conservation(std::string& detail) {
    auto base = shell_pseudomanifold(make_boundary(3), ShellMode::Facets);
    const std::vector<long long> expected{1, 0, 1};
    for (int use_ridges = 0; use_ridges <= 1; ++use_ridges) {
        Tiling t = base.tiling;
        for (int step = 0; step < 3; ++step) {
            // Every facet and every ridge preserves the critical multiset.
            std::set<Simplex> taus;
            for (const Simplex& f : t.target.ambient().facets()) {
                taus.insert(f);
                for (const Simplex& rdg : f.ridges()) taus.insert(rdg);
            }
            for (const Simplex& tau : taus) {
                Tiling next = subdivide_tiling(t, tau);
                if (!validate_shelling(next).ok ||
                    compute_stats(next, 0).c != expected) {
                    detail = "multiset not preserved at " + tau.to_string();
                    return false;
                }
            }
            // Iterate with one deterministic choice per flavour.
            Simplex pick = use_ridges ? t.target.ambient().facets()[0].ridges()[0]
                                      : t.target.ambient().facets()[0];
            t = subdivide_tiling(t, pick);
            g_audit.audit(t, true, "criterion 9");
        }
    }
    detail = "3 facet and 3 ridge iterations, all intermediate choices checked";
    return true;
}

// ---- criterion 10 ---------------------------------------------------

bool criterion_disclosure(std::string& detail) {
    // The large-scale statements are witnessed only by (a) the parity of the
    // critical count against the Euler characteristic over every tiling this
    // suite produced and (b) a bounded sample of shelled tilings on the
    // subdivided wedge, each containing two closed simplices. Both are
    // partial evidence at desk scale, not reproductions of the asymptotic
    // claims.
    if (!g_audit.ok) {
        detail = "parity evidence unavailable: " + g_audit.first_failure;
        return false;
    }
    RelativeComplex sdw{barycentric_subdivide(make_wedge_two_simplices(2))};
    auto sample = sample_shelled_h_tilings(sdw, 40, 1000000);
    if (sample.found < 20 || sample.min_closed_tiles < 2) {
        detail = "sampled shellings of the subdivided wedge lack two closed simplices";
        return false;
    }
    auto report = cross_check(RelativeComplex{make_boundary(2)});
    if (!report.ok || report.text.find("partial evidence") == std::string::npos) {
        detail = "reports do not label desk-scale evidence";
        return false;
    }
    detail = "PARTIAL EVIDENCE ONLY: parity over " + std::to_string(g_audit.euler_checked) +
             " tilings; " + std::to_string(sample.found) +
             " sampled wedge shellings each with >= 2 closed simplices";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "face-count formula vs enumeration (n <= 8)", 1.0, criterion_face_counts},
        {2, "local rewrite soundness and census (n <= 5)", 30.0, criterion_rewrite},
        {3, "regular Morse conversion counts (n <= 5)", 30.0, criterion_conversion_counts},
        {4, "barycentric shellings of relative simplices (n <= 4)", 60.0,
         criterion_barycentric},
        {5, "whole-complex shellings, four modes", 120.0, criterion_shell_complex},
        {6, "pseudomanifold census on spheres", 30.0, criterion_pseudomanifold},
        {7, "counting identities on every produced tiling", 30.0, criterion_identities},
        {8, "exhaustive oracle equivalence", 60.0, criterion_oracle},
        {9, "critical multiset conservation under subdivision", 30.0, criterion_conservation},
        {10, "desk-scale disclosure of the asymptotic claims", 30.0, criterion_disclosure},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > c.budget_seconds) {
            ok = false;
            detail = "over time budget";
        }
        if (!ok) failures++;
        std::printf("[criterion %02d] %-55s %s (%.2fs)%s%s\n", c.id, c.name.c_str(),
                    ok ? "PASS" : "FAIL", seconds, detail.empty() ? "" : " -- ",
                    detail.c_str());
    }
    return failures;
}
