#include "htile/htile.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/search.hpp"
#include "core/shelling.hpp"
#include "core/vectors.hpp"

struct htile_complex {
    htile::RelativeComplex value;
};
struct htile_tiling {
    htile::Tiling value;
};
struct htile_shelling {
    htile::ShellingResult value;
};

namespace {

thread_local std::string g_last_error;

htile_status status_of(const htile::Error& e) {
    using htile::ErrorCode;
    switch (e.code()) {
        case ErrorCode::MalformedInput:
        case ErrorCode::InvalidInput:
        case ErrorCode::DimensionMismatch: return HTILE_ERR_INVALID_ARGUMENT;
        case ErrorCode::Parse: return HTILE_ERR_PARSE;
        case ErrorCode::UnknownFace: return HTILE_ERR_UNKNOWN_FACE;
        case ErrorCode::DegenerateSubdivision: return HTILE_ERR_DEGENERATE;
        case ErrorCode::NotPseudomanifold: return HTILE_ERR_NOT_PSEUDOMANIFOLD;
        case ErrorCode::Guardrail: return HTILE_ERR_GUARDRAIL;
        case ErrorCode::NothingToDo: return HTILE_ERR_NOTHING_TO_DO;
        case ErrorCode::Io: return HTILE_ERR_IO;
        case ErrorCode::Internal: return HTILE_ERR_INTERNAL;
    }
    return HTILE_ERR_INTERNAL;
}

template <typename Fn>
htile_status guarded(Fn&& fn) {
    try {
        fn();
        return HTILE_OK;
    } catch (const htile::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HTILE_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

htile_status require(bool ok, const char* message) {
    if (ok) return HTILE_OK;
    g_last_error = message;
    return HTILE_ERR_INVALID_ARGUMENT;
}

htile::Simplex face_from(const int* face, size_t length) {
    std::vector<htile::Vertex> v(face, face + length);
    return htile::Simplex(std::move(v));
}

} // namespace

extern "C" {

const char* htile_last_error(void) { return g_last_error.c_str(); }

void htile_string_free(char* s) { std::free(s); }

htile_status htile_complex_create(const int* facet_vertices, const size_t* facet_lengths,
                                  size_t facet_count, const int* removed_vertices,
                                  const size_t* removed_lengths, size_t removed_count,
                                  htile_complex** out) {
    if (auto st = require(out && facet_vertices && facet_lengths && facet_count, "bad arguments"))
        return st;
    return guarded([&] {
        auto gather = [](const int* data, const size_t* lengths, size_t count) {
            std::vector<std::vector<htile::Vertex>> lists;
            size_t offset = 0;
            for (size_t i = 0; i < count; ++i) {
                lists.emplace_back(data + offset, data + offset + lengths[i]);
                offset += lengths[i];
            }
            return lists;
        };
        htile::SimplicialComplex ambient =
            htile::build_complex(gather(facet_vertices, facet_lengths, facet_count));
        htile::SimplicialComplex removed;
        if (removed_count)
            removed = htile::build_complex(gather(removed_vertices, removed_lengths, removed_count));
        *out = new htile_complex{htile::RelativeComplex(std::move(ambient), std::move(removed))};
    });
}

htile_status htile_complex_generate(const char* name, int n, int count, htile_complex** out) {
    if (auto st = require(out && name, "bad arguments")) return st;
    return guarded([&] {
        std::string which(name);
        htile::SimplicialComplex k;
        if (which == "simplex")
            k = htile::make_simplex(n);
        else if (which == "boundary")
            k = htile::make_boundary(n);
        else if (which == "wedge_two_simplices")
            k = htile::make_wedge_two_simplices(n);
        else if (which == "disjoint_simplices")
            k = htile::make_disjoint_simplices(n, count);
        else
            throw htile::Error(htile::ErrorCode::InvalidInput, "unknown generator: " + which);
        *out = new htile_complex{htile::RelativeComplex(std::move(k))};
    });
}

htile_status htile_complex_cone(const htile_complex* base, htile_complex** out) {
    if (auto st = require(base && out, "bad arguments")) return st;
    return guarded([&] {
        if (!base->value.removed().empty())
            throw htile::Error(htile::ErrorCode::InvalidInput, "cone over a relative pair");
        *out = new htile_complex{
            htile::RelativeComplex(htile::make_cone(base->value.ambient()))};
    });
}

htile_status htile_complex_join(const htile_complex* a, const htile_complex* b,
                                htile_complex** out) {
    if (auto st = require(a && b && out, "bad arguments")) return st;
    return guarded([&] {
        if (!a->value.removed().empty() || !b->value.removed().empty())
            throw htile::Error(htile::ErrorCode::InvalidInput, "join of relative pairs");
        *out = new htile_complex{
            htile::RelativeComplex(htile::make_join(a->value.ambient(), b->value.ambient()))};
    });
}

htile_status htile_complex_read(const char* path, htile_complex** out) {
    if (auto st = require(path && out, "bad arguments")) return st;
    return guarded([&] { *out = new htile_complex{htile::read_complex(path)}; });
}

htile_status htile_complex_write(const htile_complex* c, const char* path) {
    if (auto st = require(c && path, "bad arguments")) return st;
    return guarded([&] { htile::write_complex(c->value, path); });
}

htile_status htile_complex_to_string(const htile_complex* c, char** out) {
    if (auto st = require(c && out, "bad arguments")) return st;
    return guarded([&] { *out = dup_string(htile::complex_to_text(c->value)); });
}

void htile_complex_free(htile_complex* c) { delete c; }

int htile_complex_dimension(const htile_complex* c) { return c ? c->value.dim() : -1; }

size_t htile_complex_facet_count(const htile_complex* c) {
    return c ? c->value.ambient().facets().size() : 0;
}

htile_status htile_complex_f_vector(const htile_complex* c, long long* out, size_t capacity,
                                    size_t* length) {
    if (auto st = require(c && out && length, "bad arguments")) return st;
    return guarded([&] {
        std::vector<long long> f = c->value.f_vector();
        *length = f.size();
        if (capacity < f.size())
            throw htile::Error(htile::ErrorCode::InvalidInput, "buffer too small");
        std::copy(f.begin(), f.end(), out);
    });
}

htile_status htile_complex_euler(const htile_complex* c, long long* out) {
    if (auto st = require(c && out, "bad arguments")) return st;
    return guarded([&] { *out = c->value.euler(); });
}

htile_status htile_complex_predicates(const htile_complex* c, int* is_pure,
                                      int* is_strongly_connected, int* is_closed_pseudomanifold) {
    if (auto st = require(c && is_pure && is_strongly_connected && is_closed_pseudomanifold,
                          "bad arguments"))
        return st;
    return guarded([&] {
        htile::StructuralPredicates p = htile::structural_predicates(c->value.ambient());
        *is_pure = p.is_pure;
        *is_strongly_connected = p.is_strongly_connected;
        *is_closed_pseudomanifold = p.is_closed_pseudomanifold;
    });
}

htile_status htile_complex_equal(const htile_complex* a, const htile_complex* b, int* out) {
    if (auto st = require(a && b && out, "bad arguments")) return st;
    *out = a->value == b->value;
    return HTILE_OK;
}

htile_status htile_complex_stellar_subdivide(const htile_complex* c, const int* face,
                                             size_t face_length, htile_complex** out, int* apex) {
    if (auto st = require(c && face && face_length && out, "bad arguments")) return st;
    return guarded([&] {
        htile::Simplex tau = face_from(face, face_length);
        htile::Vertex fresh = c->value.ambient().fresh_vertex();
        htile::RelativeComplex next =
            htile::stellar_subdivide_pair_with_apex(c->value, tau, fresh);
        if (apex) *apex = fresh;
        *out = new htile_complex{std::move(next)};
    });
}

htile_status htile_complex_barycentric_subdivide(const htile_complex* c, htile_complex** out) {
    if (auto st = require(c && out, "bad arguments")) return st;
    return guarded([&] { *out = new htile_complex{htile::barycentric_subdivide_pair(c->value)}; });
}

htile_status htile_tiling_read(const char* path, htile_tiling** out) {
    if (auto st = require(path && out, "bad arguments")) return st;
    return guarded([&] { *out = new htile_tiling{htile::read_tiling(path)}; });
}

htile_status htile_tiling_write(const htile_tiling* t, const char* path, const char* target_ref) {
    if (auto st = require(t && path && target_ref, "bad arguments")) return st;
    return guarded([&] { htile::write_tiling(t->value, path, target_ref); });
}

void htile_tiling_free(htile_tiling* t) { delete t; }

size_t htile_tiling_tile_count(const htile_tiling* t) { return t ? t->value.tiles.size() : 0; }

htile_status htile_tiling_tile_line(const htile_tiling* t, size_t i, char** out) {
    if (auto st = require(t && out && i < t->value.tiles.size(), "bad arguments")) return st;
    return guarded([&] { *out = dup_string(t->value.tiles[i].to_string()); });
}

htile_status htile_tiling_target(const htile_tiling* t, htile_complex** out) {
    if (auto st = require(t && out, "bad arguments")) return st;
    return guarded([&] { *out = new htile_complex{t->value.target}; });
}

htile_status htile_tiling_validate(const htile_tiling* t, int check_shelling, int verbose,
                                   int* ok, char** report) {
    if (auto st = require(t && ok, "bad arguments")) return st;
    return guarded([&] {
        htile::ValidationReport r = check_shelling ? htile::validate_shelling(t->value)
                                                   : htile::validate_tiling(t->value);
        *ok = r.ok;
        if (report) *report = dup_string(r.to_string(verbose));
    });
}

htile_status htile_tiling_subdivide(const htile_tiling* t, const int* face, size_t face_length,
                                    htile_tiling** out) {
    if (auto st = require(t && face && face_length && out, "bad arguments")) return st;
    return guarded([&] {
        *out = new htile_tiling{htile::subdivide_tiling(t->value, face_from(face, face_length))};
    });
}

htile_status htile_tiling_vectors_report(const htile_tiling* t, int manifold, int* all_ok,
                                         char** report) {
    if (auto st = require(t && report, "bad arguments")) return st;
    return guarded([&] {
        bool ok = false;
        *report = dup_string(htile::vectors_report(t->value, manifold != 0, &ok));
        if (all_ok) *all_ok = ok;
    });
}

htile_status htile_shell(const htile_complex* c, const char* mode, htile_shelling** out) {
    if (auto st = require(c && mode && out, "bad arguments")) return st;
    return guarded([&] {
        *out = new htile_shelling{htile::shell_complex(c->value, htile::parse_shell_mode(mode))};
    });
}

htile_status htile_shell_pseudomanifold(const htile_complex* c, const char* mode,
                                        htile_shelling** out) {
    if (auto st = require(c && mode && out, "bad arguments")) return st;
    return guarded([&] {
        if (!c->value.removed().empty())
            throw htile::Error(htile::ErrorCode::InvalidInput,
                               "pseudomanifold shelling expects a plain complex");
        *out = new htile_shelling{
            htile::shell_pseudomanifold(c->value.ambient(), htile::parse_shell_mode(mode))};
    });
}

htile_status htile_shelling_tiling(const htile_shelling* r, htile_tiling** out) {
    if (auto st = require(r && out, "bad arguments")) return st;
    return guarded([&] { *out = new htile_tiling{r->value.tiling}; });
}

htile_status htile_shelling_stats(const htile_shelling* r, char** out) {
    if (auto st = require(r && out, "bad arguments")) return st;
    return guarded([&] { *out = dup_string(r->value.stats_to_string()); });
}

htile_status htile_shelling_log(const htile_shelling* r, char** out) {
    if (auto st = require(r && out, "bad arguments")) return st;
    return guarded([&] { *out = dup_string(r->value.log_to_string()); });
}

size_t htile_shelling_subdivision_count(const htile_shelling* r) {
    return r ? static_cast<size_t>(r->value.stats.num_subdivisions) : 0;
}

void htile_shelling_free(htile_shelling* r) { delete r; }

htile_status htile_enumerate(const htile_complex* c, size_t limit, size_t* count) {
    if (auto st = require(c && count, "bad arguments")) return st;
    return guarded([&] { *count = htile::enumerate_h_tilings(c->value, limit).size(); });
}

htile_status htile_enumerate_emit(const htile_complex* c, size_t limit, const char* prefix,
                                  size_t* count) {
    if (auto st = require(c && prefix && count, "bad arguments")) return st;
    return guarded([&] {
        std::vector<htile::Tiling> all = htile::enumerate_h_tilings(c->value, limit);
        std::string target_path = std::string(prefix) + "target.cx";
        htile::write_complex(c->value, target_path);
        // Emitted tilings sit next to the target file; reference it by name.
        std::string target_name = std::filesystem::path(target_path).filename().string();
        for (std::size_t i = 0; i < all.size(); ++i)
            htile::write_tiling(all[i], std::string(prefix) + std::to_string(i) + ".tiling",
                                target_name);
        *count = all.size();
    });
}

htile_status htile_min_critical(const htile_complex* c, int require_shellable, int* present,
                                long long* value) {
    if (auto st = require(c && present && value, "bad arguments")) return st;
    return guarded([&] {
        std::optional<long long> r =
            htile::min_critical_tiles(c->value, require_shellable != 0);
        *present = r.has_value();
        *value = r.value_or(-1);
    });
}

htile_status htile_cross_check(const htile_complex* c, int* ok, char** report) {
    if (auto st = require(c && ok, "bad arguments")) return st;
    return guarded([&] {
        htile::CrossCheckReport r = htile::cross_check(c->value);
        *ok = r.ok;
        if (report) *report = dup_string(r.text);
    });
}

} // extern "C"
