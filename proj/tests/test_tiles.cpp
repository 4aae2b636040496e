#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/error.hpp"
#include "core/tile.hpp"

using namespace htile;

namespace {

// Independent membership rule: subsets of the facet containing every
// removed-opposite vertex and not lying inside the Morse face.
std::set<Simplex> enumerate_faces(const Simplex& facet, const Simplex& opp,
                                  const std::optional<Simplex>& morse) {
    std::set<Simplex> out;
    for (const Simplex& f : facet.nonempty_subsets()) {
        if (!f.contains(opp)) continue;
        if (morse && morse->contains(f)) continue;
        out.insert(f);
    }
    return out;
}

} // namespace

TEST_CASE("tile faces match the interval rule") {
    SUBCASE("order one on a triangle") {
        MorseTile t(Simplex{0, 1, 2}, Simplex{0});
        auto faces = t.faces();
        std::set<Simplex> got(faces.begin(), faces.end());
        std::set<Simplex> want{Simplex{0}, Simplex{0, 1}, Simplex{0, 2}, Simplex{0, 1, 2}};
        CHECK(got == want);
        CHECK(faces.size() == 4); // 2^(2+1-1)
    }
    SUBCASE("open triangle") {
        MorseTile t(Simplex{0, 1, 2}, Simplex{0, 1, 2});
        auto faces = t.faces();
        REQUIRE(faces.size() == 1);
        CHECK(faces[0] == Simplex{0, 1, 2});
    }
    SUBCASE("three-simplex with a Morse edge") {
        MorseTile t(Simplex{0, 1, 2, 3}, Simplex{0}, Simplex{0, 1}, false);
        auto faces = t.faces();
        std::set<Simplex> got(faces.begin(), faces.end());
        std::set<Simplex> want{Simplex{0, 2},    Simplex{0, 3},    Simplex{0, 1, 2},
                               Simplex{0, 1, 3}, Simplex{0, 2, 3}, Simplex{0, 1, 2, 3}};
        CHECK(got == want);
    }
}

TEST_CASE("classification") {
    CHECK(MorseTile(Simplex{0, 1, 2}, Simplex{}).classify() ==
          TileClass{TileKind::Basic, 0, -1});
    // order n+1 is the open simplex, identified with the top critical index
    CHECK(MorseTile(Simplex{0, 1, 2}, Simplex{0, 1, 2}).classify() ==
          TileClass{TileKind::Critical, 2, -1});
    CHECK(MorseTile(Simplex{0, 1, 2, 3}, Simplex{0}, Simplex{0, 1}, false).classify() ==
          TileClass{TileKind::RegularMorse, 1, 1});
    CHECK(MorseTile(Simplex{0, 1, 2, 3}, Simplex{0, 1}, Simplex{0, 1}, true).classify() ==
          TileClass{TileKind::Critical, 2, -1});
    // removing the restriction set of an order-n tile leaves the open simplex
    CHECK(MorseTile(Simplex{0, 1, 2}, Simplex{0, 1}, std::nullopt, true).classify() ==
          TileClass{TileKind::Critical, 2, -1});

    SUBCASE("invalid combinations are reported, not thrown") {
        MorseTile bad(Simplex{0, 1, 2, 3}, Simplex{0}, Simplex{1, 2}, false);
        CHECK(bad.classify().kind == TileKind::Invalid); // Morse face misses r(T)
        MorseTile big(Simplex{0, 1, 2}, Simplex{0}, Simplex{0, 1}, false);
        CHECK(big.classify().kind == TileKind::Invalid); // codimension one Morse face
    }
}

TEST_CASE("face count formula") {
    CHECK(tile_face_count(3, 2, 1) == 1); // C(2,2)
    CHECK(tile_face_count(3, 2, 0) == 0); // below the restriction set
    for (int n = 1; n <= 6; ++n)
        for (int j = 0; j <= n; ++j)
            CHECK(tile_face_count(n, 0, j) == binomial(n + 1, n - j));
    CHECK_THROWS_AS(tile_face_count(3, 5, 0), Error);
    CHECK_THROWS_AS(tile_face_count(3, 0, 4), Error);
}

TEST_CASE("face count formula agrees with enumeration up to dimension eight") {
    for (int n = 0; n <= 8; ++n) {
        std::vector<Vertex> base(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i) base[static_cast<std::size_t>(i)] = i;
        Simplex sigma(base);
        for (int k = 0; k <= n + 1; ++k) {
            std::vector<Vertex> rv;
            for (int i = 0; i < k; ++i) rv.push_back(i);
            auto faces = enumerate_faces(sigma, Simplex(rv), std::nullopt);
            std::vector<long long> per_dim(static_cast<std::size_t>(n + 1), 0);
            for (const Simplex& f : faces) per_dim[static_cast<std::size_t>(f.dim())]++;
            long long total = 0;
            for (int j = 0; j <= n; ++j) {
                CHECK(per_dim[static_cast<std::size_t>(j)] == tile_face_count(n, k, j));
                total += per_dim[static_cast<std::size_t>(j)];
            }
            // The closed interval has 2^(n+1-k) members; the empty face is
            // counted only when k = 0 and never belongs to a tile.
            CHECK(total == (1LL << (n + 1 - k)) - (k == 0 ? 1 : 0));
        }
    }
}

TEST_CASE("critical tiles drop exactly their minimum") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<Vertex> base(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i) base[static_cast<std::size_t>(i)] = i;
        Simplex sigma(base);
        for (int k = 1; k <= n - 1; ++k) {
            std::vector<Vertex> rv;
            for (int i = 0; i < k; ++i) rv.push_back(i);
            MorseTile basic(sigma, Simplex(rv));
            MorseTile critical(sigma, Simplex(rv), Simplex(rv), true);
            CHECK(critical.faces().size() + 1 == basic.faces().size());
            long long per_dim_total = 0;
            for (int j = 0; j <= n; ++j) per_dim_total += tile_face_count_critical(n, k, j);
            CHECK(per_dim_total == (long long)critical.faces().size());
        }
    }
}

TEST_CASE("basic tiles are intervals") {
    MorseTile t(Simplex{0, 1, 2, 3}, Simplex{0, 1});
    auto faces = t.faces();
    Simplex minimum = t.restriction_set();
    for (const Simplex& f : faces) {
        CHECK(f.contains(minimum));
        // closed upward within the facet and under intersections
        for (const Simplex& g : faces) {
            CHECK(t.contains(f.unite(g)));
            CHECK(t.contains(f.intersect(g)));
        }
    }
}

TEST_CASE("canonical text form") {
    MorseTile t(Simplex{0, 1, 2, 3}, Simplex{0}, Simplex{0, 1}, false);
    CHECK(t.to_string() == "tile 0 1 2 3 ; opp 0 ; morse 0 1 ; critical 0");
    MorseTile closed(Simplex{4, 7}, Simplex{});
    CHECK(closed.to_string() == "tile 4 7 ; opp - ; morse - ; critical 0");
    MorseTile crit(Simplex{0, 1, 2, 3}, Simplex{0, 1}, Simplex{0, 1}, true);
    CHECK(crit.to_string() == "tile 0 1 2 3 ; opp 0 1 ; morse - ; critical 1");
}

TEST_CASE("vertex tiles collapse to the semi-open interval") {
    MorseTile v(Simplex{5}, Simplex{});
    CHECK(v.classify() == TileClass{TileKind::Critical, 0, -1});
    CHECK(v.faces().size() == 1);
}
