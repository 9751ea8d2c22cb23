#include <doctest.h>

#include <map>
#include <set>

#include "hexmosaic/arrangement.hpp"
#include "hexmosaic/tiles.hpp"

using namespace hexmosaic;

namespace {

// Independent oracle: enumerate every signed chord diagram directly and
// count rotation orbits two ways (explicit orbits and Burnside's lemma).
struct ChordOracle {
    std::vector<TileData> raw;

    ChordOracle() {
        std::vector<std::vector<Arc>> shapes;
        build(0, 0u, {}, shapes);
        for (auto& arcs : shapes) {
            TileData base = make_tile(arcs);
            int nc = base.crossing_count();
            for (unsigned mask = 0; mask < (1u << nc); ++mask) {
                TileData t = base;
                for (int b = 0; b < nc; ++b) t.crossings[b].first_over = (mask >> b) & 1u;
                raw.push_back(t);
            }
        }
    }

    static void build(int next, unsigned used, std::vector<Arc> cur,
                      std::vector<std::vector<Arc>>& out) {
        if (next == 6) { out.push_back(cur); return; }
        if (used & (1u << next)) { build(next + 1, used, cur, out); return; }
        build(next + 1, used, cur, out);
        for (int q = next + 1; q < 6; ++q) {
            if (used & (1u << q)) continue;
            cur.emplace_back(next, q);
            build(next + 1, used | (1u << next) | (1u << q), cur, out);
            cur.pop_back();
        }
    }

    int orbit_count() const {
        std::set<std::string> orbits;
        for (const TileData& t : raw) orbits.insert(canonical_tile(t).encode());
        return static_cast<int>(orbits.size());
    }

    int burnside_count() const {
        long long total = 0;
        for (int k = 0; k < 6; ++k) {
            for (const TileData& t : raw)
                if (rotate_tile(t, k) == t) ++total;
        }
        REQUIRE(total % 6 == 0);
        return static_cast<int>(total / 6);
    }
};

} // namespace

TEST_CASE("catalog enumeration agrees with the orbit oracle") {
    ChordOracle oracle;
    CHECK(oracle.raw.size() == 113); // 1 + 15 + 60 + 37 signed diagrams
    int orbits = oracle.orbit_count();
    CHECK(orbits == oracle.burnside_count());
    CHECK(TileCatalog::instance().size() == orbits);
    // the catalog includes the blank tile; the classical count of drawn
    // tiles excludes it and comes to 26
    CHECK(TileCatalog::instance().size() - 1 == 26);

    // orbit-size bookkeeping: sum over classes of 6 / symmetry = raw count
    long long total = 0;
    for (int id = 0; id < TileCatalog::instance().size(); ++id)
        total += 6 / TileCatalog::instance().entry(id).symmetry;
    CHECK(total == static_cast<long long>(oracle.raw.size()));
}

TEST_CASE("class counts by crossings") {
    std::map<std::pair<int, int>, int> by_shape; // (arcs, crossings) -> classes
    const auto& cat = TileCatalog::instance();
    for (int id = 0; id < cat.size(); ++id) {
        const TileData& t = cat.tile(id);
        ++by_shape[{t.arc_count(), t.crossing_count()}];
    }
    CHECK(by_shape[{3, 3}] == 4); // three-crossing tiles
    CHECK(by_shape[{3, 2}] == 3);
    CHECK(by_shape[{3, 0}] == 2); // crossing-free three-arc tiles
    CHECK(by_shape[{3, 1}] == 2);
    CHECK(by_shape[{0, 0}] == 1); // blank
    int three_arc = 0;
    for (auto& [k, v] : by_shape)
        if (k.first == 3) three_arc += v;
    CHECK(three_arc == 11);
}

TEST_CASE("rotation laws") {
    const auto& cat = TileCatalog::instance();
    for (int id = 0; id < cat.size(); ++id) {
        const TileData& t = cat.tile(id);
        CHECK(rotate_tile(t, 6) == t);
        CHECK(rotate_tile(rotate_tile(t, 1), 5) == t);
        for (int k = 0; k < 6; ++k)
            CHECK(canonical_tile(rotate_tile(t, k)) == t); // idempotent, rotation-invariant
    }
}

TEST_CASE("three main diagonals are the only pairwise-crossing triple") {
    const auto& cat = TileCatalog::instance();
    for (int id = 0; id < cat.size(); ++id) {
        const TileData& t = cat.tile(id);
        if (t.crossing_count() == 3) {
            for (const Arc& a : t.arcs) CHECK(a.is_diagonal());
        }
        // no two arcs cross more than once: geometric realization agrees
        const TileArrangement& arr = arrangement_for(t);
        CHECK(arr.crossings.size() == t.crossings.size());
    }
}

TEST_CASE("named tiles") {
    const NamedTiles& n = named_tiles();
    const auto& cat = TileCatalog::instance();
    CHECK(n.three_arc_zero_a != n.three_arc_zero_b);
    CHECK(cat.tile(n.three_arc_zero_a).crossing_count() == 0);
    CHECK(cat.tile(n.three_arc_zero_a).arc_count() == 3);
    CHECK(cat.tile(n.two_crossing_mixed).crossing_count() == 2);
    CHECK(cat.tile(n.cyclic_a).crossing_count() == 3);
    CHECK(cat.tile(n.one_crossing_a).crossing_count() == 1);
    CHECK(cat.tile(n.one_crossing_a).arc_count() == 3);
    // 18 and 19 share a shadow
    TileData a = cat.tile(n.one_crossing_a), b = cat.tile(n.one_crossing_b);
    CHECK(a.arcs == b.arcs);
    CHECK(a.crossings[0].first_over != b.crossings[0].first_over);
    // rotating the alternating three-crossing tile never leaves its class
    for (int k = 0; k < 6; ++k) {
        auto [id, rot] = TileCatalog::instance().identify(rotate_tile(cat.tile(n.cyclic_a), k));
        CHECK(id == n.cyclic_a);
        CHECK(rot == 0);
    }
}

TEST_CASE("placed tiles reduce rotation modulo symmetry") {
    const auto& cat = TileCatalog::instance();
    for (int id = 0; id < cat.size(); ++id)
        for (int k = 0; k < 6; ++k) {
            PlacedTile p = make_placed(rotate_tile(cat.tile(id), k));
            CHECK(p.class_id == id);
            CHECK(p.rotation < 6 / cat.entry(id).symmetry);
            CHECK(realize(p) == rotate_tile(cat.tile(id), k));
        }
}
