#include <doctest.h>

#include <set>

#include "hexmosaic/board.hpp"

using namespace hexmosaic;

namespace {

// independent count: flood fill from the origin, never using the closed formula
int flood_count(int r) {
    std::set<HexCoord> seen{{0, 0}};
    std::vector<HexCoord> frontier{{0, 0}};
    while (!frontier.empty()) {
        std::vector<HexCoord> next;
        for (const HexCoord& c : frontier)
            for (int e = 0; e < 6; ++e) {
                HexCoord n = board::neighbor(c, e);
                if (board::dist(n) <= r - 1 && !seen.count(n)) {
                    seen.insert(n);
                    next.push_back(n);
                }
            }
        frontier = std::move(next);
    }
    return static_cast<int>(seen.size());
}

} // namespace

TEST_CASE("board coordinate counts") {
    CHECK(board::coords(1).size() == 1);
    CHECK(board::coords(2).size() == 7);
    CHECK(board::coords(5).size() == 61); // = flood fill, frozen
    CHECK(flood_count(5) == 61);
    for (int r = 1; r <= 10; ++r) {
        CHECK(static_cast<int>(board::coords(r).size()) == 3 * r * r - 3 * r + 1);
        CHECK(flood_count(r) == 3 * r * r - 3 * r + 1);
    }
    CHECK_THROWS(board::coords(0));
}

TEST_CASE("tile classification") {
    CHECK(board::classify({0, 0}, 3) == TileRegion::Central);
    // r=2 convention: the single interior tile is central, penultimate empty
    CHECK(board::classify({0, 0}, 2) == TileRegion::Central);
    for (int r = 2; r <= 10; ++r) {
        int interior = 0, penultimate = 0;
        for (const HexCoord& c : board::coords(r))
            if (board::classify(c, r) != TileRegion::Boundary) {
                ++interior;
                if (board::classify(c, r) == TileRegion::Penultimate) ++penultimate;
            }
        CHECK(interior == 3 * r * r - 9 * r + 7);
        if (r >= 3) CHECK(penultimate == 6 * (r - 2));
    }
    // interior tiles at r=3: central + penultimate coronas
    int n3 = 0;
    for (const HexCoord& c : board::coords(3))
        if (board::classify(c, 3) != TileRegion::Boundary) ++n3;
    CHECK(n3 == 7);
    CHECK_THROWS(board::classify({5, 0}, 3));
}

TEST_CASE("corners") {
    CHECK_FALSE(board::is_corner({0, 0}));
    int c1 = 0;
    for (const HexCoord& c : board::ring(1))
        if (board::is_corner(c)) ++c1;
    CHECK(c1 == 6); // the whole first corona
    for (int t = 1; t <= 6; ++t) {
        int corners = 0;
        auto ring = board::ring(t);
        CHECK(static_cast<int>(ring.size()) == 6 * t);
        for (const HexCoord& c : ring)
            if (board::is_corner(c)) ++corners;
        CHECK(corners == 6);
    }
}

TEST_CASE("neighbor round trip and distinctness") {
    for (const HexCoord& c : board::coords(4))
        for (int e = 0; e < 6; ++e)
            CHECK(board::neighbor(board::neighbor(c, e), (e + 3) % 6) == c);
    std::set<HexCoord> n;
    for (int e = 0; e < 6; ++e) n.insert(board::neighbor({2, -1}, e));
    CHECK(n.size() == 6);
}

TEST_CASE("edge identification is an involution") {
    // EdgeId(c,e) and EdgeId(neighbor, e+3) describe the same physical segment
    for (const HexCoord& c : board::coords(3))
        for (int e = 0; e < 6; ++e) {
            HexCoord n = board::neighbor(c, e);
            CHECK(board::edge_point(c, e) == board::edge_point(n, (e + 3) % 6));
        }
}

TEST_CASE("ring walk is counterclockwise and closed") {
    auto ring = board::ring(3);
    for (size_t i = 0; i < ring.size(); ++i) {
        HexCoord a = ring[i], b = ring[(i + 1) % ring.size()];
        bool adjacent = false;
        for (int e = 0; e < 6; ++e)
            if (board::neighbor(a, e) == b) adjacent = true;
        CHECK(adjacent);
        // counterclockwise: consecutive centers turn positively around the origin
        CHECK(cross_sign(board::center(a), board::center(b)) > 0);
    }
}
