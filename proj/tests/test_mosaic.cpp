#include <doctest.h>

#include "hexmosaic/families.hpp"
#include "hexmosaic/mosaic.hpp"

using namespace hexmosaic;

TEST_CASE("validation basics") {
    Mosaic blank;
    blank.radius = 3;
    CHECK(is_valid(blank));

    // a lone three-crossing tile leaves six loose connection points
    Mosaic lone;
    lone.radius = 2;
    lone.placement[{0, 0}] = PlacedTile{named_tiles().cyclic_a, 0};
    CHECK(validate(lone).size() == 6);

    // an off-board placement is flagged
    Mosaic off;
    off.radius = 2;
    off.placement[{3, 0}] = PlacedTile{named_tiles().cyclic_a, 0};
    CHECK(!validate(off).empty());
}

TEST_CASE("boundary completions of the saturated interior") {
    for (int r = 2; r <= 5; ++r) {
        Mosaic interior;
        interior.radius = r;
        for (const HexCoord& c : board::coords(r))
            if (board::classify(c, r) != TileRegion::Boundary)
                interior.placement[c] = PlacedTile{named_tiles().cyclic_a, 0};
        auto [a, b] = boundary_completions(interior);
        CHECK(is_valid(a));
        CHECK(is_valid(b));
        // both completions carry r-1 components
        CHECK(component_count(a) == r - 1);
        CHECK(component_count(b) == r - 1);
        CHECK(crossing_total(a) == 9 * r * r - 27 * r + 21);
    }

    Mosaic empty;
    empty.radius = 3;
    auto [a, b] = boundary_completions(empty);
    CHECK(a.placement.empty());
    CHECK(b.placement.empty());
}

TEST_CASE("component shape law for saturated mosaics") {
    // one triangle component with 3 interior arcs, the rest with 6; an
    // interior arc is a maximal run of interior tiles along the strand
    for (int r = 3; r <= 6; ++r) {
        Mosaic m = generate_lr(r);
        auto strands = trace_strands(m);
        int triangles = 0;
        int total_arcs = 0;
        for (const Strand& s : strands) {
            int n = static_cast<int>(s.steps.size());
            int arcs = 0;
            auto interior = [&](int i) {
                return board::classify(s.steps[((i % n) + n) % n].tile, r) != TileRegion::Boundary;
            };
            for (int i = 0; i < n; ++i)
                if (interior(i) && !interior(i - 1)) ++arcs;
            total_arcs += arcs;
            if (arcs == 3) ++triangles;
            else CHECK(arcs == 6);
        }
        CHECK(triangles == 1);
        CHECK(total_arcs == 3 * (2 * r - 3)); // 2r-3 arcs of each slope
    }
}

TEST_CASE("lr crossing counts and components") {
    CHECK(crossing_total(generate_lr(2)) == 3);   // trefoil
    CHECK(component_count(generate_lr(2)) == 1);
    CHECK(crossing_total(generate_lr(4)) == 57);
    CHECK(crossing_total(generate_lr(5)) == 111);
    CHECK(component_count(generate_lr(5)) == 4);
    for (int r = 2; r <= 8; ++r) {
        Mosaic m = generate_lr(r);
        CHECK(is_valid(m));
        CHECK(crossing_total(m) == 9 * r * r - 27 * r + 21);
        CHECK(component_count(m) == r - 1);
        CHECK(is_saturated(m));
        CHECK(saturated_boundary(m));
    }
}

TEST_CASE("ar construction") {
    for (int r = 4; r <= 6; ++r) {
        Mosaic m = generate_ar(r);
        CHECK(is_valid(m));
        CHECK(crossing_total(m) == 9 * r * r - 28 * r + 23);
        CHECK(component_count(m) == 1);
        CHECK_FALSE(is_saturated(m));
        CHECK(saturated_boundary(m));
    }
    CHECK(crossing_total(generate_ar(5)) == 108);
    CHECK(crossing_total(generate_ar(4)) == 55);
    CHECK_THROWS(generate_ar(3));
}

TEST_CASE("kr mosaic") {
    for (int r = 4; r <= 6; ++r) {
        Mosaic m = generate_kr(r);
        CHECK(is_valid(m));
        CHECK(crossing_total(m) == 9 * r * r - 28 * r + 23);
        CHECK(component_count(m) == 1);
    }
}

TEST_CASE("mosaic text format round trip") {
    Mosaic m = generate_lr(3);
    std::string text = write_mosaic(m);
    CHECK(text.substr(0, 12) == "hexmosaic 1\n");
    Mosaic back = read_mosaic(text);
    CHECK(back.radius == m.radius);
    CHECK(back.placement.size() == m.placement.size());
    CHECK(write_mosaic(back) == text);
    CHECK_THROWS(read_mosaic("nonsense"));
}

TEST_CASE("is_saturated edge cases") {
    Mosaic blank;
    blank.radius = 3;
    CHECK_FALSE(is_saturated(blank));
    CHECK_FALSE(saturated_boundary(blank));
    Mosaic a5 = generate_ar(5);
    CHECK_FALSE(is_saturated(a5));
    CHECK(saturated_boundary(a5));
}
