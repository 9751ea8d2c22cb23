#pragma once

#include <array>
#include <vector>

#include "geom.hpp"
#include "tiles.hpp"

namespace hexmosaic {

// Planar subdivision of one hexagonal tile by its arcs, in local lattice
// coordinates (tile center at the origin).
//
// Arcs are straight chords between edge midpoints, except that the three
// main diagonals are bent through a point offset 1/4 unit from the center;
// this resolves the triple point of the three-diagonal tile and gives every
// tile a realization whose crossings are in general position.
//
// Fragments are the faces of the subdivision inside the hexagon.  The
// hexagon boundary is split into 12 half-sides: half-side 2e runs from
// corner e-1 to the midpoint of side e, half-side 2e+1 from that midpoint to
// corner e.
struct TileArrangement {
    struct Crossing {
        int ai = 0, aj = 0;  // arc indices within the tile, ai < aj
        bool first_over = true;
        RPt pos;
        // darts leaving the crossing in CCW order
        std::array<int, 4> dart_arc{};    // arc the dart runs along
        std::array<int, 4> dart_toward{}; // connection point it heads toward
        std::array<int, 4> corner_frag{}; // fragment between dart k and k+1
    };

    struct ChordPiece {
        int arc = 0;
        RPt a, b;          // oriented along the arc, from arc.a toward arc.b
        int frag_left = -1;
        int frag_right = -1;
    };

    TileData tile;
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> arc_xseq; // crossings along each arc, from endpoint arc.a
    std::vector<ChordPiece> pieces;
    std::array<int, 12> halfside_frag{};    // fragment adjacent to each half-side
    int fragment_count = 0;
    std::vector<std::vector<int>> frag_crossings; // crossings on each fragment's boundary

    // the two fragments flanking arc `arc_index`, via any of its pieces
    std::pair<int, int> arc_sides_local(int arc_index) const;
};

const TileArrangement& arrangement_for(const TileData& tile); // memoized

// geometry of one realized arc: endpoints plus the bend for main diagonals
std::vector<RPt> arc_polyline(const Arc& a);

} // namespace hexmosaic
