#pragma once

#include "diagram.hpp"
#include "mosaic.hpp"

namespace hexmosaic {

// The built-in families.
//
// lr: the saturated link, every interior tile the same alternating
//     three-crossing tile, closed through the boundary without nugatory
//     crossings.  Defined for r >= 2.
// ar: the alternating knot obtained from lr by smoothing r-2 well chosen
//     crossings on lower-half central tiles.  Defined for r >= 4.
// kr: the knot obtained from ar by re-leveling the second highest
//     horizontal strand and reversing every crossing above it, so that the
//     strand can later be lifted clear.  Defined for r >= 3; the r = 3
//     mosaic is stored literally since the small board admits no central
//     smoothing.
Mosaic generate_lr(int r);
Mosaic generate_ar(int r);
Mosaic generate_kr(int r);

// Smooth crossing `xi` of a tile: reconnect its two strands without the
// crossing.  Returns the realizable resolutions with inherited over/under
// flags; the resolution used by the ar construction keeps every other
// crossing of the tile.
std::vector<TileData> smooth_crossing(const TileData& t, int xi);

// The second highest horizontal strand of a kr (or ar) mosaic, ordered west
// to east, as crossings of the given extracted diagram.
StrandRun horizontal_run(const Mosaic& m, const LinkDiagram& d, int r);

// Lift of the designated run: the reduced alternating projection of kr.
LinkDiagram standard_alternating_kr(int r);

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hexmosaic
