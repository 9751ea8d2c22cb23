#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "board.hpp"
#include "tiles.hpp"

namespace hexmosaic {

// A mosaic: board radius plus placed tiles.  Coordinates without an entry
// hold the blank tile.  Validity (suitable connection, crossing-free
// boundary) is checked, never assumed.
struct Mosaic {
    int radius = 2;
    std::map<HexCoord, PlacedTile> placement;

    TileData tile_at(const HexCoord& c) const;
    bool uses_point(const HexCoord& c, int e) const;
    void set_tile(const HexCoord& c, const TileData& t);
    void clear_tile(const HexCoord& c);
};

struct Violation {
    enum Kind { OffBoard, EdgeMismatch, BoundaryUsed, BoundaryCrossing } kind;
    HexCoord coord;
    int dir = -1;
    std::string describe() const;
};

std::vector<Violation> validate(const Mosaic& m);
bool is_valid(const Mosaic& m);
void require_valid(const Mosaic& m); // throws MosaicError listing violations

struct MosaicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One closed strand of the link, as a cyclic sequence of tile traversals.
struct StrandStep {
    HexCoord tile;
    int arc = 0;      // arc index within the realized tile
    int enter = 0;    // connection point entered through
    int exit = 0;
};
struct Strand {
    std::vector<StrandStep> steps;
    int crossings_touched = 0;
};

std::vector<Strand> trace_strands(const Mosaic& m);
int component_count(const Mosaic& m);

// Interface points between the interior and the boundary corona, in
// counterclockwise cyclic order.  Each entry is the boundary tile together
// with its inward edge.
std::vector<EdgeId> interface_points(int radius);

// The two ways of closing a suitably connected interior through the
// crossing-free boundary corona.  The interior must have a blank boundary;
// the completions pair cyclically consecutive used interface points, and
// differ by the one-step shift of that pairing.
std::pair<Mosaic, Mosaic> boundary_completions(const Mosaic& interior);

bool is_saturated(const Mosaic& m);          // every interior tile has 3 crossings
bool saturated_boundary(const Mosaic& m);    // every interface point is used

int crossing_total(const Mosaic& m);

// normative text format
std::string write_mosaic(const Mosaic& m);
Mosaic read_mosaic(const std::string& text);
Mosaic load_mosaic_file(const std::string& path);
void save_mosaic_file(const Mosaic& m, const std::string& path);

} // namespace hexmosaic
