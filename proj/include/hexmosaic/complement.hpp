#pragma once

#include <map>
#include <vector>

#include "diagram.hpp"
#include "mosaic.hpp"

namespace hexmosaic {

// One tile traversal of a complement strand.
struct ComplementStep {
    HexCoord tile;
    int enter = 0;
    int exit = 0;
};

struct ComplementPath {
    std::vector<ComplementStep> steps;
    bool closed = false;
};

// The complement of a mosaic: arcs and loops on the interior tiles chosen so
// the link and the complement together use all six connection points of
// every interior tile exactly once, complement strands never cross each
// other, and a complement strand passing a link strand goes under it.  Arcs
// end on the interior/boundary interface.
struct ComplementSet {
    std::vector<ComplementPath> arcs;
    std::vector<ComplementPath> loops;
};

ComplementSet complement(const Mosaic& m);

// add the chosen complement arcs per tile to a copy of the mosaic,
// complement passing under the link
TileData tile_with_complement(const TileData& link_tile);

struct ArcSides {
    std::vector<HexCoord> outside; // interior tiles strictly on the smaller side
    std::vector<HexCoord> inside;  // interior tiles strictly on the larger side
};

// The two sides an arc cuts the interior into, counted in whole tiles; the
// side with fewer tiles is the outside.  Throws AmbiguousSidesError on a
// tie.
ArcSides arc_sides(const Mosaic& m, const ComplementPath& arc);

struct AmbiguousSidesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The rebuild that absorbs the complement: arcs are added smallest-outside
// first, re-closing the boundary each time by the shift that keeps the
// boundary tiles inside the arc fixed.  The result has a saturated boundary
// and an empty complement.
Mosaic build_lprime(const Mosaic& m);

enum class PenultimateType { Corner, TypeI, TypeII };

// classification of the penultimate corona; requires a saturated boundary
std::map<HexCoord, PenultimateType> classify_penultimate(const Mosaic& m);

struct TileLedgerEntry {
    int cr = 0;    // crossings on the tile
    int delta = 0; // crossings of the tile on the exterior face boundary
};

// per-tile exterior contribution; requires a polygonal exterior
TileLedgerEntry delta_contribution(const Mosaic& m, const LinkDiagram& d, const HexCoord& c);
std::map<HexCoord, TileLedgerEntry> delta_ledger(const Mosaic& m, const LinkDiagram& d);

// The saturating rebuild: central tiles become three-crossing tiles and the
// penultimate tiles are substituted per the contribution table, rotated so
// the exterior face never reaches a central tile and no nugatory crossing
// appears on the exterior.  `original` supplies the per-tile targets.
Mosaic build_lhat(const Mosaic& lprime, const Mosaic& original);

// Arc normalization: removes nested arcs and rewrites arcs sharing a
// central tile until no two arcs meet a common central tile, preserving
// every outside tile.
std::vector<ComplementPath> normalize_arcs(const Mosaic& m, std::vector<ComplementPath> arcs);

struct SubstitutionReport {
    struct Row {
        PenultimateType context;
        int tile_class;
        int rotation;
        int delta_drop;
        int cr_drop;
        bool ok; // cr drop >= ceil(1.5 * delta drop)
    };
    std::vector<Row> rows;
    int violations = 0;
};

// brute force over every three-arc replacement in each penultimate context;
// checks that losing t from the tile's exterior contribution always costs
// at least 1.5t crossings
SubstitutionReport substitution_inequality_check();

} // namespace hexmosaic
