#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "geom.hpp"

namespace hexmosaic {

// An unordered pair of connection points 0..5, stored with a < b.
struct Arc {
    int a = 0, b = 0;

    Arc() = default;
    Arc(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

    friend bool operator==(const Arc& l, const Arc& r) { return l.a == r.a && l.b == r.b; }
    friend bool operator<(const Arc& l, const Arc& r) {
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    }
    bool uses(int p) const { return a == p || b == p; }
    bool is_diagonal() const { return b - a == 3; }
};

// Two chords cross iff their endpoints interleave around the hexagon.
inline bool arcs_cross(const Arc& x, const Arc& y) {
    auto inside = [&](int p) { return p > x.a && p < x.b; };
    return inside(y.a) != inside(y.b);
}

// A crossing between two arcs of one tile, with the over/under flag.
struct TileCrossing {
    int i = 0, j = 0;       // indices into the arc list, i < j
    bool first_over = true; // true when arc i passes over arc j

    friend bool operator==(const TileCrossing& l, const TileCrossing& r) {
        return l.i == r.i && l.j == r.j && l.first_over == r.first_over;
    }
};

// A tile as a signed chord diagram: up to three pairwise-disjoint arcs on
// the six connection points, plus an over/under flag for every interleaving
// pair.  `arcs` is sorted; `crossings` is sorted by (i, j).
struct TileData {
    std::vector<Arc> arcs;
    std::vector<TileCrossing> crossings;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int arc_count() const { return static_cast<int>(arcs.size()); }
    bool uses_point(int p) const;
    // true iff arc i passes over arc j at their crossing
    bool over(int i, int j) const;

    std::string encode() const; // exact text form, used for ordering and io
    friend bool operator==(const TileData& l, const TileData& r) {
        return l.arcs == r.arcs && l.crossings == r.crossings;
    }
    friend bool operator<(const TileData& l, const TileData& r) { return l.encode() < r.encode(); }
};

TileData rotate_tile(const TileData& t, int k);
TileData canonical_tile(const TileData& t);     // lex-min over the 6 rotations
int tile_symmetry_order(const TileData& t);     // |{k : rotate(t,k)==t}|

// build a TileData from arcs and explicit over flags keyed by arc pairs
TileData make_tile(std::vector<Arc> arcs, const std::vector<std::pair<std::pair<int,int>,bool>>& overs = {});

// The tile catalog: every signed chord diagram up to rotation, including the
// blank tile, deterministically ordered by (arc count, crossing count,
// canonical encoding).  This order defines the stable class ids used in the
// mosaic file format.
class TileCatalog {
public:
    struct Entry {
        TileData canonical;
        int symmetry = 1; // rotational symmetry order, divides 6
    };

    static const TileCatalog& instance();

    int size() const { return static_cast<int>(entries_.size()); }
    const Entry& entry(int id) const { return entries_.at(id); }
    const TileData& tile(int id) const { return entries_.at(id).canonical; }

    // class id + the minimal rotation k with rotate(catalog[id], k) == t
    std::pair<int, int> identify(const TileData& t) const;

    int blank_id() const { return blank_; }

private:
    TileCatalog();
    std::vector<Entry> entries_;
    std::map<std::string, int> index_;
    int blank_ = -1;
};

// A catalog tile placed on the board.  rotation is reduced modulo the
// class's rotational symmetry order.
struct PlacedTile {
    int class_id = 0;
    int rotation = 0;

    friend bool operator==(const PlacedTile& a, const PlacedTile& b) {
        return a.class_id == b.class_id && a.rotation == b.rotation;
    }
};

PlacedTile make_placed(const TileData& realized);     // canonical (class, rotation)
TileData realize(const PlacedTile& p);                // catalog tile rotated into place
PlacedTile rotate_placed(const PlacedTile& p, int k);

// Semantic bindings for the tiles the constructions rely on.  The catalog is
// generated, so the anchors are described by structure:
//   three_arc_zero_a/b   the two crossing-free three-arc classes
//   one_crossing_a/b     the two three-arc one-crossing classes (same shadow)
//   two_crossing_mixed   the two-crossing class whose long strand alternates
//   cyclic_a/b           the two alternating three-crossing classes
//   stack_a/b            the remaining (stacked) three-crossing classes
struct NamedTiles {
    int blank;
    int three_arc_zero_a, three_arc_zero_b; // paper's 16 and 17
    int one_crossing_a, one_crossing_b;     // paper's 18 and 19
    int two_crossing_mixed;                 // paper's 20
    int cyclic_a, cyclic_b;                 // paper's 26 and 25
    int stack_a, stack_b;                   // paper's 23 and 24
};

const NamedTiles& named_tiles();

} // namespace hexmosaic
