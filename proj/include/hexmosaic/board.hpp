#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "geom.hpp"

namespace hexmosaic {

// Axial coordinate on the hex board.  q grows to the east, s grows to the
// south; the implied third cube coordinate is -q-s.  Flat edges face east
// and west, so a "row" (fixed s) is a horizontal line of tiles and one arc
// direction of a three-crossing tile is horizontal.
struct HexCoord {
    int q = 0;
    int s = 0;

    friend bool operator==(const HexCoord& a, const HexCoord& b) { return a.q == b.q && a.s == b.s; }
    friend bool operator!=(const HexCoord& a, const HexCoord& b) { return !(a == b); }
    friend bool operator<(const HexCoord& a, const HexCoord& b) {
        if (a.s != b.s) return a.s < b.s;
        return a.q < b.q;
    }
};

enum class TileRegion { Boundary, Penultimate, Central };

// Edge e of a tile, 0..5 counterclockwise starting from the east-facing
// edge.  EdgeId(c,e) and EdgeId(neighbor(c,e), (e+3)%6) are the same
// physical edge.
struct EdgeId {
    HexCoord coord;
    int dir = 0;

    friend bool operator==(const EdgeId& a, const EdgeId& b) { return a.coord == b.coord && a.dir == b.dir; }
    friend bool operator<(const EdgeId& a, const EdgeId& b) {
        if (!(a.coord == b.coord)) return a.coord < b.coord;
        return a.dir < b.dir;
    }
};

namespace board {

// hex distance from the origin
inline int dist(const HexCoord& c) {
    return (std::abs(c.q) + std::abs(c.s) + std::abs(c.q + c.s)) / 2;
}

inline HexCoord neighbor(const HexCoord& c, int e) {
    static const int dq[6] = {+1, +1, 0, -1, -1, 0};
    static const int ds[6] = {0, -1, -1, 0, +1, +1};
    e = ((e % 6) + 6) % 6;
    return {c.q + dq[e], c.s + ds[e]};
}

inline bool on_board(const HexCoord& c, int r) { return dist(c) <= r - 1; }

std::vector<HexCoord> coords(int r); // all tiles of a radius-r board, sorted

inline TileRegion classify(const HexCoord& c, int r) {
    int d = dist(c);
    if (d > r - 1) throw std::out_of_range("tile is off the board");
    if (d == r - 1) return TileRegion::Boundary;
    if (r == 2) return TileRegion::Central; // degenerate board: no penultimate corona
    if (d == r - 2) return TileRegion::Penultimate;
    return TileRegion::Central;
}

inline bool is_corner(const HexCoord& c) {
    if (dist(c) < 1) return false;
    return c.q == 0 || c.s == 0 || c.q + c.s == 0;
}

// the corona of radius t >= 1 in counterclockwise order, starting at (t, 0)
std::vector<HexCoord> ring(int t);

// geometric anchors, on the (u,v) = (u*sqrt(3), v) lattice
inline RPt center(const HexCoord& c) { return RPt(4 * c.q + 2 * c.s, -6 * c.s); }

// midpoint of edge e
inline RPt edge_point(const HexCoord& c, int e) {
    static const int du[6] = {+2, +1, -1, -2, -1, +1};
    static const int dv[6] = {0, +3, +3, 0, -3, -3};
    e = ((e % 6) + 6) % 6;
    RPt p = center(c);
    return {p.u + Frac(du[e]), p.v + Frac(dv[e])};
}

// corner k sits between edges k and k+1
inline RPt corner_point(const HexCoord& c, int k) {
    static const int du[6] = {+2, 0, -2, -2, 0, +2};
    static const int dv[6] = {+2, +4, +2, -2, -4, -2};
    k = ((k % 6) + 6) % 6;
    RPt p = center(c);
    return {p.u + Frac(du[k]), p.v + Frac(dv[k])};
}

} // namespace board
} // namespace hexmosaic
