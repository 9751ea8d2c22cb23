#include "hexmosaic/board.hpp"

#include <algorithm>

namespace hexmosaic {
namespace board {

std::vector<HexCoord> coords(int r) {
    if (r < 1) throw std::invalid_argument("board radius must be >= 1");
    std::vector<HexCoord> out;
    for (int s = -(r - 1); s <= r - 1; ++s)
        for (int q = -(r - 1); q <= r - 1; ++q) {
            HexCoord c{q, s};
            if (dist(c) <= r - 1) out.push_back(c);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HexCoord> ring(int t) {
    std::vector<HexCoord> out;
    if (t == 0) { out.push_back({0, 0}); return out; }
    HexCoord c{t, 0};
    for (int side = 0; side < 6; ++side)
        for (int step = 0; step < t; ++step) {
            out.push_back(c);
            c = neighbor(c, (side + 2) % 6);
        }
    return out;
}

} // namespace board
} // namespace hexmosaic
