#include "hexmosaic/arrangement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hexmosaic {

namespace {

// local connection points and corners; see board.hpp for the global copies
const RPt kEdgePt[6] = {{2, 0}, {1, 3}, {-1, 3}, {-2, 0}, {-1, -3}, {1, -3}};
const RPt kCornerPt[6] = {{2, 2}, {0, 4}, {-2, 2}, {-2, -2}, {0, -4}, {2, -2}};

} // namespace

std::vector<RPt> arc_polyline(const Arc& a) {
    std::vector<RPt> pts;
    pts.push_back(kEdgePt[a.a]);
    if (a.is_diagonal()) {
        // bend sideways so concurrent diagonals cross pairwise; the bend
        // direction fixes how the three-diagonal tile's little triangle is
        // drawn, matching the classical tile pictures
        static const RPt bend[3] = {
            {Frac(0), Frac(1, 4)},
            {Frac(-1, 8), Frac(1, 8)},
            {Frac(-1, 8), Frac(-1, 8)},
        };
        pts.push_back(bend[a.a]);
    }
    pts.push_back(kEdgePt[a.b]);
    return pts;
}

namespace {

struct Builder {
    const TileData& tile;
    TileArrangement out;

    std::vector<RPt> verts;
    std::map<RPt, int> vert_index;

    struct Edge {
        int u, v;
        int kind;  // 0 = boundary half-side, 1 = chord piece
        int which; // half-side index, or chord piece index
    };
    std::vector<Edge> edges;

    explicit Builder(const TileData& t) : tile(t) { out.tile = t; }

    int vertex(const RPt& p) {
        auto it = vert_index.find(p);
        if (it != vert_index.end()) return it->second;
        int id = static_cast<int>(verts.size());
        verts.push_back(p);
        vert_index[p] = id;
        return id;
    }

    void build() {
        // hexagon boundary: 12 half-sides in CCW order
        for (int e = 0; e < 6; ++e) {
            int c_prev = vertex(kCornerPt[(e + 5) % 6]);
            int mid = vertex(kEdgePt[e]);
            int c_next = vertex(kCornerPt[e]);
            edges.push_back({c_prev, mid, 0, 2 * e});
            edges.push_back({mid, c_next, 0, 2 * e + 1});
        }

        // realized arc geometry
        int na = tile.arc_count();
        std::vector<std::vector<RPt>> poly(na);
        for (int i = 0; i < na; ++i) poly[i] = arc_polyline(tile.arcs[i]);

        // crossings: exactly one proper intersection per interleaving pair
        out.arc_xseq.assign(na, {});
        struct Event { Frac t; int xid; };
        // events per (arc, segment)
        std::vector<std::vector<std::vector<Event>>> ev(na);
        for (int i = 0; i < na; ++i) ev[i].resize(poly[i].size() - 1);

        for (const TileCrossing& tc : tile.crossings) {
            RPt pos;
            bool found = false;
            int si = -1, sj = -1;
            for (size_t p = 0; p + 1 < poly[tc.i].size() && !found; ++p)
                for (size_t q = 0; q + 1 < poly[tc.j].size() && !found; ++q)
                    if (segment_intersection(poly[tc.i][p], poly[tc.i][p + 1],
                                             poly[tc.j][q], poly[tc.j][q + 1], pos)) {
                        found = true;
                        si = static_cast<int>(p);
                        sj = static_cast<int>(q);
                    }
            if (!found) throw std::logic_error("interleaving arcs without geometric crossing");
            int xid = static_cast<int>(out.crossings.size());
            TileArrangement::Crossing x;
            x.ai = tc.i;
            x.aj = tc.j;
            x.first_over = tc.first_over;
            x.pos = pos;
            out.crossings.push_back(x);
            auto param = [&](const std::vector<RPt>& pl, int seg) {
                RPt d = pl[seg + 1] - pl[seg];
                RPt r = pos - pl[seg];
                return Frac(3) * d.u * r.u + d.v * r.v; // monotone along the segment
            };
            ev[tc.i][si].push_back({param(poly[tc.i], si), xid});
            ev[tc.j][sj].push_back({param(poly[tc.j], sj), xid});
        }

        // chord pieces, subdividing each polyline at its crossings
        for (int i = 0; i < na; ++i) {
            RPt prev = poly[i][0];
            for (size_t seg = 0; seg + 1 < poly[i].size(); ++seg) {
                auto& evs = ev[i][seg];
                std::sort(evs.begin(), evs.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
                for (const Event& e : evs) {
                    add_piece(i, prev, out.crossings[e.xid].pos);
                    out.arc_xseq[i].push_back(e.xid);
                    prev = out.crossings[e.xid].pos;
                }
                add_piece(i, prev, poly[i][seg + 1]);
                prev = poly[i][seg + 1];
            }
        }

        faces();
    }

    void add_piece(int arc, const RPt& a, const RPt& b) {
        TileArrangement::ChordPiece p;
        p.arc = arc;
        p.a = a;
        p.b = b;
        int which = static_cast<int>(out.pieces.size());
        out.pieces.push_back(p);
        edges.push_back({vertex(a), vertex(b), 1, which});
    }

    void faces() {
        int ne = static_cast<int>(edges.size());
        // darts: 2*e (u->v) and 2*e+1 (v->u)
        auto tail = [&](int d) { return d & 1 ? edges[d >> 1].v : edges[d >> 1].u; };
        auto head = [&](int d) { return d & 1 ? edges[d >> 1].u : edges[d >> 1].v; };
        auto dirv = [&](int d) { return verts[head(d)] - verts[tail(d)]; };

        std::vector<std::vector<int>> at(verts.size());
        for (int d = 0; d < 2 * ne; ++d) at[tail(d)].push_back(d);
        for (auto& lst : at)
            std::sort(lst.begin(), lst.end(), [&](int a, int b) { return dir_less(dirv(a), dirv(b)); });
        std::vector<int> pos_at(2 * ne);
        for (auto& lst : at)
            for (size_t k = 0; k < lst.size(); ++k) pos_at[lst[k]] = static_cast<int>(k);

        auto next_left = [&](int d) {
            int r = d ^ 1; // reversed dart, leaving head(d)
            const auto& lst = at[tail(r)];
            int k = pos_at[r];
            return lst[(k + lst.size() - 1) % lst.size()];
        };

        std::vector<int> face_of(2 * ne, -1);
        std::vector<std::vector<int>> walks;
        for (int d0 = 0; d0 < 2 * ne; ++d0) {
            if (face_of[d0] >= 0) continue;
            std::vector<int> walk;
            int d = d0;
            do {
                face_of[d] = static_cast<int>(walks.size());
                walk.push_back(d);
                d = next_left(d);
            } while (d != d0);
            walks.push_back(std::move(walk));
        }

        // the outer face is left of the clockwise boundary dart corner0 -> mid0
        int outer = -1;
        for (int d = 0; d < 2 * ne; ++d) {
            const Edge& e = edges[d >> 1];
            if (e.kind == 0 && e.which == 1 && tail(d) == vert_index[kCornerPt[0]]) { outer = face_of[d]; break; }
        }
        if (outer < 0) throw std::logic_error("outer face not found");

        std::vector<int> frag_of_walk(walks.size(), -1);
        int nf = 0;
        for (size_t w = 0; w < walks.size(); ++w)
            if (static_cast<int>(w) != outer) frag_of_walk[w] = nf++;
        out.fragment_count = nf;
        out.frag_crossings.assign(nf, {});

        auto frag_of_dart = [&](int d) { return frag_of_walk[face_of[d]]; };

        for (int e = 0; e < ne; ++e) {
            if (edges[e].kind == 0) {
                // inner side of a CCW boundary dart
                out.halfside_frag[edges[e].which] = frag_of_dart(2 * e);
            } else {
                auto& p = out.pieces[edges[e].which];
                // dart 2e runs a->b which is the arc's forward direction
                p.frag_left = frag_of_dart(2 * e);
                p.frag_right = frag_of_dart(2 * e + 1);
            }
        }

        // per-crossing dart atlas in CCW order
        std::vector<char> seen(out.fragment_count, 0);
        for (size_t xi = 0; xi < out.crossings.size(); ++xi) {
            auto& x = out.crossings[xi];
            int v = vert_index[x.pos];
            const auto& lst = at[v];
            if (lst.size() != 4) throw std::logic_error("crossing is not 4-valent");
            for (int k = 0; k < 4; ++k) {
                int d = lst[k];
                const Edge& e = edges[d >> 1];
                const auto& piece = out.pieces[e.which];
                x.dart_arc[k] = piece.arc;
                // heading toward arc.b iff the dart runs in the piece's forward direction
                bool forward = !(d & 1);
                x.dart_toward[k] = forward ? tile.arcs[piece.arc].b : tile.arcs[piece.arc].a;
                x.corner_frag[k] = frag_of_dart(d);
            }
            if (x.dart_arc[0] != x.dart_arc[2] || x.dart_arc[1] != x.dart_arc[3])
                throw std::logic_error("crossing strands are not opposite");
            for (int k = 0; k < 4; ++k) {
                int f = x.corner_frag[k];
                if (!seen[f]) { seen[f] = 1; out.frag_crossings[f].push_back(static_cast<int>(xi)); }
            }
            for (int k = 0; k < 4; ++k) seen[x.corner_frag[k]] = 0;
        }
    }
};

} // namespace

std::pair<int, int> TileArrangement::arc_sides_local(int arc_index) const {
    for (const ChordPiece& p : pieces)
        if (p.arc == arc_index) return {p.frag_left, p.frag_right};
    throw std::logic_error("arc has no pieces");
}

const TileArrangement& arrangement_for(const TileData& tile) {
    static std::map<std::string, TileArrangement> cache;
    auto key = tile.encode();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Builder b(tile);
    b.build();
    auto [pos, inserted] = cache.emplace(key, std::move(b.out));
    (void)inserted;
    return pos->second;
}

} // namespace hexmosaic
