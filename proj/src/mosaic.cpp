#include "hexmosaic/mosaic.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hexmosaic/arrangement.hpp"

namespace hexmosaic {

TileData Mosaic::tile_at(const HexCoord& c) const {
    auto it = placement.find(c);
    if (it == placement.end()) return TileData{};
    return realize(it->second);
}

bool Mosaic::uses_point(const HexCoord& c, int e) const {
    auto it = placement.find(c);
    if (it == placement.end()) return false;
    return realize(it->second).uses_point(((e % 6) + 6) % 6);
}

void Mosaic::set_tile(const HexCoord& c, const TileData& t) {
    if (t.arcs.empty()) placement.erase(c);
    else placement[c] = make_placed(t);
}

void Mosaic::clear_tile(const HexCoord& c) { placement.erase(c); }

std::string Violation::describe() const {
    std::ostringstream os;
    os << "(" << coord.q << "," << coord.s << ")";
    switch (kind) {
        case OffBoard: os << " tile off the board"; break;
        case EdgeMismatch: os << " edge " << dir << " connection mismatch"; break;
        case BoundaryUsed: os << " edge " << dir << " reaches the board boundary"; break;
        case BoundaryCrossing: os << " crossing on a boundary tile"; break;
    }
    return os.str();
}

std::vector<Violation> validate(const Mosaic& m) {
    std::vector<Violation> out;
    int r = m.radius;
    for (const auto& [c, p] : m.placement)
        if (!board::on_board(c, r)) out.push_back({Violation::OffBoard, c, -1});

    for (const HexCoord& c : board::coords(r)) {
        TileData t = m.tile_at(c);
        if (board::classify(c, r) == TileRegion::Boundary && t.crossing_count() > 0)
            out.push_back({Violation::BoundaryCrossing, c, -1});
        for (int e = 0; e < 6; ++e) {
            bool used = t.uses_point(e);
            HexCoord n = board::neighbor(c, e);
            if (!board::on_board(n, r)) {
                if (used) out.push_back({Violation::BoundaryUsed, c, e});
                continue;
            }
            if (n < c) continue; // each interior edge once
            bool nused = m.uses_point(n, (e + 3) % 6);
            if (used != nused) out.push_back({Violation::EdgeMismatch, c, e});
        }
    }
    return out;
}

bool is_valid(const Mosaic& m) { return validate(m).empty(); }

void require_valid(const Mosaic& m) {
    auto v = validate(m);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid mosaic:";
    for (size_t i = 0; i < v.size() && i < 8; ++i) os << " " << v[i].describe() << ";";
    if (v.size() > 8) os << " ...";
    throw MosaicError(os.str());
}

std::vector<Strand> trace_strands(const Mosaic& m) {
    require_valid(m);
    std::vector<Strand> out;
    // key: (coord, arc index); value marks traversal
    std::set<std::pair<HexCoord, int>> visited;

    std::vector<HexCoord> coords;
    for (const auto& [c, p] : m.placement) coords.push_back(c);

    for (const HexCoord& c0 : coords) {
        TileData t0 = m.tile_at(c0);
        for (int k0 = 0; k0 < t0.arc_count(); ++k0) {
            if (visited.count({c0, k0})) continue;
            Strand s;
            HexCoord c = c0;
            int k = k0;
            int enter = t0.arcs[k0].a;
            while (true) {
                TileData t = m.tile_at(c);
                visited.insert({c, k});
                int exit = t.arcs[k].uses(enter) ? (t.arcs[k].a == enter ? t.arcs[k].b : t.arcs[k].a) : -1;
                if (exit < 0) throw MosaicError("strand trace lost its arc");
                s.steps.push_back({c, k, enter, exit});
                const TileArrangement& arr = arrangement_for(t);
                s.crossings_touched += static_cast<int>(arr.arc_xseq[k].size());
                HexCoord n = board::neighbor(c, exit);
                int np = (exit + 3) % 6;
                TileData nt = m.tile_at(n);
                int nk = -1;
                for (int i = 0; i < nt.arc_count(); ++i)
                    if (nt.arcs[i].uses(np)) nk = i;
                if (nk < 0) throw MosaicError("strand trace fell off the link");
                if (n == c0 && nk == k0 && np == t0.arcs[k0].a) break;
                c = n;
                k = nk;
                enter = np;
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

int component_count(const Mosaic& m) { return static_cast<int>(trace_strands(m).size()); }

std::vector<EdgeId> interface_points(int radius) {
    std::vector<EdgeId> out;
    for (const HexCoord& b : board::ring(radius - 1)) {
        std::vector<int> inward;
        for (int e = 0; e < 6; ++e)
            if (board::dist(board::neighbor(b, e)) == radius - 2) inward.push_back(e);
        // order the tile's inward edges counterclockwise around the board
        std::sort(inward.begin(), inward.end(), [&](int a, int c) {
            return cross_sign(board::edge_point(b, a), board::edge_point(b, c)) > 0;
        });
        for (int e : inward) out.push_back({b, e});
    }
    return out;
}

namespace {

// route the pair (x, y) of cyclically consecutive used interface points
// through the boundary corona, collecting arcs per boundary tile
void route_pair(const EdgeId& x, const EdgeId& y, std::map<HexCoord, std::vector<Arc>>& arcs) {
    if (x.coord == y.coord) {
        arcs[x.coord].emplace_back(x.dir, y.dir);
        return;
    }
    // walk the ring from x.coord to y.coord counterclockwise
    std::vector<HexCoord> ring_order; // path of ring tiles
    HexCoord cur = x.coord;
    ring_order.push_back(cur);
    // counterclockwise neighbor on the ring: among the ring-adjacent tiles,
    // the one whose angle continues CCW: derived by walking board::ring once
    static std::map<std::pair<int, HexCoord>, HexCoord> next_cache;
    int t = board::dist(x.coord);
    auto key = std::make_pair(t, cur);
    if (!next_cache.count(key)) {
        auto ring = board::ring(t);
        for (size_t i = 0; i < ring.size(); ++i)
            next_cache[{t, ring[i]}] = ring[(i + 1) % ring.size()];
    }
    while (!(cur == y.coord)) {
        cur = next_cache.at({t, cur});
        ring_order.push_back(cur);
    }
    auto dir_to = [](const HexCoord& a, const HexCoord& b) {
        for (int e = 0; e < 6; ++e)
            if (board::neighbor(a, e) == b) return e;
        throw MosaicError("ring tiles not adjacent");
    };
    for (size_t i = 0; i < ring_order.size(); ++i) {
        int in = i == 0 ? x.dir : dir_to(ring_order[i], ring_order[i - 1]);
        int outp = i + 1 == ring_order.size() ? y.dir : dir_to(ring_order[i], ring_order[i + 1]);
        arcs[ring_order[i]].emplace_back(in, outp);
    }
}

Mosaic complete_with_pairing(const Mosaic& interior, const std::vector<EdgeId>& used, int phase) {
    Mosaic out = interior;
    std::map<HexCoord, std::vector<Arc>> arcs;
    int n = static_cast<int>(used.size());
    for (int i = phase; i < n + phase; i += 2)
        route_pair(used[i % n], used[(i + 1) % n], arcs);
    for (auto& [c, as] : arcs) {
        TileData t = make_tile(as);
        if (t.crossing_count() != 0) throw MosaicError("boundary routing produced a crossing");
        out.set_tile(c, t);
    }
    return out;
}

} // namespace

std::pair<Mosaic, Mosaic> boundary_completions(const Mosaic& interior) {
    int r = interior.radius;
    for (const auto& [c, p] : interior.placement)
        if (board::classify(c, r) == TileRegion::Boundary)
            throw MosaicError("interior already has boundary tiles");

    std::vector<EdgeId> used;
    for (const EdgeId& ip : interface_points(r)) {
        HexCoord inner = board::neighbor(ip.coord, ip.dir);
        if (interior.uses_point(inner, (ip.dir + 3) % 6)) used.push_back(ip);
    }
    if (used.size() % 2 != 0)
        throw MosaicError("odd number of used interface points; interior is not suitably connected");
    if (used.empty()) return {interior, interior};

    Mosaic a = complete_with_pairing(interior, used, 0);
    Mosaic b = complete_with_pairing(interior, used, 1);
    require_valid(a);
    require_valid(b);
    return {a, b};
}

bool is_saturated(const Mosaic& m) {
    for (const HexCoord& c : board::coords(m.radius))
        if (board::classify(c, m.radius) != TileRegion::Boundary)
            if (m.tile_at(c).crossing_count() != 3) return false;
    return true;
}

bool saturated_boundary(const Mosaic& m) {
    for (const EdgeId& ip : interface_points(m.radius)) {
        HexCoord inner = board::neighbor(ip.coord, ip.dir);
        if (!m.uses_point(inner, (ip.dir + 3) % 6)) return false;
    }
    return true;
}

int crossing_total(const Mosaic& m) {
    int n = 0;
    for (const auto& [c, p] : m.placement) n += realize(p).crossing_count();
    return n;
}

std::string write_mosaic(const Mosaic& m) {
    std::ostringstream os;
    os << "hexmosaic 1\n";
    os << "radius " << m.radius << "\n";
    for (const auto& [c, p] : m.placement)
        os << c.q << " " << c.s << " " << p.class_id << " " << p.rotation << "\n";
    return os.str();
}

Mosaic read_mosaic(const std::string& text) {
    std::istringstream is(text);
    std::string magic;
    int version = 0;
    if (!(is >> magic >> version) || magic != "hexmosaic" || version != 1)
        throw MosaicError("not a hexmosaic file");
    std::string key;
    Mosaic m;
    if (!(is >> key >> m.radius) || key != "radius" || m.radius < 1)
        throw MosaicError("bad radius line");
    int q, s, cls, rot;
    while (is >> q >> s >> cls >> rot) {
        if (cls < 0 || cls >= TileCatalog::instance().size()) throw MosaicError("bad class id");
        if (rot < 0 || rot > 5) throw MosaicError("bad rotation");
        if (cls == TileCatalog::instance().blank_id()) continue;
        m.placement[{q, s}] = make_placed(rotate_tile(TileCatalog::instance().tile(cls), rot));
    }
    return m;
}

Mosaic load_mosaic_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw MosaicError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return read_mosaic(ss.str());
}

void save_mosaic_file(const Mosaic& m, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw MosaicError("cannot write " + path);
    f << write_mosaic(m);
}

} // namespace hexmosaic
