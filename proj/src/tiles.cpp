#include "hexmosaic/tiles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hexmosaic {

bool TileData::uses_point(int p) const {
    for (const Arc& a : arcs)
        if (a.uses(p)) return true;
    return false;
}

bool TileData::over(int i, int j) const {
    if (i > j) return !over(j, i);
    for (const TileCrossing& c : crossings)
        if (c.i == i && c.j == j) return c.first_over;
    throw std::logic_error("arcs do not cross");
}

std::string TileData::encode() const {
    std::ostringstream os;
    for (const Arc& a : arcs) os << a.a << a.b;
    os << '|';
    for (const TileCrossing& c : crossings) os << c.i << c.j << (c.first_over ? 'o' : 'u');
    return os.str();
}

TileData make_tile(std::vector<Arc> arcs, const std::vector<std::pair<std::pair<int,int>,bool>>& overs) {
    std::sort(arcs.begin(), arcs.end());
    TileData t;
    t.arcs = std::move(arcs);
    for (int i = 0; i < t.arc_count(); ++i)
        for (int j = i + 1; j < t.arc_count(); ++j)
            if (arcs_cross(t.arcs[i], t.arcs[j])) {
                bool fo = true;
                bool found = false;
                for (const auto& [pr, flag] : overs)
                    if ((pr.first == i && pr.second == j) || (pr.first == j && pr.second == i)) {
                        fo = pr.first == i ? flag : !flag;
                        found = true;
                    }
                (void)found;
                t.crossings.push_back({i, j, fo});
            }
    return t;
}

TileData rotate_tile(const TileData& t, int k) {
    k = ((k % 6) + 6) % 6;
    std::vector<Arc> rot;
    rot.reserve(t.arcs.size());
    for (const Arc& a : t.arcs) rot.emplace_back((a.a + k) % 6, (a.b + k) % 6);
    // remember where each old arc went after sorting
    std::vector<int> order(rot.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return rot[x] < rot[y]; });
    std::vector<int> newpos(rot.size());
    for (size_t n = 0; n < order.size(); ++n) newpos[order[n]] = static_cast<int>(n);

    TileData out;
    out.arcs.resize(rot.size());
    for (size_t i = 0; i < rot.size(); ++i) out.arcs[newpos[i]] = rot[i];
    for (const TileCrossing& c : t.crossings) {
        int ni = newpos[c.i], nj = newpos[c.j];
        TileCrossing nc;
        nc.i = std::min(ni, nj);
        nc.j = std::max(ni, nj);
        nc.first_over = (ni < nj) ? c.first_over : !c.first_over;
        out.crossings.push_back(nc);
    }
    std::sort(out.crossings.begin(), out.crossings.end(), [](const TileCrossing& a, const TileCrossing& b) {
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return out;
}

TileData canonical_tile(const TileData& t) {
    TileData best = rotate_tile(t, 0);
    std::string bestEnc = best.encode();
    for (int k = 1; k < 6; ++k) {
        TileData cand = rotate_tile(t, k);
        std::string enc = cand.encode();
        if (enc < bestEnc) { best = cand; bestEnc = enc; }
    }
    return best;
}

int tile_symmetry_order(const TileData& t) {
    int n = 0;
    for (int k = 0; k < 6; ++k)
        if (rotate_tile(t, k) == t) ++n;
    return n;
}

namespace {

// enumerate arc sets where each point is used at most once, allowing unused
// points anywhere (not only a prefix)
void arc_sets_rec(int next, unsigned used, std::vector<Arc>& cur, std::vector<std::vector<Arc>>& out) {
    if (next == 6) { out.push_back(cur); return; }
    if (used & (1u << next)) { arc_sets_rec(next + 1, used, cur, out); return; }
    // leave `next` unused
    arc_sets_rec(next + 1, used, cur, out);
    // or pair it with a later free point
    for (int q = next + 1; q < 6; ++q) {
        if (used & (1u << q)) continue;
        cur.emplace_back(next, q);
        arc_sets_rec(next + 1, used | (1u << next) | (1u << q), cur, out);
        cur.pop_back();
    }
}

} // namespace

TileCatalog::TileCatalog() {
    std::vector<std::vector<Arc>> shapes;
    std::vector<Arc> cur;
    arc_sets_rec(0, 0u, cur, shapes);

    std::vector<TileData> all;
    for (auto& arcs : shapes) {
        TileData base = make_tile(arcs);
        int nc = base.crossing_count();
        for (unsigned mask = 0; mask < (1u << nc); ++mask) {
            TileData t = base;
            for (int b = 0; b < nc; ++b) t.crossings[b].first_over = (mask >> b) & 1u;
            all.push_back(canonical_tile(t));
        }
    }
    std::sort(all.begin(), all.end(), [](const TileData& a, const TileData& b) {
        if (a.arc_count() != b.arc_count()) return a.arc_count() < b.arc_count();
        if (a.crossing_count() != b.crossing_count()) return a.crossing_count() < b.crossing_count();
        return a.encode() < b.encode();
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());

    for (const TileData& t : all) {
        Entry e;
        e.canonical = t;
        e.symmetry = tile_symmetry_order(t);
        index_[t.encode()] = static_cast<int>(entries_.size());
        if (t.arcs.empty()) blank_ = static_cast<int>(entries_.size());
        entries_.push_back(std::move(e));
    }
}

const TileCatalog& TileCatalog::instance() {
    static const TileCatalog cat;
    return cat;
}

std::pair<int, int> TileCatalog::identify(const TileData& t) const {
    TileData canon = canonical_tile(t);
    auto it = index_.find(canon.encode());
    if (it == index_.end()) throw std::logic_error("tile not in catalog: " + t.encode());
    int id = it->second;
    for (int k = 0; k < 6; ++k)
        if (rotate_tile(entries_[id].canonical, k) == t) return {id, k};
    throw std::logic_error("rotation lookup failed for " + t.encode());
}

PlacedTile make_placed(const TileData& realized) {
    // identify() returns the smallest rotation producing `realized`, which is
    // already the canonical representative modulo the class symmetry
    auto [id, rot] = TileCatalog::instance().identify(realized);
    return {id, rot};
}

TileData realize(const PlacedTile& p) {
    return rotate_tile(TileCatalog::instance().tile(p.class_id), p.rotation);
}

PlacedTile rotate_placed(const PlacedTile& p, int k) {
    return make_placed(rotate_tile(realize(p), k));
}

namespace {

NamedTiles compute_named() {
    const TileCatalog& cat = TileCatalog::instance();
    NamedTiles n{};
    n.blank = cat.blank_id();

    std::vector<int> zero3, one3, two3, three3;
    for (int id = 0; id < cat.size(); ++id) {
        const TileData& t = cat.tile(id);
        if (t.arc_count() != 3) continue;
        switch (t.crossing_count()) {
            case 0: zero3.push_back(id); break;
            case 1: one3.push_back(id); break;
            case 2: two3.push_back(id); break;
            case 3: three3.push_back(id); break;
        }
    }
    if (zero3.size() != 2 || one3.size() != 2 || two3.size() != 3 || three3.size() != 4)
        throw std::logic_error("unexpected three-arc class counts");

    n.three_arc_zero_a = zero3[0];
    n.three_arc_zero_b = zero3[1];
    n.one_crossing_a = one3[0];
    n.one_crossing_b = one3[1];

    // the two-crossing class whose doubly-crossed strand goes over once and
    // under once; the other two have it over twice or under twice
    n.two_crossing_mixed = -1;
    for (int id : two3) {
        const TileData& t = cat.tile(id);
        // find the arc involved in both crossings
        int shared = -1;
        for (int a = 0; a < 3; ++a) {
            int deg = 0;
            for (const TileCrossing& c : t.crossings)
                if (c.i == a || c.j == a) ++deg;
            if (deg == 2) shared = a;
        }
        if (shared < 0) throw std::logic_error("two-crossing tile without a shared strand");
        bool o1 = t.crossings[0].i == shared ? t.crossings[0].first_over : !t.crossings[0].first_over;
        bool o2 = t.crossings[1].i == shared ? t.crossings[1].first_over : !t.crossings[1].first_over;
        if (o1 != o2) {
            if (n.two_crossing_mixed >= 0) throw std::logic_error("two mixed two-crossing classes");
            n.two_crossing_mixed = id;
        }
    }
    if (n.two_crossing_mixed < 0) throw std::logic_error("no mixed two-crossing class");

    // three-crossing classes: cyclic (each strand over once, under once)
    // versus stacked (some strand over twice)
    std::vector<int> cyclic, stack;
    for (int id : three3) {
        const TileData& t = cat.tile(id);
        bool is_cyclic = true;
        for (int a = 0; a < 3 && is_cyclic; ++a) {
            int overs = 0;
            for (const TileCrossing& c : t.crossings) {
                if (c.i == a) overs += c.first_over ? 1 : 0;
                if (c.j == a) overs += c.first_over ? 0 : 1;
            }
            if (overs != 1) is_cyclic = false;
        }
        (is_cyclic ? cyclic : stack).push_back(id);
    }
    if (cyclic.size() != 2 || stack.size() != 2) throw std::logic_error("unexpected three-crossing split");
    n.cyclic_a = cyclic[0];
    n.cyclic_b = cyclic[1];
    n.stack_a = stack[0];
    n.stack_b = stack[1];
    return n;
}

} // namespace

const NamedTiles& named_tiles() {
    static const NamedTiles n = compute_named();
    return n;
}

} // namespace hexmosaic
