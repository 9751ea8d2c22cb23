#include "hexmosaic/complement.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hexmosaic/arrangement.hpp"
#include "hexmosaic/families.hpp"

namespace hexmosaic {

namespace {

void noncrossing_matchings(std::vector<int> pts, std::vector<Arc> cur,
                           std::vector<std::vector<Arc>>& out) {
    if (pts.empty()) { out.push_back(cur); return; }
    int a = pts.front();
    for (size_t i = 1; i < pts.size(); ++i) {
        Arc cand(a, pts[i]);
        bool crosses = false;
        for (const Arc& c : cur)
            if (arcs_cross(cand, c)) crosses = true;
        if (crosses) continue;
        std::vector<int> rest;
        for (size_t j = 1; j < pts.size(); ++j)
            if (j != i) rest.push_back(pts[j]);
        cur.push_back(cand);
        noncrossing_matchings(rest, cur, out);
        cur.pop_back();
    }
}

} // namespace

TileData tile_with_complement(const TileData& link_tile) {
    std::vector<int> unused;
    for (int p = 0; p < 6; ++p)
        if (!link_tile.uses_point(p)) unused.push_back(p);
    if (unused.empty()) return link_tile;

    std::vector<std::vector<Arc>> options;
    noncrossing_matchings(unused, {}, options);
    if (options.empty()) throw MosaicError("no complement matching");

    // canonical choice: fewest crossings with the link, then the
    // lexicographically smallest arc list
    auto score = [&](const std::vector<Arc>& comp) {
        int crossings = 0;
        for (const Arc& c : comp)
            for (const Arc& l : link_tile.arcs)
                if (arcs_cross(c, l)) ++crossings;
        return crossings;
    };
    std::sort(options.begin(), options.end(),
              [&](const std::vector<Arc>& a, const std::vector<Arc>& b) {
                  int sa = score(a), sb = score(b);
                  if (sa != sb) return sa < sb;
                  return a < b;
              });
    const std::vector<Arc>& comp = options.front();

    // merge, complement under the link everywhere
    std::vector<std::pair<Arc, bool>> tagged; // arc, is_complement
    for (const Arc& a : link_tile.arcs) tagged.push_back({a, false});
    for (const Arc& a : comp) tagged.push_back({a, true});
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    TileData merged;
    for (auto& [a, isc] : tagged) merged.arcs.push_back(a);
    for (int i = 0; i < merged.arc_count(); ++i)
        for (int j = i + 1; j < merged.arc_count(); ++j)
            if (arcs_cross(merged.arcs[i], merged.arcs[j])) {
                bool iover;
                if (tagged[i].second == tagged[j].second) {
                    if (tagged[i].second) throw MosaicError("complement arcs may not cross");
                    iover = link_tile.over(static_cast<int>(std::find(link_tile.arcs.begin(),
                                                                      link_tile.arcs.end(),
                                                                      merged.arcs[i]) -
                                                            link_tile.arcs.begin()),
                                           static_cast<int>(std::find(link_tile.arcs.begin(),
                                                                      link_tile.arcs.end(),
                                                                      merged.arcs[j]) -
                                                            link_tile.arcs.begin()));
                } else {
                    iover = tagged[j].second; // the complement strand goes under
                }
                merged.crossings.push_back({i, j, iover});
            }
    return merged;
}

ComplementSet complement(const Mosaic& m) {
    require_valid(m);
    int r = m.radius;

    // per interior tile: complement chords
    std::map<HexCoord, std::vector<Arc>> chords;
    for (const HexCoord& c : board::coords(r)) {
        if (board::classify(c, r) == TileRegion::Boundary) continue;
        TileData link = m.tile_at(c);
        TileData merged = tile_with_complement(link);
        std::vector<Arc> extra;
        for (const Arc& a : merged.arcs)
            if (std::find(link.arcs.begin(), link.arcs.end(), a) == link.arcs.end())
                extra.push_back(a);
        if (!extra.empty()) chords[c] = extra;
    }

    ComplementSet out;
    std::set<std::pair<HexCoord, Arc>> visited;

    auto chord_using = [&](const HexCoord& c, int p) -> const Arc* {
        auto it = chords.find(c);
        if (it == chords.end()) return nullptr;
        for (const Arc& a : it->second)
            if (a.uses(p)) return &a;
        return nullptr;
    };

    // arcs first: seeded at interface points, in interface order
    for (const EdgeId& ip : interface_points(r)) {
        HexCoord c = board::neighbor(ip.coord, ip.dir);
        int p = (ip.dir + 3) % 6;
        const Arc* a = chord_using(c, p);
        if (!a || visited.count({c, *a})) continue;
        ComplementPath path;
        HexCoord cur = c;
        int enter = p;
        const Arc* arc = a;
        while (true) {
            visited.insert({cur, *arc});
            int exit = arc->a == enter ? arc->b : arc->a;
            path.steps.push_back({cur, enter, exit});
            HexCoord next = board::neighbor(cur, exit);
            if (board::classify(next, r) == TileRegion::Boundary) break;
            cur = next;
            enter = (exit + 3) % 6;
            arc = chord_using(cur, enter);
            if (!arc) throw MosaicError("complement strand broke");
        }
        out.arcs.push_back(std::move(path));
    }

    // the rest are loops
    for (const auto& [c, as] : chords)
        for (const Arc& a0 : as) {
            if (visited.count({c, a0})) continue;
            ComplementPath path;
            path.closed = true;
            HexCoord cur = c;
            int enter = a0.a;
            const Arc* arc = &a0;
            while (true) {
                visited.insert({cur, *arc});
                int exit = arc->a == enter ? arc->b : arc->a;
                path.steps.push_back({cur, enter, exit});
                HexCoord next = board::neighbor(cur, exit);
                int np = (exit + 3) % 6;
                if (next == c && np == a0.a) break;
                cur = next;
                enter = np;
                arc = chord_using(cur, enter);
                if (!arc) throw MosaicError("complement loop broke");
            }
            out.loops.push_back(std::move(path));
        }
    return out;
}

// --- sides of an arc -------------------------------------------------------

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

ArcSides arc_sides(const Mosaic& m, const ComplementPath& arc) {
    int r = m.radius;
    std::vector<HexCoord> cells;
    for (const HexCoord& c : board::coords(r))
        if (board::classify(c, r) != TileRegion::Boundary) cells.push_back(c);
    std::map<HexCoord, int> cell_index;
    for (size_t i = 0; i < cells.size(); ++i) cell_index[cells[i]] = static_cast<int>(i);

    // chords of the cut, per tile
    std::map<HexCoord, std::vector<Arc>> walls;
    for (const ComplementStep& st : arc.steps) walls[st.tile].push_back(Arc(st.enter, st.exit));

    std::vector<const TileArrangement*> arr(cells.size());
    std::vector<int> fbase(cells.size());
    int nf = 0;
    for (size_t i = 0; i < cells.size(); ++i) {
        TileData merged = tile_with_complement(m.tile_at(cells[i]));
        arr[i] = &arrangement_for(merged);
        fbase[i] = nf;
        nf += arr[i]->fragment_count;
    }

    UF uf(nf);
    for (size_t i = 0; i < cells.size(); ++i) {
        // merge fragments inside the tile across everything but the cut
        const auto& walls_here = walls.count(cells[i]) ? walls.at(cells[i]) : std::vector<Arc>{};
        for (const auto& piece : arr[i]->pieces) {
            Arc chord = arr[i]->tile.arcs[piece.arc];
            bool is_wall = std::find(walls_here.begin(), walls_here.end(), chord) != walls_here.end();
            if (!is_wall) uf.unite(fbase[i] + piece.frag_left, fbase[i] + piece.frag_right);
        }
        // glue across interior-interior edges
        for (int e = 0; e < 6; ++e) {
            HexCoord n = board::neighbor(cells[i], e);
            if (!cell_index.count(n) || n < cells[i]) continue;
            size_t j = cell_index[n];
            for (int half = 0; half < 2; ++half) {
                int h_here = 2 * e + half;
                int h_there = 2 * ((e + 3) % 6) + (1 - half);
                uf.unite(fbase[i] + arr[i]->halfside_frag[h_here],
                         fbase[j] + arr[j]->halfside_frag[h_there]);
            }
        }
    }

    std::map<int, int> side_of_root;
    for (int f = 0; f < nf; ++f) {
        int root = uf.find(f);
        if (!side_of_root.count(root)) side_of_root[root] = static_cast<int>(side_of_root.size());
    }
    if (side_of_root.size() != 2)
        throw MosaicError("arc does not cut the interior into two pieces");

    ArcSides sides;
    std::vector<std::vector<HexCoord>> strict(2);
    for (size_t i = 0; i < cells.size(); ++i) {
        std::set<int> seen;
        for (int f = 0; f < arr[i]->fragment_count; ++f) seen.insert(side_of_root[uf.find(fbase[i] + f)]);
        if (seen.size() == 1) strict[*seen.begin()].push_back(cells[i]);
    }
    if (strict[0].size() == strict[1].size())
        throw AmbiguousSidesError("arc sides have equal tile counts");
    int small = strict[0].size() < strict[1].size() ? 0 : 1;
    sides.outside = strict[small];
    sides.inside = strict[1 - small];
    return sides;
}

// --- the lprime rebuild ------------------------------------------------------

namespace {

// interface pairing of a valid mosaic: which interface points connect
// through the boundary corona, as index pairs into interface_points(r)
std::vector<std::pair<int, int>> boundary_pairing(const Mosaic& m) {
    auto pts = interface_points(m.radius);
    std::map<std::pair<HexCoord, int>, int> index;
    for (size_t i = 0; i < pts.size(); ++i) index[{pts[i].coord, pts[i].dir}] = static_cast<int>(i);

    std::vector<std::pair<int, int>> pairs;
    std::set<int> done;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (done.count(static_cast<int>(i))) continue;
        HexCoord inner = board::neighbor(pts[i].coord, pts[i].dir);
        if (!m.uses_point(inner, (pts[i].dir + 3) % 6)) continue;
        // walk through the boundary corona
        HexCoord cur = pts[i].coord;
        int enter = (pts[i].dir + 3) % 6;
        while (true) {
            TileData t = m.tile_at(cur);
            int k = -1;
            for (int a = 0; a < t.arc_count(); ++a)
                if (t.arcs[a].uses(enter)) k = a;
            if (k < 0) throw MosaicError("boundary strand broke");
            int exit = t.arcs[k].a == enter ? t.arcs[k].b : t.arcs[k].a;
            HexCoord next = board::neighbor(cur, exit);
            if (board::classify(next, m.radius) != TileRegion::Boundary) {
                int j = index.at({cur, exit});
                pairs.push_back({static_cast<int>(i), j});
                done.insert(j);
                break;
            }
            cur = next;
            enter = (exit + 3) % 6;
        }
    }
    return pairs;
}

Mosaic strip_boundary(const Mosaic& m) {
    Mosaic out;
    out.radius = m.radius;
    for (const auto& [c, p] : m.placement)
        if (board::classify(c, m.radius) != TileRegion::Boundary) out.placement[c] = p;
    return out;
}

} // namespace

Mosaic build_lprime(const Mosaic& m) {
    require_valid(m);
    Mosaic cur = m;
    int guard = 0;
    while (true) {
        if (++guard > 200) throw MosaicError("lprime rebuild did not terminate");
        ComplementSet comp = complement(cur);
        if (comp.arcs.empty() && comp.loops.empty()) break;

        // absorb every loop right away; they do not touch the boundary
        if (!comp.loops.empty()) {
            for (const ComplementPath& loop : comp.loops)
                for (const ComplementStep& st : loop.steps) {
                    TileData t = cur.tile_at(st.tile);
                    TileData merged = tile_with_complement(t);
                    // keep only the loop chord out of the complement choice
                    TileData next = t;
                    Arc chord(st.enter, st.exit);
                    std::vector<std::pair<Arc, bool>> all;
                    for (const Arc& a : t.arcs) all.push_back({a, false});
                    all.push_back({chord, true});
                    std::sort(all.begin(), all.end(),
                              [](const auto& x, const auto& y) { return x.first < y.first; });
                    TileData out;
                    for (auto& [a, isc] : all) out.arcs.push_back(a);
                    for (int i = 0; i < out.arc_count(); ++i)
                        for (int j = i + 1; j < out.arc_count(); ++j)
                            if (arcs_cross(out.arcs[i], out.arcs[j])) {
                                bool iover;
                                if (!all[i].second && !all[j].second) {
                                    int oi = -1, oj = -1;
                                    for (int k = 0; k < t.arc_count(); ++k) {
                                        if (t.arcs[k] == out.arcs[i]) oi = k;
                                        if (t.arcs[k] == out.arcs[j]) oj = k;
                                    }
                                    iover = t.over(oi, oj);
                                } else {
                                    iover = all[j].second;
                                }
                                out.crossings.push_back({i, j, iover});
                            }
                    (void)merged;
                    cur.set_tile(st.tile, out);
                }
            continue;
        }

        // order arcs by outside size, then by first interface position
        struct Cand { int outside; size_t idx; };
        std::vector<Cand> order;
        for (size_t i = 0; i < comp.arcs.size(); ++i) {
            ArcSides s = arc_sides(cur, comp.arcs[i]);
            order.push_back({static_cast<int>(s.outside.size()), i});
        }
        std::sort(order.begin(), order.end(), [](const Cand& a, const Cand& b) {
            if (a.outside != b.outside) return a.outside < b.outside;
            return a.idx < b.idx;
        });
        const ComplementPath& arc = comp.arcs[order.front().idx];
        ArcSides sides = arc_sides(cur, arc);
        std::set<HexCoord> inside_set(sides.inside.begin(), sides.inside.end());

        std::vector<std::pair<int, int>> old_pairs = boundary_pairing(cur);

        // add the arc to the interior
        Mosaic interior = strip_boundary(cur);
        for (const ComplementStep& st : arc.steps) {
            TileData t = interior.tile_at(st.tile);
            Arc chord(st.enter, st.exit);
            std::vector<std::pair<Arc, bool>> all;
            for (const Arc& a : t.arcs) all.push_back({a, false});
            all.push_back({chord, true});
            std::sort(all.begin(), all.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            TileData out;
            for (auto& [a, isc] : all) out.arcs.push_back(a);
            for (int i = 0; i < out.arc_count(); ++i)
                for (int j = i + 1; j < out.arc_count(); ++j)
                    if (arcs_cross(out.arcs[i], out.arcs[j])) {
                        bool iover;
                        if (!all[i].second && !all[j].second) {
                            int oi = -1, oj = -1;
                            for (int k = 0; k < t.arc_count(); ++k) {
                                if (t.arcs[k] == out.arcs[i]) oi = k;
                                if (t.arcs[k] == out.arcs[j]) oj = k;
                            }
                            iover = t.over(oi, oj);
                        } else {
                            iover = all[j].second;
                        }
                        out.crossings.push_back({i, j, iover});
                    }
            interior.set_tile(st.tile, out);
        }

        auto [ca, cb] = boundary_completions(interior);

        // the pairing of the interface cycle splits at the arc's endpoints;
        // keep the boundary fixed on the inside segment
        auto pts = interface_points(cur.radius);
        auto segment_side = [&](int idx) -> int {
            // 1 inside, 0 outside, -1 undetermined
            HexCoord inner = board::neighbor(pts[idx].coord, pts[idx].dir);
            if (inside_set.count(inner)) return 1;
            for (const HexCoord& c : sides.outside)
                if (c == inner) return 0;
            return -1;
        };
        auto preserves_inside = [&](const Mosaic& cand) {
            auto new_pairs = boundary_pairing(cand);
            std::set<std::pair<int, int>> np(new_pairs.begin(), new_pairs.end());
            for (auto& [x, y] : old_pairs) {
                if (segment_side(x) == 1 && segment_side(y) == 1)
                    if (!np.count({x, y}) && !np.count({y, x})) return false;
            }
            return true;
        };
        bool a_ok = preserves_inside(ca);
        bool b_ok = preserves_inside(cb);
        if (a_ok && !b_ok) cur = ca;
        else if (b_ok && !a_ok) cur = cb;
        else cur = ca; // both fix the inside (tiny instances): either works
    }
    if (!saturated_boundary(cur)) throw MosaicError("lprime rebuild left the boundary unsaturated");
    return cur;
}

// --- penultimate classification ---------------------------------------------

std::map<HexCoord, PenultimateType> classify_penultimate(const Mosaic& m) {
    if (!saturated_boundary(m)) throw MosaicError("penultimate types need a saturated boundary");
    int r = m.radius;
    std::map<HexCoord, PenultimateType> out;
    for (const HexCoord& c : board::coords(r)) {
        if (board::classify(c, r) != TileRegion::Penultimate) continue;
        if (board::is_corner(c)) { out[c] = PenultimateType::Corner; continue; }
        std::vector<int> bdirs;
        for (int e = 0; e < 6; ++e)
            if (board::classify(board::neighbor(c, e), r) == TileRegion::Boundary) bdirs.push_back(e);
        if (bdirs.size() != 2) throw MosaicError("non-corner penultimate tile with odd boundary contact");
        // follow the strand from the first boundary point through the corona
        HexCoord cur = board::neighbor(c, bdirs[0]);
        int enter = (bdirs[0] + 3) % 6;
        bool direct = false;
        while (true) {
            TileData t = m.tile_at(cur);
            int k = -1;
            for (int a = 0; a < t.arc_count(); ++a)
                if (t.arcs[a].uses(enter)) k = a;
            if (k < 0) throw MosaicError("boundary strand broke");
            int exit = t.arcs[k].a == enter ? t.arcs[k].b : t.arcs[k].a;
            HexCoord next = board::neighbor(cur, exit);
            if (board::classify(next, r) != TileRegion::Boundary) {
                direct = (next == c) && ((exit + 3) % 6 == bdirs[1]);
                break;
            }
            cur = next;
            enter = (exit + 3) % 6;
        }
        out[c] = direct ? PenultimateType::TypeII : PenultimateType::TypeI;
    }
    return out;
}

// --- the contribution ledger --------------------------------------------------

TileLedgerEntry delta_contribution(const Mosaic& m, const LinkDiagram& d, const HexCoord& c) {
    if (!polygonal_exterior(d))
        throw MosaicError("exterior boundary is not a union of polygons");
    TileLedgerEntry e;
    e.cr = m.tile_at(c).crossing_count();
    for (int v = 0; v < d.V(); ++v) {
        if (!(d.verts[v].tile == c)) continue;
        for (int s = 0; s < 4; ++s)
            if (d.corner_face(v, s) == d.exterior_face) { ++e.delta; break; }
    }
    return e;
}

std::map<HexCoord, TileLedgerEntry> delta_ledger(const Mosaic& m, const LinkDiagram& d) {
    if (!polygonal_exterior(d))
        throw MosaicError("exterior boundary is not a union of polygons");
    std::map<HexCoord, TileLedgerEntry> out;
    for (const auto& [c, p] : m.placement) out[c].cr = realize(p).crossing_count();
    for (int v = 0; v < d.V(); ++v) {
        for (int s = 0; s < 4; ++s)
            if (d.corner_face(v, s) == d.exterior_face) {
                ++out[d.verts[v].tile].delta;
                break;
            }
    }
    return out;
}

// --- the lhat rebuild -----------------------------------------------------------

namespace {

bool exterior_reaches_central(const Mosaic& m, const LinkDiagram& d) {
    for (int v = 0; v < d.V(); ++v) {
        if (board::classify(d.verts[v].tile, m.radius) != TileRegion::Central) continue;
        for (int s = 0; s < 4; ++s)
            if (d.corner_face(v, s) == d.exterior_face) return true;
    }
    return false;
}

} // namespace

Mosaic build_lhat(const Mosaic& lprime, const Mosaic& original) {
    require_valid(lprime);
    LinkDiagram d0 = extract_diagram(original);
    if (!polygonal_exterior(d0))
        throw MosaicError("lhat needs an original with a polygonal exterior");
    auto ledger = delta_ledger(original, d0);
    auto types = classify_penultimate(lprime);

    // endpoint tiles of the complement arcs of the original
    std::set<HexCoord> endpoint_tiles;
    for (const ComplementPath& a : complement(original).arcs) {
        endpoint_tiles.insert(a.steps.front().tile);
        endpoint_tiles.insert(a.steps.back().tile);
    }

    const NamedTiles& nt = named_tiles();
    struct Choice {
        HexCoord c;
        std::vector<PlacedTile> candidates;
        int target_delta; // -1 when unconstrained
        int pick = 0;
    };
    std::vector<Choice> pen;

    Mosaic out = lprime;
    int r = lprime.radius;
    for (const HexCoord& c : board::coords(r)) {
        TileRegion reg = board::classify(c, r);
        if (reg == TileRegion::Boundary) continue;
        if (reg == TileRegion::Central) {
            out.placement[c] = PlacedTile{nt.cyclic_a, 0};
            continue;
        }
        int dT = ledger.count(c) ? ledger[c].delta : 0;
        int crT = original.tile_at(c).crossing_count();

        auto zero_cands = [&] {
            std::vector<PlacedTile> v;
            for (int rot = 0; rot < 3; ++rot) v.push_back({nt.three_arc_zero_a, rot % 3});
            for (int rot = 0; rot < 3; ++rot) v.push_back({nt.three_arc_zero_b, rot});
            return v;
        };
        auto one_cands = [&] {
            std::vector<PlacedTile> v;
            for (int rot = 0; rot < 6; ++rot) v.push_back({nt.one_crossing_a, rot});
            for (int rot = 0; rot < 6; ++rot) v.push_back({nt.one_crossing_b, rot});
            return v;
        };

        Choice ch;
        ch.c = c;
        if (endpoint_tiles.count(c)) {
            if (crT > 1) throw MosaicError("endpoint tile with more than one crossing");
            if (crT == 0) { ch.candidates = zero_cands(); ch.target_delta = 0; }
            else { ch.candidates = one_cands(); ch.target_delta = 1; }
        } else if (types.at(c) == PenultimateType::Corner) {
            if (dT >= 2) { ch.candidates = {{nt.cyclic_a, 0}}; ch.target_delta = 2; }
            else if (dT == 1) { ch.candidates = one_cands(); ch.target_delta = 1; }
            else { ch.candidates = zero_cands(); ch.target_delta = 0; }
        } else if (types.at(c) == PenultimateType::TypeI) {
            if (dT == 0) { ch.candidates = one_cands(); ch.target_delta = 0; }
            else { ch.candidates = {{nt.cyclic_a, 0}}; ch.target_delta = 1; }
        } else {
            if (dT >= 2) { ch.candidates = {{nt.cyclic_a, 0}}; ch.target_delta = 2; }
            else if (dT == 1) { ch.candidates = one_cands(); ch.target_delta = 1; }
            else { ch.candidates = zero_cands(); ch.target_delta = 0; }
        }
        pen.push_back(ch);
    }

    for (Choice& ch : pen) out.placement[ch.c] = ch.candidates[0];

    // fix up rotations until the global constraints hold
    int rounds = 0;
    while (true) {
        if (++rounds > 8 * static_cast<int>(pen.size()) + 8) {
            std::ostringstream os;
            os << "lhat rotation search did not converge; tiles:";
            for (Choice& ch : pen) os << " (" << ch.c.q << "," << ch.c.s << ")#" << ch.pick;
            throw MosaicError(os.str());
        }
        LinkDiagram d = extract_diagram(out);
        auto led = delta_ledger(out, d);

        Choice* worst = nullptr;
        for (Choice& ch : pen) {
            bool bad = led[ch.c].delta != ch.target_delta;
            if (bad) { worst = &ch; break; }
        }
        if (!worst) {
            bool global_bad = !exterior_nugatory(d).empty() || exterior_reaches_central(out, d) ||
                              d.free_loops > 0 || !polygonal_exterior(d);
            if (!global_bad) break;
            // advance the first tile that still has untried candidates
            for (Choice& ch : pen)
                if (ch.pick + 1 < static_cast<int>(ch.candidates.size())) { worst = &ch; break; }
            if (!worst) throw MosaicError("lhat rebuild exhausted its candidates");
        }
        if (worst->pick + 1 >= static_cast<int>(worst->candidates.size()))
            throw MosaicError("lhat rebuild exhausted candidates for a tile");
        ++worst->pick;
        out.placement[worst->c] = worst->candidates[worst->pick];
    }
    return out;
}

// --- arc normalization -----------------------------------------------------------

std::vector<ComplementPath> normalize_arcs(const Mosaic& m, std::vector<ComplementPath> arcs) {
    auto outside_of = [&](const ComplementPath& a) {
        ArcSides s = arc_sides(m, a);
        return std::set<HexCoord>(s.outside.begin(), s.outside.end());
    };

    auto drop_nested = [&](std::vector<ComplementPath> in) {
        std::vector<std::set<HexCoord>> outs;
        for (const auto& a : in) outs.push_back(outside_of(a));
        std::vector<size_t> order(in.size());
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](size_t x, size_t y) { return outs[x].size() > outs[y].size(); });
        std::vector<ComplementPath> kept;
        std::vector<std::set<HexCoord>> kept_outs;
        for (size_t idx : order) {
            bool covered = false;
            for (const auto& ko : kept_outs)
                if (std::includes(ko.begin(), ko.end(), outs[idx].begin(), outs[idx].end()))
                    covered = true;
            if (!covered) {
                kept.push_back(in[idx]);
                kept_outs.push_back(outs[idx]);
            }
        }
        return kept;
    };

    arcs = drop_nested(std::move(arcs));

    int guard = 0;
    while (true) {
        if (++guard > 100) throw MosaicError("arc normalization did not terminate");
        // find two arcs meeting a common central tile
        int ai = -1, aj = -1;
        HexCoord shared{};
        for (size_t i = 0; i < arcs.size() && ai < 0; ++i)
            for (size_t j = i + 1; j < arcs.size() && ai < 0; ++j)
                for (const ComplementStep& si : arcs[i].steps) {
                    if (board::classify(si.tile, m.radius) != TileRegion::Central) continue;
                    for (const ComplementStep& sj : arcs[j].steps)
                        if (si.tile == sj.tile) {
                            ai = static_cast<int>(i);
                            aj = static_cast<int>(j);
                            shared = si.tile;
                            break;
                        }
                    if (ai >= 0) break;
                }
        if (ai < 0) break;

        // swap to the other non-crossing reconnection inside the shared tile
        auto step_of = [&](const ComplementPath& p) {
            for (size_t s = 0; s < p.steps.size(); ++s)
                if (p.steps[s].tile == shared) return s;
            throw MosaicError("shared tile lost");
        };
        size_t si = step_of(arcs[ai]), sj = step_of(arcs[aj]);
        Arc ci(arcs[ai].steps[si].enter, arcs[ai].steps[si].exit);
        Arc cj(arcs[aj].steps[sj].enter, arcs[aj].steps[sj].exit);
        std::vector<int> pts{ci.a, ci.b, cj.a, cj.b};
        std::sort(pts.begin(), pts.end());
        std::vector<std::vector<Arc>> matchings;
        noncrossing_matchings(pts, {}, matchings);
        std::vector<Arc> current{ci, cj};
        std::sort(current.begin(), current.end());
        std::vector<Arc> swapped;
        for (auto& mm : matchings) {
            std::sort(mm.begin(), mm.end());
            if (mm != current) { swapped = mm; break; }
        }
        if (swapped.empty()) throw MosaicError("no alternative reconnection");

        // re-trace the two arcs through the swapped tile
        std::map<std::pair<HexCoord, int>, std::pair<HexCoord, int>> hop; // (tile, pt) -> next
        auto add_steps = [&](const ComplementPath& p, size_t skip) {
            for (size_t s = 0; s < p.steps.size(); ++s) {
                if (s == skip) continue;
                hop[{p.steps[s].tile, p.steps[s].enter}] = {p.steps[s].tile, p.steps[s].exit};
                hop[{p.steps[s].tile, p.steps[s].exit}] = {p.steps[s].tile, p.steps[s].enter};
            }
        };
        add_steps(arcs[ai], si);
        add_steps(arcs[aj], sj);
        for (const Arc& a : swapped) {
            hop[{shared, a.a}] = {shared, a.b};
            hop[{shared, a.b}] = {shared, a.a};
        }

        auto trace_from = [&](HexCoord c, int p) {
            ComplementPath path;
            while (true) {
                auto it = hop.find({c, p});
                if (it == hop.end()) throw MosaicError("retrace broke");
                int exit = it->second.second;
                path.steps.push_back({c, p, exit});
                hop.erase({c, p});
                hop.erase({c, exit});
                HexCoord next = board::neighbor(c, exit);
                if (board::classify(next, m.radius) == TileRegion::Boundary) break;
                c = next;
                p = (exit + 3) % 6;
            }
            return path;
        };

        std::vector<ComplementPath> ends;
        for (const ComplementPath* p : {&arcs[ai], &arcs[aj]}) {
            (void)p;
        }
        // endpoints of the two old arcs
        std::vector<std::pair<HexCoord, int>> starts;
        for (int idx : {ai, aj}) {
            starts.push_back({arcs[idx].steps.front().tile, arcs[idx].steps.front().enter});
            starts.push_back({arcs[idx].steps.back().tile, arcs[idx].steps.back().exit});
        }
        std::vector<ComplementPath> rebuilt;
        for (auto& [c, p] : starts) {
            if (!hop.count({c, p})) continue; // consumed by an earlier trace
            rebuilt.push_back(trace_from(c, p));
        }
        if (rebuilt.size() != 2) throw MosaicError("reconnection changed the arc count");

        std::vector<ComplementPath> next;
        for (size_t i = 0; i < arcs.size(); ++i)
            if (static_cast<int>(i) != ai && static_cast<int>(i) != aj) next.push_back(arcs[i]);
        next.push_back(rebuilt[0]);
        next.push_back(rebuilt[1]);
        arcs = drop_nested(std::move(next));
    }
    return arcs;
}

// --- the substitution inequality -----------------------------------------------

SubstitutionReport substitution_inequality_check() {
    SubstitutionReport report;
    const auto& cat = TileCatalog::instance();
    for (int r : {4, 5}) {
        Mosaic base = generate_lr(r);
        LinkDiagram d0 = extract_diagram(base);
        auto types = classify_penultimate(base);
        auto led0 = delta_ledger(base, d0);

        // one representative tile per context
        std::map<PenultimateType, HexCoord> reps;
        for (auto& [c, ty] : types)
            if (!reps.count(ty)) reps[ty] = c;

        for (auto& [ctx, c] : reps) {
            int d_before = led0[c].delta;
            int cr_before = base.tile_at(c).crossing_count();
            for (int id = 0; id < cat.size(); ++id) {
                if (cat.tile(id).arc_count() != 3) continue;
                int nrot = 6 / cat.entry(id).symmetry;
                for (int rot = 0; rot < nrot; ++rot) {
                    Mosaic trial = base;
                    trial.placement[c] = PlacedTile{id, rot};
                    if (!is_valid(trial)) continue;
                    LinkDiagram d = extract_diagram(trial);
                    if (!polygonal_exterior(d)) continue; // contribution undefined
                    auto led = delta_ledger(trial, d);
                    int ddrop = d_before - led[c].delta;
                    int crdrop = cr_before - cat.tile(id).crossing_count();
                    SubstitutionReport::Row row{ctx, id, rot, ddrop, crdrop,
                                                ddrop <= 0 || 2 * crdrop >= 3 * ddrop};
                    if (!row.ok) ++report.violations;
                    report.rows.push_back(row);
                }
            }
        }
    }
    return report;
}

} // namespace hexmosaic
