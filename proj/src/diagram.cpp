#include "hexmosaic/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hexmosaic/arrangement.hpp"

namespace hexmosaic {

int LinkDiagram::face_degree(int f) const {
    int n = 0;
    for (int d = 0; d < 4 * V(); ++d)
        if (face_of_dart[d] == f) ++n;
    for (const auto& [l, r] : loop_faces) {
        if (l == f) ++n;
        if (r == f) ++n;
    }
    return n;
}

std::vector<int> LinkDiagram::face_degrees() const {
    std::vector<int> deg(face_count, 0);
    for (int d = 0; d < 4 * V(); ++d) ++deg[face_of_dart[d]];
    for (const auto& [l, r] : loop_faces) {
        ++deg[l];
        ++deg[r];
    }
    return deg;
}

void LinkDiagram::faces_from_traversal() {
    if (free_loops > 0) throw DiagramError("face traversal cannot place free loops");
    face_of_dart.assign(4 * V(), -1);
    face_count = 0;
    for (int d0 = 0; d0 < 4 * V(); ++d0) {
        if (face_of_dart[d0] >= 0) continue;
        int d = d0;
        do {
            face_of_dart[d] = face_count;
            int t = theta(d);
            d = dart(vertex_of(t), (slot_of(t) + 3) & 3);
        } while (d != d0);
        ++face_count;
    }
}

bool LinkDiagram::shadow_connected() const {
    if (V() == 0) return true;
    std::vector<char> seen(V(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int n = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            int w = vertex_of(verts[v].theta[s]);
            if (!seen[w]) { seen[w] = 1; ++n; stack.push_back(w); }
        }
    }
    return n == V();
}

int LinkDiagram::component_count() const {
    std::vector<char> seen(4 * V(), 0);
    int orbits = 0;
    for (int d0 = 0; d0 < 4 * V(); ++d0) {
        if (seen[d0]) continue;
        int d = d0;
        do {
            seen[d] = 1;
            int t = theta(d);
            d = dart(vertex_of(t), (slot_of(t) + 2) & 3);
        } while (d != d0);
        ++orbits;
    }
    return orbits / 2 + free_loops;
}

bool LinkDiagram::euler_ok() const {
    if (!shadow_connected()) return false;
    int f = face_count - free_loops; // loop regions counted separately
    return V() - E() + f == 2;
}

// --- extraction ----------------------------------------------------------

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

LinkDiagram extract_diagram(const Mosaic& m) {
    require_valid(m);
    LinkDiagram d;

    std::vector<HexCoord> cells = board::coords(m.radius);
    std::map<HexCoord, int> cell_index;
    for (size_t i = 0; i < cells.size(); ++i) cell_index[cells[i]] = static_cast<int>(i);

    std::vector<const TileArrangement*> arr(cells.size());
    std::vector<int> xbase(cells.size()), fbase(cells.size());
    int nx = 0, nf = 0;
    for (size_t i = 0; i < cells.size(); ++i) {
        arr[i] = &arrangement_for(m.tile_at(cells[i]));
        xbase[i] = nx;
        nx += static_cast<int>(arr[i]->crossings.size());
        fbase[i] = nf;
        nf += arr[i]->fragment_count;
    }

    d.verts.resize(nx);
    d.dart_anchor.assign(4 * nx, {});
    d.has_anchors = true;
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t x = 0; x < arr[i]->crossings.size(); ++x) {
            auto& v = d.verts[xbase[i] + x];
            const auto& ax = arr[i]->crossings[x];
            v.tile = cells[i];
            v.tile_crossing = static_cast<int>(x);
            int axis_ai = -1;
            for (int k = 0; k < 4; ++k)
                if (ax.dart_arc[k] == ax.ai) axis_ai = k & 1;
            v.over_axis = ax.first_over ? axis_ai : 1 - axis_ai;
        }

    // strand walking: builds theta and the anchors
    std::set<std::pair<HexCoord, int>> visited;
    auto global = [&](const HexCoord& c, const RPt& local) {
        RPt ctr = board::center(c);
        return RPt{ctr.u + local.u, ctr.v + local.v};
    };

    for (const HexCoord& c0 : cells) {
        TileData t0 = m.tile_at(c0);
        for (int k0 = 0; k0 < t0.arc_count(); ++k0) {
            if (visited.count({c0, k0})) continue;
            HexCoord c = c0;
            int k = k0;
            int enter = t0.arcs[k0].a;

            int pending = -1;          // dart waiting for its far end
            int first_arrival = -1;    // first arrival dart of the loop
            std::vector<RPt> acc;      // anchor points since the last crossing
            std::vector<RPt> prefix;   // points before the first crossing
            bool any_crossing = false;

            while (true) {
                visited.insert({c, k});
                const TileArrangement& a = *arr[cell_index[c]];
                const TileData& t = a.tile;
                int exit = t.arcs[k].a == enter ? t.arcs[k].b : t.arcs[k].a;
                acc.push_back(board::edge_point(c, enter));

                std::vector<int> seq = a.arc_xseq[k];
                if (t.arcs[k].a != enter) std::reverse(seq.begin(), seq.end());
                for (int xl : seq) {
                    const auto& ax = a.crossings[xl];
                    int gx = xbase[cell_index[c]] + xl;
                    int sin = -1, sout = -1;
                    for (int s = 0; s < 4; ++s) {
                        if (ax.dart_arc[s] != k) continue;
                        if (ax.dart_toward[s] == enter) sin = s;
                        if (ax.dart_toward[s] == exit) sout = s;
                    }
                    if (sin < 0 || sout < 0 || sout != ((sin + 2) & 3))
                        throw DiagramError("crossing atlas inconsistent");
                    int din = LinkDiagram::dart(gx, sin);
                    acc.push_back(global(c, ax.pos));
                    if (pending < 0) {
                        first_arrival = din;
                        prefix = acc;
                    } else {
                        d.verts[LinkDiagram::vertex_of(pending)].theta[LinkDiagram::slot_of(pending)] = din;
                        d.verts[gx].theta[sin] = pending;
                        d.dart_anchor[pending] = acc;
                        d.dart_anchor[din].assign(acc.rbegin(), acc.rend());
                    }
                    any_crossing = true;
                    pending = LinkDiagram::dart(gx, sout);
                    acc.clear();
                    acc.push_back(global(c, ax.pos));
                }

                HexCoord n = board::neighbor(c, exit);
                int np = (exit + 3) % 6;
                TileData nt = m.tile_at(n);
                int nk = -1;
                for (int i = 0; i < nt.arc_count(); ++i)
                    if (nt.arcs[i].uses(np)) nk = i;
                if (n == c0 && nk == k0 && np == t0.arcs[k0].a) break;
                c = n;
                k = nk;
                enter = np;
            }

            if (!any_crossing) {
                acc.push_back(acc.front());
                d.loop_anchor.push_back(acc);
                ++d.free_loops;
                // remember a chord piece for the side lookup below
                const TileArrangement& a = *arr[cell_index[c0]];
                int fl = -1, fr = -1;
                for (const auto& p : a.pieces)
                    if (p.arc == k0) { fl = p.frag_left; fr = p.frag_right; break; }
                d.loop_faces.push_back({fbase[cell_index[c0]] + fl, fbase[cell_index[c0]] + fr});
            } else {
                // close the strand: pending joins the first arrival
                acc.insert(acc.end(), prefix.begin(), prefix.end());
                d.verts[LinkDiagram::vertex_of(pending)].theta[LinkDiagram::slot_of(pending)] = first_arrival;
                d.verts[LinkDiagram::vertex_of(first_arrival)].theta[LinkDiagram::slot_of(first_arrival)] = pending;
                d.dart_anchor[pending] = acc;
                d.dart_anchor[first_arrival].assign(acc.rbegin(), acc.rend());
            }
        }
    }

    // fragments -> plane regions
    UnionFind uf(nf + 1);
    const int EXT = nf;
    std::map<std::pair<RPt, RPt>, int> open_halfsides;
    for (size_t i = 0; i < cells.size(); ++i) {
        const HexCoord c = cells[i];
        for (int h = 0; h < 12; ++h) {
            int e = h / 2;
            RPt mid = board::edge_point(c, e);
            RPt corner = board::corner_point(c, h % 2 == 0 ? e - 1 : e);
            auto key = std::minmax(mid, corner);
            int node = fbase[i] + arr[i]->halfside_frag[h];
            if (!board::on_board(board::neighbor(c, e), m.radius)) {
                uf.unite(node, EXT);
                continue;
            }
            auto it = open_halfsides.find(key);
            if (it == open_halfsides.end()) open_halfsides.emplace(key, node);
            else uf.unite(node, it->second);
        }
    }

    std::vector<int> region_of(nf + 1, -1);
    int nregions = 0;
    for (int f = 0; f <= nf; ++f) {
        int root = uf.find(f);
        if (region_of[root] < 0) region_of[root] = nregions++;
        region_of[f] = region_of[root];
    }
    d.face_count = nregions;
    d.exterior_face = region_of[EXT];

    d.face_of_dart.assign(4 * nx, -1);
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t x = 0; x < arr[i]->crossings.size(); ++x)
            for (int s = 0; s < 4; ++s)
                d.face_of_dart[LinkDiagram::dart(xbase[i] + static_cast<int>(x), s)] =
                    region_of[fbase[i] + arr[i]->crossings[x].corner_frag[s]];
    for (auto& [l, r] : d.loop_faces) {
        l = region_of[l];
        r = region_of[r];
    }

    for (int dd = 0; dd < 4 * nx; ++dd)
        if (d.theta(dd) < 0) throw DiagramError("incomplete strand wiring");
    return d;
}

int vertex_at(const LinkDiagram& d, const HexCoord& tile, int tile_crossing) {
    for (int v = 0; v < d.V(); ++v)
        if (d.verts[v].tile == tile && d.verts[v].tile_crossing == tile_crossing) return v;
    throw DiagramError("no such tile crossing");
}

// --- analysis -------------------------------------------------------------

bool is_alternating(const LinkDiagram& d) {
    std::vector<char> seen(4 * d.V(), 0);
    for (int d0 = 0; d0 < 4 * d.V(); ++d0) {
        if (seen[d0]) continue;
        std::vector<int> seq;
        int dd = d0;
        do {
            seen[dd] = 1;
            int t = d.theta(dd);
            seq.push_back(d.strand_over(LinkDiagram::vertex_of(t), LinkDiagram::slot_of(t)) ? 1 : 0);
            dd = LinkDiagram::dart(LinkDiagram::vertex_of(t), (LinkDiagram::slot_of(t) + 2) & 3);
        } while (dd != d0);
        for (size_t i = 0; i < seq.size(); ++i)
            if (seq[i] == seq[(i + 1) % seq.size()]) return false;
    }
    return true;
}

std::vector<int> nugatory_crossings(const LinkDiagram& d) {
    std::vector<int> out;
    for (int v = 0; v < d.V(); ++v) {
        if (d.corner_face(v, 0) == d.corner_face(v, 2) || d.corner_face(v, 1) == d.corner_face(v, 3))
            out.push_back(v);
    }
    return out;
}

bool is_reduced(const LinkDiagram& d) { return nugatory_crossings(d).empty(); }

std::vector<int> exterior_nugatory(const LinkDiagram& d) {
    std::vector<int> out;
    for (int v : nugatory_crossings(d)) {
        for (int s = 0; s < 4; ++s)
            if (d.corner_face(v, s) == d.exterior_face) { out.push_back(v); break; }
    }
    return out;
}

bool polygonal_exterior(const LinkDiagram& d) {
    if (!exterior_nugatory(d).empty()) return false;
    for (const auto& [l, r] : d.loop_faces)
        if (l == d.exterior_face || r == d.exterior_face) return false;
    return true;
}

int exterior_degree(const LinkDiagram& d) { return d.face_degree(d.exterior_face); }

// --- overpass lift ---------------------------------------------------------

LinkDiagram lift_overpass(const LinkDiagram& d, const StrandRun& run, LiftSide side) {
    int n = static_cast<int>(run.verts.size());
    if (n < 2) throw DiagramError("run needs at least its two endpoint crossings");
    if (run.axes.size() != run.verts.size()) throw DiagramError("run axes/verts mismatch");
    if (d.free_loops > 0) throw DiagramError("lift with free loops unsupported");

    // reconstruct the forward darts of the run
    std::vector<int> fwd(n - 1, -1);
    for (int i = 0; i + 1 < n; ++i) {
        for (int s : {run.axes[i], run.axes[i] + 2}) {
            int t = d.verts[run.verts[i]].theta[s];
            if (LinkDiagram::vertex_of(t) == run.verts[i + 1] &&
                (LinkDiagram::slot_of(t) & 1) == run.axes[i + 1]) {
                fwd[i] = LinkDiagram::dart(run.verts[i], s);
            }
        }
        if (fwd[i] < 0) throw DiagramError("run is not a strand path");
        if (i > 0 && LinkDiagram::opposite(fwd[i]) == fwd[i - 1])
            throw DiagramError("run doubles back");
    }

    // interior crossings must all carry the run strand on one level
    std::set<int> interior(run.verts.begin() + 1, run.verts.end() - 1);
    if (interior.size() + 2 != static_cast<size_t>(n)) throw DiagramError("run revisits a crossing");
    if (interior.count(run.verts.front()) || interior.count(run.verts.back()) ||
        run.verts.front() == run.verts.back())
        throw DiagramError("run endpoints must be distinct kept crossings");
    bool level0 = false, level_known = false;
    for (int i = 1; i + 1 < n; ++i) {
        bool over = d.strand_over(run.verts[i], run.axes[i]);
        if (!level_known) { level0 = over; level_known = true; }
        else if (over != level0) throw DiagramError("run is not an overpass: mixed levels");
    }

    // the faces along the chosen side must form a path of distinct faces
    std::vector<int> sidefaces;
    for (int i = 0; i + 1 < n; ++i) {
        int f = side == LiftSide::Left ? d.face_of_dart[fwd[i]]
                                       : d.face_of_dart[d.theta(fwd[i])];
        if (!sidefaces.empty() && sidefaces.back() == f) continue;
        sidefaces.push_back(f);
    }
    {
        std::set<int> uniq(sidefaces.begin(), sidefaces.end());
        if (uniq.size() != sidefaces.size()) throw DiagramError("side face path repeats a face");
    }
    bool run_over = n > 2 ? d.strand_over(run.verts[1], run.axes[1]) : true;

    if (n == 2) return d; // nothing to erase; the reroute is an isotopy

    // rebuild
    LinkDiagram out;
    std::vector<int> newid(d.V(), -1);
    for (int v = 0; v < d.V(); ++v)
        if (!interior.count(v)) {
            newid[v] = static_cast<int>(out.verts.size());
            out.verts.push_back(d.verts[v]);
            for (int s = 0; s < 4; ++s) out.verts.back().theta[s] = -1;
        }
    out.dart_anchor.assign(4 * out.V(), {});
    out.has_anchors = d.has_anchors;

    std::set<int> run_darts; // darts of deleted vertices along the run strand
    for (int i = 1; i + 1 < n; ++i) {
        run_darts.insert(LinkDiagram::dart(run.verts[i], run.axes[i]));
        run_darts.insert(LinkDiagram::dart(run.verts[i], run.axes[i] + 2));
    }

    auto resolve = [&](int dart0, std::vector<RPt>& poly) {
        poly = d.has_anchors ? d.dart_anchor[dart0] : std::vector<RPt>{};
        int t = d.theta(dart0);
        while (interior.count(LinkDiagram::vertex_of(t))) {
            if (run_darts.count(t)) throw DiagramError("cross strand runs into the overpass");
            int cont = LinkDiagram::opposite(t);
            if (d.has_anchors) {
                const auto& seg = d.dart_anchor[cont];
                poly.insert(poly.end(), seg.begin() + 1, seg.end());
            }
            t = d.theta(cont);
        }
        return t;
    };

    int arrive_last = LinkDiagram::dart(run.verts[n - 1], LinkDiagram::slot_of(d.theta(fwd[n - 2])));
    for (int v = 0; v < d.V(); ++v) {
        if (newid[v] < 0) continue;
        for (int s = 0; s < 4; ++s) {
            int dd = LinkDiagram::dart(v, s);
            if (dd == fwd[0] || dd == arrive_last) continue; // run edge handled below
            std::vector<RPt> poly;
            int t = resolve(dd, poly);
            out.verts[newid[v]].theta[s] = LinkDiagram::dart(newid[LinkDiagram::vertex_of(t)],
                                                             LinkDiagram::slot_of(t));
            if (d.has_anchors) out.dart_anchor[LinkDiagram::dart(newid[v], s)] = poly;
        }
    }

    // reroute the strand between the two stubs.  When the stub corners end
    // up in one region the reroute is a plain edge; otherwise the strand is
    // carried across the separating strands, passing over each one, which
    // adds one crossing per region change.
    int a0 = LinkDiagram::dart(newid[run.verts[0]], LinkDiagram::slot_of(fwd[0]));
    int a1 = LinkDiagram::dart(newid[run.verts[n - 1]], LinkDiagram::slot_of(arrive_last));

    // regions of the stub corners: faces of the partial map where the two
    // stub darts reflect back on themselves
    {
        std::vector<int> face_of(4 * out.V(), -1);
        int nfaces = 0;
        auto nxt = [&](int dd) {
            int t = (dd == a0) ? a0 : (dd == a1) ? a1 : out.theta(dd);
            return LinkDiagram::dart(LinkDiagram::vertex_of(t), (LinkDiagram::slot_of(t) + 3) & 3);
        };
        for (int d0 = 0; d0 < 4 * out.V(); ++d0) {
            if (face_of[d0] >= 0) continue;
            int dd = d0;
            do {
                face_of[dd] = nfaces;
                dd = nxt(dd);
            } while (dd != d0);
            ++nfaces;
        }
        int ra = face_of[a0], rb = face_of[a1];
        if (ra != rb) {
            // BFS over the partial map's regions for the canonical reroute;
            // each step crosses one edge, from the left of the via dart
            std::vector<std::vector<std::pair<int, int>>> adj(nfaces); // (far face, via dart)
            for (int dd = 0; dd < 4 * out.V(); ++dd) {
                if (dd == a0 || dd == a1) continue;
                adj[face_of[dd]].push_back({face_of[out.theta(dd)], dd});
            }
            for (int f = 0; f < nfaces; ++f)
                std::sort(adj[f].begin(), adj[f].end());
            std::vector<int> prev_face(nfaces, -1), via(nfaces, -1);
            std::vector<int> queue{ra};
            prev_face[ra] = ra;
            for (size_t qi = 0; qi < queue.size() && prev_face[rb] < 0; ++qi) {
                int f = queue[qi];
                for (auto& [g, dd] : adj[f]) {
                    if (prev_face[g] >= 0) continue;
                    prev_face[g] = f;
                    via[g] = dd;
                    queue.push_back(g);
                }
            }
            if (prev_face[rb] < 0) throw DiagramError("no reroute path between the stub regions");
            std::vector<int> crossed;
            for (int f = rb; f != ra; f = prev_face[f]) crossed.push_back(via[f]);
            std::reverse(crossed.begin(), crossed.end());
            {
                std::set<int> edges;
                for (int g : crossed) edges.insert(std::min(g, out.theta(g)));
                if (edges.size() != crossed.size())
                    throw DiagramError("reroute would cross an edge twice");
            }

            int prev_stub = a0;
            for (int g : crossed) {
                int gt = out.theta(g);
                int v = out.V();
                out.verts.push_back({});
                // slots counterclockwise: 0 bridge-forward, 1 toward the far
                // end of the crossed edge, 2 bridge-back, 3 toward its near end
                out.verts[v].over_axis = run_over ? 0 : 1;
                out.dart_anchor.resize(4 * out.V());
                out.verts[v].theta[1] = gt;
                out.verts[LinkDiagram::vertex_of(gt)].theta[LinkDiagram::slot_of(gt)] = LinkDiagram::dart(v, 1);
                out.verts[v].theta[3] = g;
                out.verts[LinkDiagram::vertex_of(g)].theta[LinkDiagram::slot_of(g)] = LinkDiagram::dart(v, 3);
                out.verts[v].theta[2] = prev_stub;
                out.verts[LinkDiagram::vertex_of(prev_stub)].theta[LinkDiagram::slot_of(prev_stub)] =
                    LinkDiagram::dart(v, 2);
                if (d.has_anchors) {
                    std::vector<RPt> ga = out.dart_anchor[g];
                    if (ga.size() >= 2) {
                        size_t h = ga.size() / 2;
                        RPt mid{(ga[h - 1].u + ga[h].u) * Frac(1, 2), (ga[h - 1].v + ga[h].v) * Frac(1, 2)};
                        std::vector<RPt> far_half{mid};
                        far_half.insert(far_half.end(), ga.begin() + h, ga.end());
                        std::vector<RPt> near_half(ga.begin(), ga.begin() + h);
                        near_half.push_back(mid);
                        out.dart_anchor[LinkDiagram::dart(v, 1)] = far_half;
                        out.dart_anchor[LinkDiagram::dart(v, 3)] =
                            std::vector<RPt>(near_half.rbegin(), near_half.rend());
                        out.dart_anchor[g] = near_half;
                        out.dart_anchor[gt].assign(far_half.rbegin(), far_half.rend());
                    }
                }
                prev_stub = LinkDiagram::dart(v, 0);
            }
            a0 = prev_stub;
        }
    }

    out.verts[LinkDiagram::vertex_of(a0)].theta[LinkDiagram::slot_of(a0)] = a1;
    out.verts[LinkDiagram::vertex_of(a1)].theta[LinkDiagram::slot_of(a1)] = a0;
    if (d.has_anchors) {
        const auto& pa = out.dart_anchor[a0];
        const auto& qa = out.dart_anchor[a1];
        RPt p = pa.empty() ? d.dart_anchor[fwd[0]].front() : pa.front();
        RPt q = qa.empty() ? d.dart_anchor[LinkDiagram::opposite(arrive_last)].front() : qa.front();
        Frac extreme = p.v;
        for (const auto& pl : d.dart_anchor)
            for (const RPt& pt : pl)
                if (side == LiftSide::Left ? (pt.v > extreme) : (pt.v < extreme)) extreme = pt.v;
        Frac lift_v = side == LiftSide::Left ? extreme + Frac(4) : extreme - Frac(4);
        std::vector<RPt> bridge{p, {p.u, lift_v}, {q.u, lift_v}, q};
        out.dart_anchor[a0] = bridge;
        out.dart_anchor[a1].assign(bridge.rbegin(), bridge.rend());
    }

    for (int dd = 0; dd < 4 * out.V(); ++dd)
        if (out.theta(dd) < 0) throw DiagramError("lift left unwired darts");

    if (!out.shadow_connected()) throw DiagramError("lift disconnected the shadow");
    out.faces_from_traversal();

    // the exterior survives on the side away from the lift: locate it by the
    // extreme anchor point of the old exterior boundary
    if (!d.has_anchors) throw DiagramError("lift needs geometric anchors");
    int best_dart = -1;
    Frac best_v;
    for (int dd = 0; dd < 4 * d.V(); ++dd) {
        if (d.face_of_dart[dd] != d.exterior_face) continue;
        if (newid[LinkDiagram::vertex_of(dd)] < 0) continue;
        if (run_darts.count(dd)) continue;
        for (const RPt& pt : d.dart_anchor[dd]) {
            bool better = best_dart < 0 || (side == LiftSide::Left ? pt.v < best_v : pt.v > best_v);
            if (better) { best_v = pt.v; best_dart = dd; }
        }
    }
    if (best_dart < 0) throw DiagramError("cannot locate the exterior after the lift");
    out.exterior_face = out.face_of_dart[LinkDiagram::dart(newid[LinkDiagram::vertex_of(best_dart)],
                                                           LinkDiagram::slot_of(best_dart))];

    if (out.component_count() != d.component_count())
        throw DiagramError("lift changed the component count");
    return out;
}

// --- PD codes ---------------------------------------------------------------

std::string pd_export(const LinkDiagram& d) {
    std::ostringstream os;
    if (d.V() == 0) {
        os << "PD[]";
        if (d.free_loops > 0) os << "\n% loops " << d.free_loops;
        os << "\n";
        return os.str();
    }
    // direct the strands and label the edges in traversal order
    std::vector<int> label_out(4 * d.V(), -1); // label of the edge leaving via this dart
    std::vector<int> label_in(4 * d.V(), -1);  // label of the edge arriving at this dart
    int next = 1;
    std::vector<char> seen(4 * d.V(), 0);
    for (int d0 = 0; d0 < 4 * d.V(); ++d0) {
        if (seen[d0] || seen[d.theta(d0)]) continue;
        int dd = d0;
        do {
            seen[dd] = 1;
            int t = d.theta(dd);
            seen[t] = 1;
            label_out[dd] = next;
            label_in[t] = next;
            ++next;
            dd = LinkDiagram::dart(LinkDiagram::vertex_of(t), (LinkDiagram::slot_of(t) + 2) & 3);
        } while (dd != d0);
    }
    os << "PD[";
    for (int v = 0; v < d.V(); ++v) {
        int sin = -1;
        for (int s = 0; s < 4; ++s)
            if (label_in[LinkDiagram::dart(v, s)] >= 0 && (s & 1) != d.verts[v].over_axis) sin = s;
        if (sin < 0) throw DiagramError("no incoming understrand");
        if (v) os << ", ";
        os << "X(";
        for (int k = 0; k < 4; ++k) {
            int s = (sin + k) & 3;
            int dd = LinkDiagram::dart(v, s);
            int lab = label_in[dd] >= 0 ? label_in[dd] : label_out[dd];
            os << lab << (k == 3 ? ")" : ",");
        }
    }
    os << "]";
    if (d.free_loops > 0) os << "\n% loops " << d.free_loops;
    os << "\n";
    return os.str();
}

LinkDiagram pd_import(const std::string& text) {
    LinkDiagram d;
    size_t pos = text.find("PD[");
    if (pos == std::string::npos) throw DiagramError("not a PD code");
    size_t end = text.find(']', pos);
    if (end == std::string::npos) throw DiagramError("unterminated PD code");
    std::string body = text.substr(pos + 3, end - pos - 3);
    std::vector<std::array<int, 4>> xs;
    size_t i = 0;
    while ((i = body.find('X', i)) != std::string::npos) {
        size_t open = body.find('(', i);
        size_t close = body.find(')', open);
        if (open == std::string::npos || close == std::string::npos) throw DiagramError("bad X tuple");
        std::string nums = body.substr(open + 1, close - open - 1);
        for (auto& ch : nums)
            if (ch == ',') ch = ' ';
        std::istringstream ns(nums);
        std::array<int, 4> t{};
        if (!(ns >> t[0] >> t[1] >> t[2] >> t[3])) throw DiagramError("bad X tuple");
        xs.push_back(t);
        i = close;
    }
    size_t lp = text.find("% loops");
    if (lp != std::string::npos) {
        std::istringstream ls(text.substr(lp + 7));
        ls >> d.free_loops;
    }
    d.verts.resize(xs.size());
    if (xs.empty()) {
        if (d.free_loops > 0) {
            d.face_count = d.free_loops + 1;
            d.exterior_face = 0;
            for (int l = 0; l < d.free_loops; ++l) d.loop_faces.push_back({l + 1, 0});
        } else {
            d.face_count = 1;
            d.exterior_face = 0;
        }
        return d;
    }
    if (d.free_loops > 0) throw DiagramError("PD import with both crossings and loops unsupported");

    std::map<int, std::vector<int>> where; // label -> darts
    for (size_t v = 0; v < xs.size(); ++v) {
        d.verts[v].over_axis = 1; // slot 0 is the incoming understrand
        for (int s = 0; s < 4; ++s) where[xs[v][s]].push_back(LinkDiagram::dart(static_cast<int>(v), s));
    }
    for (auto& [lab, darts] : where) {
        if (darts.size() != 2) throw DiagramError("edge label must appear exactly twice");
        d.verts[LinkDiagram::vertex_of(darts[0])].theta[LinkDiagram::slot_of(darts[0])] = darts[1];
        d.verts[LinkDiagram::vertex_of(darts[1])].theta[LinkDiagram::slot_of(darts[1])] = darts[0];
    }
    for (int dd = 0; dd < 4 * d.V(); ++dd)
        if (d.theta(dd) < 0) throw DiagramError("PD code leaves unwired darts");
    if (!d.shadow_connected()) throw DiagramError("PD import requires a connected diagram");
    d.faces_from_traversal();
    // on the sphere the exterior is taken to be a face of maximal degree
    auto deg = d.face_degrees();
    d.exterior_face = static_cast<int>(std::max_element(deg.begin(), deg.end()) - deg.begin());
    return d;
}

// --- canonical form ----------------------------------------------------------

namespace {

uint64_t mix(uint64_t a, uint64_t b) {
    a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
    return a * 0xff51afd7ed558ccdull;
}

} // namespace

std::string canonical_code(const LinkDiagram& d) {
    int nd = 4 * d.V();
    if (nd == 0) {
        return "empty:" + std::to_string(d.free_loops);
    }
    // cheap dart invariant to prune the start candidates
    std::vector<uint64_t> h(nd), h2(nd);
    for (int i = 0; i < nd; ++i)
        h[i] = 0x100 + ((i & 1) == d.verts[i >> 2].over_axis ? 1 : 0);
    for (int round = 0; round < 4; ++round) {
        for (int i = 0; i < nd; ++i) {
            uint64_t v = mix(h[i], 17);
            v = mix(v, h[d.theta(i)]);
            v = mix(v, h[(i & ~3) | ((i + 1) & 3)]);
            h2[i] = v;
        }
        h.swap(h2);
    }
    uint64_t best = *std::min_element(h.begin(), h.end());

    std::basic_string<char> bestcode;
    std::vector<int> num(d.V());
    for (int start = 0; start < nd; ++start) {
        if (h[start] != best) continue;
        std::fill(num.begin(), num.end(), -1);
        std::vector<int> rootslot(d.V(), 0), order;
        order.reserve(d.V());
        num[start >> 2] = 0;
        rootslot[start >> 2] = start & 3;
        order.push_back(start >> 2);
        std::basic_string<char> code;
        code.reserve(d.V() * 9 + 2);
        auto push16 = [&code](int x) {
            code.push_back(static_cast<char>(x & 0xff));
            code.push_back(static_cast<char>((x >> 8) & 0xff));
        };
        push16(d.V());
        for (size_t qi = 0; qi < order.size(); ++qi) {
            int v = order[qi];
            code.push_back(static_cast<char>(d.verts[v].over_axis ^ (rootslot[v] & 1)));
            for (int rel = 0; rel < 4; ++rel) {
                int s = (rootslot[v] + rel) & 3;
                int t = d.verts[v].theta[s];
                int w = LinkDiagram::vertex_of(t);
                if (num[w] < 0) {
                    num[w] = static_cast<int>(order.size());
                    rootslot[w] = LinkDiagram::slot_of(t);
                    order.push_back(w);
                }
                push16(num[w]);
                code.push_back(static_cast<char>((LinkDiagram::slot_of(t) - rootslot[w]) & 3));
            }
        }
        if (bestcode.empty() || code < bestcode) bestcode = std::move(code);
    }
    bestcode.push_back(static_cast<char>(d.free_loops));
    return bestcode;
}

} // namespace hexmosaic
