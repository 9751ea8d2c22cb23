#include "hexmosaic/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hexmosaic/arrangement.hpp"
#include "hexmosaic/complement.hpp"

namespace hexmosaic {

namespace {

// Integer pixel coordinates.  A lattice point (u, v) sits at (u*sqrt(3), v)
// in board units; 97/56 approximates sqrt(3) well enough that rounding is
// stable at our scales, keeping the output free of floating point.
struct Px {
    long long x, y;
    friend bool operator==(const Px& a, const Px& b) { return a.x == b.x && a.y == b.y; }
};

Px to_px(const RPt& p, int k) {
    long long un = p.u.num * k * 97 * 2;
    long long ud = p.u.den * 56;
    long long x = (un >= 0 ? un + ud : un - ud) / (2 * ud);
    long long vn = p.v.num * k * 2;
    long long vd = p.v.den;
    long long y = (vn >= 0 ? vn + vd : vn - vd) / (2 * vd);
    return {x, -y}; // svg y grows downward
}

Px lerp_toward(const Px& from, const Px& to, long long dist) {
    long long dx = to.x - from.x, dy = to.y - from.y;
    long long len = std::abs(dx) + std::abs(dy);
    if (len <= dist || len == 0) return to;
    return {from.x + dx * dist / len, from.y + dy * dist / len};
}

struct Canvas {
    std::ostringstream body;
    long long minx = 0, miny = 0, maxx = 0, maxy = 0;
    bool any = false;

    void bump(const Px& p) {
        if (!any) { minx = maxx = p.x; miny = maxy = p.y; any = true; }
        minx = std::min(minx, p.x); maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y); maxy = std::max(maxy, p.y);
    }

    void polyline(const std::vector<Px>& pts, const std::string& cls) {
        if (pts.size() < 2) return;
        body << "<path class=\"" << cls << "\" d=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            body << (i == 0 ? "M" : "L") << pts[i].x << " " << pts[i].y;
            bump(pts[i]);
        }
        body << "\"/>\n";
    }

    // polyline broken with a gap around each listed point index
    void gap_polyline(const std::vector<Px>& pts, const std::vector<size_t>& gap_at,
                      long long gap, const std::string& cls) {
        if (pts.size() < 2) return;
        body << "<path class=\"" << cls << "\" d=\"";
        bool pen = false;
        for (size_t i = 0; i < pts.size(); ++i) {
            bump(pts[i]);
            if (std::find(gap_at.begin(), gap_at.end(), i) != gap_at.end() && i > 0 &&
                i + 1 < pts.size()) {
                Px stop = lerp_toward(pts[i - 1], pts[i], std::abs(pts[i].x - pts[i - 1].x) +
                                                              std::abs(pts[i].y - pts[i - 1].y) - gap);
                Px resume = lerp_toward(pts[i + 1], pts[i], std::abs(pts[i].x - pts[i + 1].x) +
                                                                std::abs(pts[i].y - pts[i + 1].y) - gap);
                body << (pen ? "L" : "M") << stop.x << " " << stop.y;
                body << "M" << resume.x << " " << resume.y;
                pen = true;
                continue;
            }
            body << (i == 0 || !pen ? "M" : "L") << pts[i].x << " " << pts[i].y;
            pen = true;
        }
        body << "\"/>\n";
    }

    void text(const Px& p, const std::string& s) {
        body << "<text x=\"" << p.x << "\" y=\"" << p.y << "\">" << s << "</text>\n";
        bump(p);
    }

    std::string finish() {
        std::ostringstream os;
        long long pad = 20;
        if (!any) { minx = miny = 0; maxx = maxy = 1; }
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (minx - pad) << " "
           << (miny - pad) << " " << (maxx - minx + 2 * pad) << " " << (maxy - miny + 2 * pad)
           << "\">\n";
        os << "<style>\n"
              ".grid{fill:none;stroke:#cccccc;stroke-width:1}\n"
              ".strand{fill:none;stroke:#2a7d2a;stroke-width:3;stroke-linecap:round}\n"
              ".complement{fill:none;stroke:#2a4fd7;stroke-width:3;stroke-linecap:round}\n"
              "text{font-size:10px;fill:#888888;text-anchor:middle}\n"
              "</style>\n";
        os << body.str();
        os << "</svg>\n";
        return os.str();
    }
};

void draw_tile_arcs(Canvas& cv, const Mosaic& m, const HexCoord& c, int k, const std::string& cls) {
    TileData t = m.tile_at(c);
    const TileArrangement& arr = arrangement_for(t);
    RPt ctr = board::center(c);
    std::map<RPt, int> xindex; // crossing position -> arrangement index
    for (size_t x = 0; x < arr.crossings.size(); ++x) xindex[arr.crossings[x].pos] = static_cast<int>(x);

    for (int a = 0; a < t.arc_count(); ++a) {
        std::vector<Px> path;
        std::vector<size_t> gaps;
        for (const auto& piece : arr.pieces) {
            if (piece.arc != a) continue;
            if (path.empty()) path.push_back(to_px({ctr.u + piece.a.u, ctr.v + piece.a.v}, k));
            auto it = xindex.find(piece.b);
            path.push_back(to_px({ctr.u + piece.b.u, ctr.v + piece.b.v}, k));
            if (it != xindex.end()) {
                const auto& x = arr.crossings[it->second];
                bool under = (x.ai == a) ? !x.first_over : x.first_over;
                if (under) gaps.push_back(path.size() - 1);
            }
        }
        cv.gap_polyline(path, gaps, std::max(1, k), cls);
    }
}

} // namespace

std::string svg_mosaic(const Mosaic& m, const RenderOptions& opts) {
    if (opts.tile_size <= 0) throw RenderError("tile size must be positive");
    require_valid(m);
    Canvas cv;
    int k = std::max(1, opts.tile_size / 4);

    if (opts.show_grid) {
        for (const HexCoord& c : board::coords(m.radius)) {
            std::vector<Px> hex;
            for (int i = 0; i <= 6; ++i) hex.push_back(to_px(board::corner_point(c, i % 6), k));
            cv.polyline(hex, "grid");
            if (opts.label_tiles)
                cv.text(to_px(board::center(c), k), std::to_string(c.q) + "," + std::to_string(c.s));
        }
    }
    for (const auto& [c, p] : m.placement) draw_tile_arcs(cv, m, c, k, "strand");

    if (opts.show_complement) {
        ComplementSet comp = complement(m);
        auto draw_steps = [&](const std::vector<ComplementStep>& steps) {
            for (const ComplementStep& st : steps) {
                std::vector<Px> px;
                RPt ctr = board::center(st.tile);
                for (const RPt& p : arc_polyline(Arc(st.enter, st.exit)))
                    px.push_back(to_px({ctr.u + p.u, ctr.v + p.v}, k));
                cv.polyline(px, "complement");
            }
        };
        for (const auto& a : comp.arcs) draw_steps(a.steps);
        for (const auto& l : comp.loops) draw_steps(l.steps);
    }
    return cv.finish();
}

std::string svg_diagram(const LinkDiagram& d, const RenderOptions& opts) {
    if (opts.tile_size <= 0) throw RenderError("tile size must be positive");
    if (!d.has_anchors) throw RenderError("diagram carries no layout");
    Canvas cv;
    int k = std::max(1, opts.tile_size / 4);

    for (int dd = 0; dd < 4 * d.V(); ++dd) {
        int t = d.theta(dd);
        if (t < dd) continue; // each edge once
        std::vector<Px> px;
        for (const RPt& p : d.dart_anchor[dd]) px.push_back(to_px(p, k));
        if (px.size() < 2) continue;
        // an under end stops short of the crossing
        if (!d.strand_over(LinkDiagram::vertex_of(dd), LinkDiagram::slot_of(dd)))
            px.front() = lerp_toward(px.front(), px[1], 0), px.front() = lerp_toward(px[1], px.front(),
                std::abs(px[1].x - px.front().x) + std::abs(px[1].y - px.front().y) - k);
        if (!d.strand_over(LinkDiagram::vertex_of(t), LinkDiagram::slot_of(t)))
            px.back() = lerp_toward(px[px.size() - 2], px.back(),
                std::abs(px.back().x - px[px.size() - 2].x) +
                    std::abs(px.back().y - px[px.size() - 2].y) - k);
        cv.polyline(px, "strand");
    }
    for (const auto& loop : d.loop_anchor) {
        std::vector<Px> px;
        for (const RPt& p : loop) px.push_back(to_px(p, k));
        cv.polyline(px, "strand");
    }
    return cv.finish();
}

} // namespace hexmosaic
