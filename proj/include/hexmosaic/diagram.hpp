#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mosaic.hpp"

namespace hexmosaic {

// A dart is one of the four strand ends at a crossing, addressed as
// 4*vertex + slot.  Slots run counterclockwise; slots k and k+2 belong to
// the same strand passing through.  over_axis says which slot parity is the
// overstrand (0: slots 0 and 2; 1: slots 1 and 3).
//
// Faces are the complementary plane regions.  For diagrams extracted from a
// mosaic they are computed exactly from the tile subdivision (which also
// handles disconnected shadows and crossing-free loops); diagrams produced
// by surgery carry faces from rotation-system traversal and must be
// connected.
class LinkDiagram {
public:
    struct Crossing {
        std::array<int, 4> theta{-1, -1, -1, -1}; // paired dart per slot
        int over_axis = 0;
        HexCoord tile{};       // provenance for mosaic-extracted diagrams
        int tile_crossing = -1;
    };

    std::vector<Crossing> verts;
    int free_loops = 0;
    std::vector<std::pair<int, int>> loop_faces; // (left, right) region per free loop

    std::vector<int> face_of_dart; // 4V entries
    int face_count = 0;
    int exterior_face = 0;

    bool has_anchors = false;
    std::vector<std::vector<RPt>> dart_anchor;   // polyline tail -> head, per dart
    std::vector<std::vector<RPt>> loop_anchor;

    int V() const { return static_cast<int>(verts.size()); }
    int E() const { return 2 * V(); }
    int F() const { return face_count; }

    int theta(int dart) const { return verts[dart >> 2].theta[dart & 3]; }
    static int vertex_of(int dart) { return dart >> 2; }
    static int slot_of(int dart) { return dart & 3; }
    static int dart(int v, int s) { return 4 * v + s; }
    static int opposite(int d) { return (d & ~3) | ((d + 2) & 3); }

    bool strand_over(int v, int slot) const { return (slot & 1) == verts[v].over_axis; }
    int corner_face(int v, int k) const { return face_of_dart[dart(v, k)]; }

    int face_degree(int f) const;
    std::vector<int> face_degrees() const;

    // rebuild face_of_dart from rotation-system traversal (connected shadows)
    void faces_from_traversal();
    bool shadow_connected() const;

    int component_count() const;
    bool euler_ok() const; // V - E + F == 2 on a connected shadow, loops aside
};

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// extraction ------------------------------------------------------------

LinkDiagram extract_diagram(const Mosaic& m);

// vertex id of the given tile crossing, for diagrams built by extract_diagram
int vertex_at(const LinkDiagram& d, const HexCoord& tile, int tile_crossing);

// analysis ---------------------------------------------------------------

bool is_alternating(const LinkDiagram& d);
std::vector<int> nugatory_crossings(const LinkDiagram& d);
bool is_reduced(const LinkDiagram& d);
std::vector<int> exterior_nugatory(const LinkDiagram& d);
// exterior boundary is a disjoint union of polygons: no nugatory crossing
// and no crossing-free loop on the exterior face
bool polygonal_exterior(const LinkDiagram& d);

int exterior_degree(const LinkDiagram& d);

// overpass lift ----------------------------------------------------------

// A run of consecutive crossings along one strand.  axes[i] is the slot
// parity the strand occupies at verts[i].
struct StrandRun {
    std::vector<int> verts;
    std::vector<int> axes;
};

enum class LiftSide { Left, Right }; // relative to the run direction

// Checks the run is an overpass (interior crossings all carry the run
// strand on the same level), erases its interior crossings and reroutes the
// strand through the merged region on the chosen side.
LinkDiagram lift_overpass(const LinkDiagram& d, const StrandRun& run, LiftSide side);

// PD codes ----------------------------------------------------------------

std::string pd_export(const LinkDiagram& d);
LinkDiagram pd_import(const std::string& text);

// canonical form of the labelled combinatorial map (rotation system plus
// over/under); equal strings iff the diagrams are isomorphic
std::string canonical_code(const LinkDiagram& d);

} // namespace hexmosaic
