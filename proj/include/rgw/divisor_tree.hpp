#pragma once

#include <map>
#include <string>
#include <vector>

#include "rgw/detailed_tree.hpp"
#include "rgw/tree.hpp"

namespace rgw {

// Disc- or strip-divisor describing tree: a tree of one disc (resp. strip)
// vertex, sphere vertices and divisor vertices, positive contact orders on
// the edges, a decorated rooted tree per divisor vertex and a quasi order
// tying the level structures together.
struct DivisorTreeVertex {
    std::string id;
    Color color = Color::d; // d/s/D (DD) or str/s/D (SD)
    ClassExpr alpha;
};

struct DivisorTreeEdge {
    int a = -1, b = -1;
    int m = 1; // positive contact order
};

struct DivisorTree {
    TreeKind kind = TreeKind::DD; // DD or SD
    std::vector<DivisorTreeVertex> vertices;
    std::vector<DivisorTreeEdge> edges;
    int root = -1;
    int k = 0;          // DD: k+1 boundary marked points
    int k0 = 0, k1 = 0; // SD
    std::string p, q;   // SD endpoints
    // Decorated rooted tree per D vertex. Outside edges are matched to the
    // incident edges of the vertex: outside vertex 0 <-> the first edge
    // (toward the root), outside vertex i <-> the i-th remaining incident
    // edge in edge-index order.
    std::map<int, DecoratedRootedTree> trees;
    // Total quasi order on the inside vertices of all trees; ids are
    // "<D-vertex id>/<inside vertex id>".
    QuasiOrder order;

    std::vector<int> incident_edges(int v) const;
    int other_end(int e, int v) const { return edges[e].a == v ? edges[e].b : edges[e].a; }
    int first_edge(int v) const; // toward the root, -1 at the root
    ClassExpr total_class() const;
};

Report validate_divisor_tree(const DivisorTree& s, const Palette& palette);

// Merge the divisor trees into the detailed tree; levels come from the quasi
// order. Throws InvalidInput when the input fails validation.
DetailedTree detail(const DivisorTree& s, const Palette& palette);

// Ribbon trees: a planar tree of disc (or strip+disc) components whose
// interior vertices carry divisor trees.
struct RibbonVertex {
    std::string id;
    bool exterior = false;
    int side = -1;       // SD: 0/1 for disc vertices and marks, -1 on the path
    DivisorTree divisor; // interior vertices only
};

struct RibbonEdge {
    int a = -1, b = -1;
    bool strip = false; // SD path edges
    std::string pt;     // strip edges only
};

struct RibbonTree {
    TreeKind kind = TreeKind::DDRibbon;
    std::vector<RibbonVertex> vertices;
    std::vector<RibbonEdge> edges;
    int root_ext = -1;             // DD-ribbon root marked point
    int v_left = -1, v_right = -1; // SD-ribbon ends
    std::string p, q;              // SD type endpoints
    std::map<int, std::vector<int>> rotations; // interior vertex -> ccw edges
    // Quasi order on "<ribbon vertex>/<D vertex>/<inside vertex>" ids; must
    // restrict to each divisor tree's order.
    QuasiOrder order;
    bool require_total = true;

    ClassExpr total_class() const;
};

struct RibbonType {
    std::string p, q; // SD only
    ClassExpr alpha;
    int k = 0;          // DD
    int k0 = 0, k1 = 0; // SD
};

Report validate_ribbon(const RibbonTree& r, const Palette& palette);
RibbonType ribbon_type(const RibbonTree& r, const Palette& palette);

DetailedTree detail(const RibbonTree& r, const Palette& palette);

} // namespace rgw
