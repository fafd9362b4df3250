#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgw/palette.hpp"
#include "rgw/quasi_order.hpp"

namespace rgw {

// Vertex colors of detailed trees. Level-0 interior colors are d (disc of a
// plain disc tree), str (strip), d0/d1 (discs on L0/L1 in a ribbon tree) and
// s (sphere in the ambient manifold); D marks divisor-level curves. ext, mk0,
// mk1 are exterior marked points and le/ri the strip ends.
enum class Color { d, s, D, str, d0, d1, ext, mk0, mk1, le, ri };

std::string color_name(Color c);
Color color_from_name(const std::string& s);

enum class EdgeKind { Divisor, Boundary, Strip };

enum class TreeKind { DD, SD, DDRibbon, SDRibbon };

std::string kind_name(TreeKind k);
TreeKind kind_from_name(const std::string& s);

struct DetailedVertex {
    std::string id;
    Color color = Color::d;
    ClassExpr alpha;
    int level = 0; // > 0 exactly for D vertices
};

struct DetailedEdge {
    int a = -1, b = -1;
    EdgeKind kind = EdgeKind::Divisor;
    int m = 0;      // Divisor edges only, nonzero
    std::string pt; // Strip edges only
};

// Merged tree of a disc/strip-divisor tree or ribbon tree: the divisor trees
// are inlined, levels are global (0 on the disc/strip/sphere layer).
struct DetailedTree {
    TreeKind kind = TreeKind::DD;
    std::vector<DetailedVertex> vertices;
    std::vector<DetailedEdge> edges;
    int root = -1;                 // DD: d vertex; DDRibbon: root ext vertex
    int v_left = -1, v_right = -1; // SDRibbon ends
    int k = 0, k0 = 0, k1 = 0;     // mark counts for plain DD / SD trees
    std::string type_p, type_q;    // SD endpoint labels
    // ccw incident non-divisor edge indices at interior level-0 vertices
    std::map<int, std::vector<int>> rotations;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<int> incident_edges(int v) const;
    std::vector<int> divisor_edges(int v) const;
    std::vector<int> level0_edges(int v) const; // Boundary + Strip
    int other_end(int e, int v) const { return edges[e].a == v ? edges[e].b : edges[e].a; }
    bool is_exterior(int v) const {
        Color c = vertices[v].color;
        return c == Color::ext || c == Color::mk0 || c == Color::mk1 || c == Color::le ||
               c == Color::ri;
    }
    bool is_level0_interior(int v) const {
        Color c = vertices[v].color;
        return c == Color::d || c == Color::str || c == Color::d0 || c == Color::d1 ||
               c == Color::s;
    }
    bool is_ribbon() const { return kind == TreeKind::DDRibbon || kind == TreeKind::SDRibbon; }

    // Vertex all first edges point to: d/str root for plain trees, the root
    // exterior vertex / left end for ribbon trees.
    int anchor() const;
    // Parent edge of v toward the anchor (-1 at the anchor).
    std::vector<int> parent_edges() const;

    int num_levels() const; // |lambda|, highest positive level
    ClassExpr total_class() const;

    // Interior edges of the ribbon skeleton that are not strip edges.
    std::vector<int> interior_level0_edges() const;
    std::vector<int> strip_edges() const;
    // Strip vertices in order along the path from v_left to v_right.
    std::vector<int> strip_path() const;
    // Side of each vertex/edge: 0, 1, or -1 (on the path / not applicable).
    void sides(std::vector<int>& vertex_side, std::vector<int>& edge_side) const;
    // Exterior vertices in ccw order (DDRibbon: starting at the root).
    std::vector<int> exterior_order() const;

    int find_vertex(const std::string& id) const;
};

// Lists all violated clauses (balancing, degree identities, order
// constraint, stability, color adjacency, level surjectivity, ribbon
// structure, mark counts, endpoint labels).
Report validate_detailed(const DetailedTree& t, const Palette& palette);

// Canonical encoding: equal iff isomorphic preserving colors, classes,
// levels, multiplicities, rotations, endpoints and exterior order.
std::string canonical_detailed(const DetailedTree& t);

} // namespace rgw
