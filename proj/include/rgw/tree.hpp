#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rgw/palette.hpp"
#include "rgw/quasi_order.hpp"

namespace rgw {

// Decorated rooted tree: inside/outside vertices, nonzero integer edge
// multiplicities, divisor classes on inside vertices and a surjective level
// function subject to balancing, stability and the order constraint.
struct TreeVertex {
    std::string id;
    bool inside = false;
    ClassExpr alpha; // inside only, over divisor-space atoms
    int level = 0;   // inside only, in {1..|lambda|}
};

struct TreeEdge {
    int a = -1, b = -1; // vertex indices
    int m = 0;          // nonzero multiplicity
};

// Type of a tree: total class plus the tangency vector (m_0,...,m_l) in the
// zero/pole convention, so d(alpha) = sum m_i. The root edge of a tree of
// this type has multiplicity -m_0 and the output edges have multiplicities
// m_1..m_l.
struct TreeType {
    ClassExpr alpha;
    std::vector<int> tangency;

    int degree_sum() const {
        int s = 0;
        for (int m : tangency) s += m;
        return s;
    }
    bool operator==(const TreeType& o) const {
        return alpha == o.alpha && tangency == o.tangency;
    }
};

class DecoratedRootedTree {
public:
    std::vector<TreeVertex> vertices;
    std::vector<TreeEdge> edges;
    int root = -1;                  // outside vertex v^0
    std::vector<int> outside_order; // outside vertices, [0] == root

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_inside(int v) const { return vertices[v].inside; }
    std::vector<int> inside_vertices() const;
    std::vector<int> incident_edges(int v) const;
    int valency(int v) const { return static_cast<int>(incident_edges(v).size()); }
    int other_end(int e, int v) const { return edges[e].a == v ? edges[e].b : edges[e].a; }

    // First edge e(v) of an inside vertex: the edge toward the root.
    int first_edge(int v) const;
    // Orientation: s(e) -> t(e), where e is the first edge of t(e).
    int source(int e) const;
    int target(int e) const;

    int root_edge() const; // e^0
    int input_multiplicity() const { return edges[root_edge()].m; }
    std::vector<int> output_multiplicities() const; // in outside order

    int num_levels() const;
    ClassExpr total_class() const;
    TreeType type() const;

    // True iff the underlying graph is a tree with consistent outside data;
    // operations other than validate() require this.
    bool well_formed() const;
};

// Lists every violated clause of the defining conditions.
Report validate_tree(const DecoratedRootedTree& t, const Palette& palette);

// Quasi partial order <=_0 on inside vertices generated by the edge
// multiplicity signs (ignores the stored levels).
QuasiOrder base_quasi_order(const DecoratedRootedTree& t);

// Level function from a total quasi order finer than <=_0 (ids must match
// inside vertex ids); throws NotFiner / NotTotal.
std::vector<int> levels_from_quasi_order(const DecoratedRootedTree& t, const QuasiOrder& qo);
QuasiOrder quasi_order_from_levels(const DecoratedRootedTree& t);

// All admissible level functions of the tree-without-levels (edge-strict
// order constraints), as vectors indexed like inside_vertices().
std::vector<std::vector<int>> admissible_level_functions(const DecoratedRootedTree& t,
                                                         int max_levels = 0);

// Canonical encoding: equal strings iff the trees are isomorphic as
// decorated rooted trees (root, outside order, alpha, m, lambda preserved).
std::string canonical_form(const DecoratedRootedTree& t);

struct AutomorphismGroup {
    long order = 1;
    // Generators as vertex permutations (image indexed by vertex index).
    std::vector<std::vector<int>> generators;
};
AutomorphismGroup automorphisms(const DecoratedRootedTree& t);

// (i,i+1) level shrinking, 1 <= i < |lambda|.
DecoratedRootedTree level_shrink(const DecoratedRootedTree& t, int i);

// The unique one-vertex tree of the given type (levels = {1}); throws
// InvalidInput if balancing (d(alpha) = sum m_i) fails.
DecoratedRootedTree minimal_tree(const TreeType& type, const Palette& palette);

struct TreeBounds {
    int max_inside_vertices = 3;
    std::vector<std::string> atom_whitelist; // decoration atoms
    int max_coeff = 1;                       // |coefficient| bound per atom
    int max_levels = 0;                      // 0 = no bound
    long node_cap = 4000000;                 // search budget -> BoundsTooLoose
};

// All valid trees of the given type within bounds, up to isomorphism,
// sorted by canonical form.
std::vector<DecoratedRootedTree> enumerate_trees(const TreeType& type, const Palette& palette,
                                                 const TreeBounds& bounds);

} // namespace rgw
