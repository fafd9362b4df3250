#pragma once

#include "rgw/divisor_tree.hpp"
#include "rgw/strata.hpp"

namespace rgw::fixtures {

// Shared palette for the combinatorial fixtures: divisor classes A, B, C, E
// and attachment candidates, sphere and disc classes, strips between the
// intersection points p, q, r.
inline Palette palette() {
    Palette p;
    auto add = [&](const std::string& id, Space sp, int pair_D, int c1_X,
                   std::optional<int> maslov, const Rat& area, const std::string& from = "",
                   const std::string& to = "") {
        ClassAtom a;
        a.id = id;
        a.space = sp;
        a.pair_D = pair_D;
        a.c1_X = c1_X;
        a.maslov_raw = maslov;
        a.area = area;
        a.strip_from = from;
        a.strip_to = to;
        p.add(a);
    };
    // divisor classes
    add("A", Space::D, -3, 0, {}, 2);
    add("B", Space::D, -1, 0, {}, 2);
    add("C", Space::D, -2, 1, {}, 1);
    add("E", Space::D, 2, 1, {}, 1);
    add("dm1", Space::D, -1, 1, {}, 1);
    add("dm2", Space::D, -2, 1, {}, 1);
    add("dz", Space::D, 0, 1, {}, 1);
    add("ep1", Space::D, 1, 1, {}, 1);
    // spheres
    add("sx", Space::X, 0, 2, {}, 1);
    add("sx1", Space::X, 1, 1, {}, 1);
    // discs on L0 / L1
    add("b0", Space::XL0, 0, 1, 2, 1);
    add("b0w", Space::XL0, 1, 1, 2, 1);
    add("b0w2", Space::XL0, 2, 1, 2, 1);
    add("b1", Space::XL1, 0, 1, 2, 1);
    add("b1w", Space::XL1, 1, 1, 2, 1);
    // strips (monotone with c = 1/2 and zero offsets)
    add("upq", Space::Strip, 0, 0, 1, rat(1, 2), "p", "q");
    add("upq3", Space::Strip, 0, 1, 3, rat(3, 2), "p", "q");
    add("wpq", Space::Strip, 1, 1, 1, 1, "p", "q");
    add("wpq2", Space::Strip, 2, 1, 2, 2, "p", "q");
    add("upr", Space::Strip, 0, 0, 1, rat(1, 2), "p", "r");
    add("urq", Space::Strip, 0, 0, 1, rat(1, 2), "r", "q");
    add("wpr", Space::Strip, 1, 1, 1, 1, "p", "r");
    add("wrq", Space::Strip, 1, 1, 1, 1, "r", "q");
    return p;
}

// Five-vertex decorated rooted tree with four levels, input multiplicity 3
// and output -1; edge multiplicities solved from the balancing condition.
inline DecoratedRootedTree deep_tree() {
    DecoratedRootedTree t;
    t.vertices.push_back({"r", false, {}, 0});                        // 0
    t.vertices.push_back({"v1", true, ClassExpr::zero(), 1});          // 1
    t.vertices.push_back({"v2", true, ClassExpr::atom("A"), 2});       // 2
    t.vertices.push_back({"v3", true, ClassExpr::atom("E", -1), 3});   // 3
    t.vertices.push_back({"v4", true, ClassExpr::atom("B"), 4});       // 4
    t.vertices.push_back({"v5", true, ClassExpr::atom("E"), 1});       // 5
    t.vertices.push_back({"o1", false, {}, 0});                        // 6
    t.root = 0;
    t.outside_order = {0, 6};
    t.edges.push_back({0, 1, 3});
    t.edges.push_back({1, 6, -1});
    t.edges.push_back({1, 2, 4});
    t.edges.push_back({2, 3, 1});
    t.edges.push_back({3, 4, 1});
    t.edges.push_back({3, 5, -2});
    return t;
}

inline TreeType deep_tree_type() {
    TreeType ty;
    ty.alpha = ClassExpr::atom("A") + ClassExpr::atom("B");
    ty.tangency = {-3, -1};
    return ty;
}

// DD-tree with one divisor vertex carrying a minimal decorated tree:
// d --2--> D with T(D) of type (C'; (-2)) for a class of divisor degree -2.
inline DivisorTree simple_dd() {
    DivisorTree s;
    s.kind = TreeKind::DD;
    s.vertices.push_back({"root", Color::d, ClassExpr::atom("b0w2")});
    s.vertices.push_back({"V", Color::D, ClassExpr::atom("C")});
    s.root = 0;
    s.k = 1;
    s.edges.push_back({0, 1, 2});
    DecoratedRootedTree t;
    t.vertices.push_back({"out", false, {}, 0});
    t.vertices.push_back({"u", true, ClassExpr::atom("C"), 1});
    t.root = 0;
    t.outside_order = {0};
    t.edges.push_back({0, 1, 2});
    s.trees[1] = t;
    s.order = QuasiOrder::from_levels({"V/u"}, {1});
    return s;
}

// SD-ribbon fixture bounds used across the strata tests.
inline SdBounds sd_bounds() {
    SdBounds b;
    b.max_interior = 3;
    b.max_levels = 3;
    b.max_divisor_vertices = 2;
    b.max_contact = 2;
    b.intermediate_points = {"r"};
    b.strip_atoms = {"upq", "wpq", "wpq2", "upr", "urq", "wpr", "wrq"};
    b.disc_atoms0 = {"b0", "b0w"};
    b.disc_atoms1 = {"b1", "b1w"};
    b.divisor_atoms = {"dm1", "dm2"};
    return b;
}

inline SdType sd_type_upq() {
    SdType ty;
    ty.p = "p";
    ty.q = "q";
    ty.beta = ClassExpr::atom("upq");
    ty.k0 = 0;
    ty.k1 = 0;
    return ty;
}

// A type with divisor summands: its strata spread over levels and divisor
// attachments (the strip class pairs 2 with the divisor, compensated by two
// degree -1 divisor classes).
inline SdType sd_type_divisor() {
    SdType ty;
    ty.p = "p";
    ty.q = "q";
    ty.beta = ClassExpr::atom("wpq2") + ClassExpr::atom("dm1", 2);
    ty.k0 = 0;
    ty.k1 = 0;
    return ty;
}

} // namespace rgw::fixtures
