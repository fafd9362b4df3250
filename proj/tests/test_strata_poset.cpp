#include <doctest.h>

#include <queue>
#include <set>

#include "fixtures.hpp"

using namespace rgw;

namespace {

// shrink-reachability on decorated rooted trees (test-side BFS)
bool tree_shrink_leq(const DecoratedRootedTree& a, const DecoratedRootedTree& b) {
    std::set<std::string> seen{canonical_form(b)};
    std::queue<DecoratedRootedTree> q;
    q.push(b);
    std::string want = canonical_form(a);
    while (!q.empty()) {
        DecoratedRootedTree cur = q.front();
        q.pop();
        if (canonical_form(cur) == want) return true;
        for (int i = 1; i + 1 <= cur.num_levels(); ++i) {
            DecoratedRootedTree next = level_shrink(cur, i);
            if (seen.insert(canonical_form(next)).second) q.push(next);
        }
    }
    return false;
}

} // namespace

TEST_CASE("the shrunk tree lies below the original") {
    DecoratedRootedTree deep = fixtures::deep_tree();
    DecoratedRootedTree shrunk = level_shrink(deep, 3);
    CHECK(tree_shrink_leq(shrunk, deep));
    CHECK(tree_shrink_leq(deep, deep)); // reflexive
    CHECK_FALSE(tree_shrink_leq(deep, shrunk));
}

TEST_CASE("every tree shrinks to the minimal tree of its type") {
    Palette p = fixtures::palette();
    DecoratedRootedTree deep = fixtures::deep_tree();
    DecoratedRootedTree min = minimal_tree(deep.type(), p);
    CHECK(tree_shrink_leq(min, deep));
}

TEST_CASE("detailed shrink moves: levels and level-0 edges") {
    Palette p = fixtures::palette();
    SdBounds b = fixtures::sd_bounds();
    b.max_interior = 2;
    SdType ty = fixtures::sd_type_divisor();
    ty.beta += ClassExpr::atom("b0");
    auto trees = enumerate_sd_ribbon(ty, p, b);
    REQUIRE(!trees.empty());
    int level_moves = 0, edge_moves = 0;
    for (const DetailedTree& t : trees) {
        for (const DetailedTree& next : shrink_moves(t, p)) {
            CHECK(validate_detailed(next, p).ok());
            CHECK(p.pairings(next.total_class()).pair_D == 0);
            if (next.num_levels() < t.num_levels()) ++level_moves;
            else ++edge_moves;
            // a shrink never raises the interior vertex count
            DimensionReport before = stratum_dimension(t, p, 2);
            DimensionReport after = stratum_dimension(next, p, 2);
            CHECK(after.interior_vertices <= before.interior_vertices);
        }
    }
    CHECK(level_moves > 0);
    CHECK(edge_moves > 0);
}

TEST_CASE("(0,1)-shrink recolors an isolated divisor vertex to a sphere") {
    Palette p = fixtures::palette();
    // strip S0 (wpq) -- m=1 --> U (level 1, dz) -- m=1 --> W (level 2, dm1)
    DetailedTree t;
    t.kind = TreeKind::SDRibbon;
    t.type_p = "p";
    t.type_q = "q";
    t.vertices.push_back({"le", Color::le, {}, 0});
    t.vertices.push_back({"S0", Color::str, ClassExpr::atom("wpq"), 0});
    t.vertices.push_back({"ri", Color::ri, {}, 0});
    t.vertices.push_back({"U", Color::D, ClassExpr::atom("dz"), 1});
    t.vertices.push_back({"W", Color::D, ClassExpr::atom("dm1"), 2});
    t.v_left = 0;
    t.v_right = 2;
    t.edges.push_back({0, 1, EdgeKind::Strip, 0, "p"});
    t.edges.push_back({1, 2, EdgeKind::Strip, 0, "q"});
    t.edges.push_back({1, 3, EdgeKind::Divisor, 1, ""});
    t.edges.push_back({3, 4, EdgeKind::Divisor, 1, ""});
    REQUIRE(validate_detailed(t, p).ok());
    // (0,1): U joins the strip layer (Case 2: it touches level 0), W drops
    // to level 1
    DetailedTree s = level_shrink(t, 0, p);
    CHECK(s.num_levels() == 1);
    bool merged = false;
    for (const DetailedVertex& v : s.vertices)
        if (v.color == Color::str && v.alpha == ClassExpr::atom("wpq") + ClassExpr::atom("dz"))
            merged = true;
    CHECK(merged);
    // now W is an isolated level-1 vertex whose only neighbour is level 0:
    // the next (0,1) merges it too
    DetailedTree s2 = level_shrink(s, 0, p);
    CHECK(s2.num_levels() == 0);
    CHECK(s2.vertex_count() == 3);
}

TEST_CASE("(0,1)-shrink turns an isolated level-1 vertex into a sphere") {
    Palette p = fixtures::palette();
    // S0 --m=1--> D1 (level 2) --m=-1--> D2 (level 1): D2 touches no level-0
    // vertex, so the shrink recolors it to s
    DetailedTree t;
    t.kind = TreeKind::SDRibbon;
    t.type_p = "p";
    t.type_q = "q";
    t.vertices.push_back({"le", Color::le, {}, 0});
    t.vertices.push_back({"S0", Color::str, ClassExpr::atom("wpq"), 0});
    t.vertices.push_back({"ri", Color::ri, {}, 0});
    t.vertices.push_back({"D1", Color::D, ClassExpr::atom("dm2"), 2});
    t.vertices.push_back({"D2", Color::D, ClassExpr::atom("ep1"), 1});
    t.v_left = 0;
    t.v_right = 2;
    t.edges.push_back({0, 1, EdgeKind::Strip, 0, "p"});
    t.edges.push_back({1, 2, EdgeKind::Strip, 0, "q"});
    t.edges.push_back({1, 3, EdgeKind::Divisor, 1, ""});
    t.edges.push_back({3, 4, EdgeKind::Divisor, -1, ""});
    REQUIRE(validate_detailed(t, p).ok());
    DetailedTree s = level_shrink(t, 0, p);
    CHECK(validate_detailed(s, p).ok());
    CHECK(s.num_levels() == 1);
    bool sphere_found = false;
    for (const DetailedVertex& v : s.vertices)
        if (v.color == Color::s && v.alpha == ClassExpr::atom("ep1")) sphere_found = true;
    CHECK(sphere_found);
}

TEST_CASE("level-0 edge shrink merges disc into strip") {
    Palette p = fixtures::palette();
    SdBounds b = fixtures::sd_bounds();
    b.max_interior = 2;
    b.max_divisor_vertices = 0;
    SdType ty;
    ty.p = "p";
    ty.q = "q";
    ty.beta = ClassExpr::atom("upq") + ClassExpr::atom("b0");
    auto trees = enumerate_sd_ribbon(ty, p, b);
    bool did = false;
    for (const DetailedTree& t : trees) {
        auto interior = t.interior_level0_edges();
        if (interior.empty()) continue;
        DetailedTree s = level0_edge_shrink(t, interior[0], p);
        CHECK(validate_detailed(s, p).ok());
        bool strip_has_sum = false;
        for (const DetailedVertex& v : s.vertices)
            if (v.color == Color::str &&
                v.alpha == ClassExpr::atom("upq") + ClassExpr::atom("b0"))
                strip_has_sum = true;
        CHECK(strip_has_sum);
        did = true;
    }
    CHECK(did);
}

TEST_CASE("shrinking disjoint edges commutes") {
    Palette p = fixtures::palette();
    SdBounds b = fixtures::sd_bounds();
    b.max_interior = 3;
    b.max_divisor_vertices = 0;
    SdType ty;
    ty.p = "p";
    ty.q = "q";
    ty.beta = ClassExpr::atom("upq") + ClassExpr::atom("b0") + ClassExpr::atom("b1");
    auto trees = enumerate_sd_ribbon(ty, p, b);
    int checked = 0;
    for (const DetailedTree& t : trees) {
        auto interior = t.interior_level0_edges();
        if (interior.size() < 2) continue;
        int e1 = interior[0], e2 = interior[1];
        // indices shift after contraction: recompute by locating the same
        // endpoints via ids
        DetailedTree a1 = level0_edge_shrink(t, e1, p);
        DetailedTree a2 = level0_edge_shrink(t, e2, p);
        auto find_edge = [](const DetailedTree& tt, const std::string& ida,
                            const std::string& idb) {
            for (int e = 0; e < tt.edge_count(); ++e) {
                const std::string &a = tt.vertices[tt.edges[e].a].id,
                                  &b = tt.vertices[tt.edges[e].b].id;
                if ((a == ida && b == idb) || (a == idb && b == ida)) return e;
            }
            return -1;
        };
        std::string a2a = t.vertices[t.edges[e1].a].id, a2b = t.vertices[t.edges[e1].b].id;
        std::string a1a = t.vertices[t.edges[e2].a].id, a1b = t.vertices[t.edges[e2].b].id;
        int e2_in_a1 = find_edge(a1, a1a, a1b);
        int e1_in_a2 = find_edge(a2, a2a, a2b);
        if (e2_in_a1 < 0 || e1_in_a2 < 0) continue;
        DetailedTree ab = level0_edge_shrink(a1, e2_in_a1, p);
        DetailedTree ba = level0_edge_shrink(a2, e1_in_a2, p);
        CHECK(canonical_detailed(ab) == canonical_detailed(ba));
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("shrink error codes") {
    Palette p = fixtures::palette();
    SdBounds b = fixtures::sd_bounds();
    b.max_interior = 1;
    auto trees = enumerate_sd_ribbon(fixtures::sd_type_divisor(), p, b);
    REQUIRE(!trees.empty());
    const DetailedTree& t = trees.front();
    // strip-end edges and divisor edges are not level-0 interior edges
    int divisor_edge = -1, exterior_edge = -1;
    for (int e = 0; e < t.edge_count(); ++e) {
        if (t.edges[e].kind == EdgeKind::Divisor) divisor_edge = e;
        if (t.edges[e].kind == EdgeKind::Strip) exterior_edge = e;
    }
    if (divisor_edge >= 0)
        CHECK_THROWS_WITH_AS(level0_edge_shrink(t, divisor_edge, p),
                             doctest::Contains("NotLevel0Edge"), Error);
    CHECK_THROWS_WITH_AS(level0_edge_shrink(t, exterior_edge, p),
                         doctest::Contains("NotLevel0Edge"), Error);
    // comparing different kinds is a type mismatch
    DetailedTree dd;
    dd.kind = TreeKind::DDRibbon;
    CHECK_THROWS_WITH_AS(shrink_leq(dd, t, p), doctest::Contains("TypeMismatch"), Error);
}

TEST_CASE("closure and Kuratowski axioms on a small universe") {
    Palette p = fixtures::palette();
    SdBounds b = fixtures::sd_bounds();
    b.max_interior = 2;
    SdType kty = fixtures::sd_type_divisor();
    kty.k0 = 1;
    kty.beta += ClassExpr::atom("b0");
    auto trees = enumerate_sd_ribbon(kty, p, b);
    REQUIRE(trees.size() >= 5);
    std::map<std::string, DetailedTree> universe;
    for (const DetailedTree& t : trees) universe[canonical_detailed(t)] = t;
    // the bare strip is reachable from everything
    DetailedTree bare = universe.begin()->second;
    for (auto& [key, t] : universe) {
        auto cl = closure_of(t, universe, p);
        CHECK(!cl.empty());
        CHECK(std::find(cl.begin(), cl.end(), key) != cl.end()); // reflexive
        for (const std::string& m : cl) CHECK(universe.count(m));
    }
    Report axioms = closure_axioms(trees, p, 20, 3);
    CHECK(axioms.ok());
    (void)bare;
}
