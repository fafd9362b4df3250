#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace rgw;

TEST_CASE("pairings of the zero expression vanish") {
    Palette p = fixtures::palette();
    Pairings z = p.pairings(ClassExpr::zero());
    CHECK(z.pair_D == 0);
    CHECK(z.c1_X == 0);
    CHECK(z.c1_D == 0);
    CHECK(z.area == 0);
    REQUIRE(z.maslov);
    CHECK(*z.maslov == 0);
}

TEST_CASE("adjunction convention c1_D = c1_X - pair_D") {
    Palette p;
    ClassAtom a;
    a.id = "X1";
    a.space = Space::D;
    a.pair_D = -2;
    a.c1_X = 1;
    a.area = 1;
    p.add(a);
    CHECK(p.pairings(ClassExpr::atom("X1")).c1_D == 3);
}

TEST_CASE("pairings extend linearly") {
    Palette p = fixtures::palette();
    // 2A + B: pair_D = 2(-3) + (-1) = -7
    ClassExpr e = ClassExpr::atom("A", 2) + ClassExpr::atom("B");
    CHECK(p.pairings(e).pair_D == -7);
    // additivity on random expressions
    std::mt19937 rng(7);
    std::vector<std::string> ids{"A", "B", "C", "E", "sx", "b0", "upq"};
    for (int it = 0; it < 100; ++it) {
        ClassExpr x, y;
        for (const std::string& id : ids) {
            x += ClassExpr::atom(id, static_cast<int>(rng() % 5) - 2);
            y += ClassExpr::atom(id, static_cast<int>(rng() % 5) - 2);
        }
        Pairings px = p.pairings(x), py = p.pairings(y), ps = p.pairings(x + y);
        CHECK(ps.pair_D == px.pair_D + py.pair_D);
        CHECK(ps.c1_X == px.c1_X + py.c1_X);
        CHECK(ps.c1_D == px.c1_D + py.c1_D);
        CHECK(ps.area == px.area + py.area);
        CHECK(ps.c1_D + ps.pair_D == ps.c1_X);
    }
}

TEST_CASE("maslov bookkeeping") {
    Palette p = fixtures::palette();
    // X classes: derived as 2 c1_X
    CHECK(p.maslov(ClassExpr::atom("sx")) == 4);
    // divisor classes have no Maslov index
    CHECK_THROWS_WITH_AS(p.maslov(ClassExpr::atom("A")), doctest::Contains("MaslovUndefined"),
                         Error);
    CHECK_FALSE(p.pairings(ClassExpr::atom("A")).maslov.has_value());
}

TEST_CASE("unknown atoms are rejected") {
    Palette p = fixtures::palette();
    CHECK_THROWS_WITH_AS(p.pairings(ClassExpr::atom("nope")), doctest::Contains("UnknownAtom"),
                         Error);
}

TEST_CASE("palette validation") {
    Palette empty;
    CHECK(empty.validate().ok());

    Palette p;
    ClassAtom a;
    a.id = "neg";
    a.space = Space::D;
    a.area = -1;
    p.add(a);
    ClassAtom b;
    b.id = "disc";
    b.space = Space::XL0;
    b.area = 1; // no maslov
    p.add(b);
    Report rep = p.validate();
    REQUIRE(rep.violations.size() == 2);
    std::string all = rep.violations[0] + "|" + rep.violations[1];
    CHECK(all.find("negative area") != std::string::npos);
    CHECK(all.find("without Maslov") != std::string::npos);
}
