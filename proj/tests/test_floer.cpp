#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rgw/floer.hpp"

using namespace rgw;

namespace {

FloerData two_generators() {
    FloerData d;
    d.generators = {{"p", "o0", 0}, {"q", "o0", 1}};
    d.monotonicity_c = rat(1, 2);
    return d;
}

} // namespace

TEST_CASE("boundary assembly") {
    Palette pal = fixtures::palette();
    FloerData d = two_generators();
    CHECK(assemble_boundary(d, pal) == RatMatrix{{0, 0}, {0, 0}}); // empty counts

    d.strips.push_back({"p", "q", "upq", 1, rat(1, 2), {}});
    NovMatrix m = assemble_boundary_novikov(d, pal);
    CHECK(m[1][0] == NovikovScalar::term(1, rat(1, 2)));
    CHECK(m[0][1].is_zero());

    // three-generator fixture equals the entry-by-entry hand sum
    FloerData d3;
    d3.generators = {{"p", "o0", 0}, {"q", "o0", 1}, {"s", "o0", 0}};
    Palette pal3 = pal;
    ClassAtom u2 = pal.at("upq");
    u2.id = "upq_b";
    pal3.add(u2);
    ClassAtom uqs;
    uqs.id = "uqs";
    uqs.space = Space::Strip;
    uqs.strip_from = "q";
    uqs.strip_to = "s";
    uqs.maslov_raw = 1;
    uqs.area = rat(1, 2);
    pal3.add(uqs);
    d3.strips.push_back({"p", "q", "upq", rat(2), {}, {}});
    d3.strips.push_back({"p", "q", "upq_b", rat(3), {}, {}});
    d3.strips.push_back({"q", "s", "uqs", rat(-1), {}, {}});
    RatMatrix r = assemble_boundary(d3, pal3);
    CHECK(r[1][0] == rat(5)); // 2 + 3
    CHECK(r[2][1] == rat(-1));
    CHECK(r[0][1] == 0);

    // endpoint mismatch
    FloerData bad = two_generators();
    bad.strips.push_back({"q", "p", "upq", 1, {}, {}});
    CHECK_THROWS_WITH_AS(assemble_boundary(bad, pal), doctest::Contains("EndpointMismatch"),
                         Error);
}

TEST_CASE("potential function") {
    Palette pal = fixtures::palette();
    FloerData d = two_generators();
    CHECK(potential(d, 0, {}, pal) == 0);
    d.discs_L0.push_back({"b0", 3, ""});
    CHECK(potential(d, 0, {}, pal) == 3);
    d.discs_L1.push_back({"b1", 1, "t1"});
    d.discs_L1.push_back({"b1", 4, "t2"});
    std::map<std::string, Rat> rho{{"t1", rat(2)}, {"t2", rat(-1)}};
    CHECK(potential(d, 1, rho, pal) == rat(-2)); // 2*1 + (-1)*4

    // wrong Maslov index
    Palette bad = pal;
    ClassAtom a;
    a.id = "b4";
    a.space = Space::XL0;
    a.pair_D = 0;
    a.maslov_raw = 4;
    a.area = 1;
    bad.add(a);
    FloerData dd = two_generators();
    dd.discs_L0.push_back({"b4", 1, ""});
    CHECK_THROWS_WITH_AS(potential(dd, 0, {}, bad), doctest::Contains("WrongMaslov"), Error);
}

TEST_CASE("obstruction audit: engineered scalar defect") {
    Palette pal = fixtures::palette();
    // potentials 5 and 2, counts with d^2 = 3 id on two generators
    FloerData d = two_generators();
    d.discs_L1.push_back({"b1", 5, ""});
    d.discs_L0.push_back({"b0", 2, ""});
    ClassAtom uqp;
    uqp.id = "uqp";
    uqp.space = Space::Strip;
    uqp.strip_from = "q";
    uqp.strip_to = "p";
    uqp.maslov_raw = 1;
    uqp.area = rat(1, 2);
    Palette pal2 = pal;
    pal2.add(uqp);
    d.strips.push_back({"p", "q", "upq", 1, {}, {}});
    d.strips.push_back({"q", "p", "uqp", 3, {}, {}});
    DSquaredAudit audit = d_squared_audit(d, pal2);
    CHECK(audit.expected_defect == 3);
    CHECK(audit.is_scalar_identity);
    CHECK(audit.observed_scalar == 3);
    CHECK(audit.matches_expected);

    // equal potentials, zero counts
    FloerData z = two_generators();
    DSquaredAudit za = d_squared_audit(z, pal2);
    CHECK(za.expected_defect == 0);
    CHECK(za.matches_expected);

    // non-scalar d^2 is flagged with the offending entry
    FloerData ns;
    ns.generators = {{"p", "o0", 0}, {"q", "o0", 1}, {"s", "o0", 0}};
    ClassAtom uqs = uqp;
    uqs.id = "uqs2";
    uqs.strip_from = "q";
    uqs.strip_to = "s";
    Palette pal3 = pal2;
    pal3.add(uqs);
    ns.strips.push_back({"p", "q", "upq", 1, {}, {}});
    ns.strips.push_back({"q", "s", "uqs2", 1, {}, {}});
    DSquaredAudit nsa = d_squared_audit(ns, pal3);
    CHECK_FALSE(nsa.is_scalar_identity);
    CHECK(!nsa.offenders.empty());
}

TEST_CASE("Floer homology and the rank bound") {
    Palette pal = fixtures::palette();
    // d = 0 on four generators
    FloerData d;
    for (int i = 0; i < 4; ++i)
        d.generators.push_back({"g" + std::to_string(i), "o0", i % 2});
    FloerHomology hf = floer_homology(d, pal, BoundaryMode::Rational);
    CHECK(hf.rank == 4);
    CHECK(hf.rank_bound_ok);

    // two generators, d = T^a off-diagonal
    FloerData d2 = two_generators();
    d2.strips.push_back({"p", "q", "upq", 1, rat(3, 4), {}});
    FloerHomology hf2 = floer_homology(d2, pal, BoundaryMode::Novikov);
    CHECK(hf2.rank == 0);
    REQUIRE(hf2.torsion.size() == 1);
    CHECK(hf2.torsion[0] == rat(3, 4));

    // nonzero defect is refused
    FloerData d3 = two_generators();
    d3.discs_L1.push_back({"b1", 1, ""});
    CHECK_THROWS_WITH_AS(floer_homology(d3, pal, BoundaryMode::Rational),
                         doctest::Contains("NonzeroDefect"), Error);
}

TEST_CASE("random fixtures: rank bound and rank conservation") {
    Palette pal = fixtures::palette();
    std::mt19937 rng(71);
    for (int it = 0; it < 60; ++it) {
        int g = 2 + static_cast<int>(rng() % 5);
        Palette local = pal;
        FloerData d;
        for (int i = 0; i < g; ++i)
            d.generators.push_back({"g" + std::to_string(i), "o0", i % 2});
        // random pairing differential (acyclic shape keeps d^2 = 0)
        int pairs = static_cast<int>(rng() % (g / 2 + 1));
        for (int i = 0; i < pairs; ++i) {
            ClassAtom u;
            u.id = "u" + std::to_string(it) + "_" + std::to_string(i);
            u.space = Space::Strip;
            u.strip_from = "g" + std::to_string(2 * i);
            u.strip_to = "g" + std::to_string(2 * i + 1);
            u.maslov_raw = 1;
            u.area = Rat(static_cast<long>(rng() % 8) + 1, 4);
            local.add(u);
            d.strips.push_back({u.strip_from, u.strip_to, u.id,
                                Rat(static_cast<long>(rng() % 3) + 1), {}, {}});
        }
        FloerHomology hf = floer_homology(d, local, BoundaryMode::Novikov);
        CHECK(hf.rank_bound_ok);
        CHECK(hf.rank <= g);
        NovMatrix m = assemble_boundary_novikov(d, local);
        long rank = static_cast<long>(oracles::smith_valuations_poly_oracle(m).size());
        CHECK(hf.rank + 2 * rank == g);
    }
}

TEST_CASE("monotonicity audit") {
    Palette pal = fixtures::palette();
    FloerData d = two_generators();
    d.strips.push_back({"p", "q", "upq", 1, {}, {}});
    MonotonicityAudit a1 = monotonicity_audit(d, pal);
    CHECK(a1.consistent);
    CHECK(a1.offsets.at({"p", "q"}) == 0); // c mu - omega = 1/2 - 1/2

    // two classes with (mu, omega) = (1, 1/2) and (3, 3/2): same offset
    d.strips.push_back({"p", "q", "upq3", 1, {}, {}});
    CHECK(monotonicity_audit(d, pal).consistent);

    // same mu, different omega: witness
    FloerData bad = two_generators();
    bad.strips.push_back({"p", "q", "upq", 1, {}, {}});
    bad.strips.push_back({"p", "q", "upq", 1, rat(7, 3), {}});
    MonotonicityAudit a2 = monotonicity_audit(bad, pal);
    CHECK_FALSE(a2.consistent);
    CHECK(!a2.witnesses.empty());

    // additivity along p -> r -> q
    FloerData chain;
    chain.generators = {{"p", "o0", 0}, {"r", "o0", 1}, {"q", "o0", 0}};
    chain.monotonicity_c = rat(1, 2);
    chain.strips.push_back({"p", "r", "upr", 1, {}, {}});
    chain.strips.push_back({"r", "q", "urq", 1, {}, {}});
    chain.strips.push_back({"p", "q", "upq", 1, {}, {}});
    MonotonicityAudit a3 = monotonicity_audit(chain, pal);
    CHECK(a3.consistent); // offsets 0 + 0 = 0
}

TEST_CASE("the defect audit is invariant under generator permutation") {
    Palette pal = fixtures::palette();
    ClassAtom uqp;
    uqp.id = "uqp";
    uqp.space = Space::Strip;
    uqp.strip_from = "q";
    uqp.strip_to = "p";
    uqp.maslov_raw = 1;
    uqp.area = rat(1, 2);
    Palette pal2 = pal;
    pal2.add(uqp);
    FloerData d = two_generators();
    d.discs_L1.push_back({"b1", 5, ""});
    d.discs_L0.push_back({"b0", 2, ""});
    d.strips.push_back({"p", "q", "upq", 1, {}, {}});
    d.strips.push_back({"q", "p", "uqp", 3, {}, {}});
    FloerData swapped = d;
    std::swap(swapped.generators[0], swapped.generators[1]);
    DSquaredAudit a = d_squared_audit(d, pal2);
    DSquaredAudit b = d_squared_audit(swapped, pal2);
    CHECK(a.is_scalar_identity == b.is_scalar_identity);
    CHECK(a.observed_scalar == b.observed_scalar);
    CHECK(a.expected_defect == b.expected_defect);
}

TEST_CASE("negative or vanishing off-diagonal energy is rejected in Novikov mode") {
    Palette pal = fixtures::palette();
    FloerData d = two_generators();
    d.strips.push_back({"p", "q", "upq", 1, rat(-1, 2), {}});
    CHECK_THROWS_WITH_AS(assemble_boundary_novikov(d, pal), doctest::Contains("NegativeEnergy"),
                         Error);
    FloerData z = two_generators();
    z.strips.push_back({"p", "q", "upq", 1, rat(0), {}});
    CHECK_THROWS_WITH_AS(assemble_boundary_novikov(z, pal), doctest::Contains("NegativeEnergy"),
                         Error);
}

TEST_CASE("validation rejects divisor-meeting counts") {
    Palette pal = fixtures::palette();
    FloerData d = two_generators();
    d.strips.push_back({"p", "q", "wpq", 1, {}, {}}); // pair_D = 1
    Report rep = validate_floer_data(d, pal);
    CHECK_FALSE(rep.ok());
}
