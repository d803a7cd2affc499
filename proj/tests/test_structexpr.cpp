#include <doctest.h>

#include "flowcoh/structure.hpp"
#include "oracles.hpp"

using flowcoh::AtomKind;
using flowcoh::FgAbGroup;
using flowcoh::Int;
using flowcoh::StructureExpr;

namespace {

StructureExpr atomExpr(AtomKind k, long exp = 1) { return StructureExpr::atom(k, exp); }

} // namespace

TEST_CASE("atom factories validate and normalize") {
    CHECK(StructureExpr::atom(AtomKind::R, 0) == StructureExpr::trivial());
    CHECK(StructureExpr::zd(1) == StructureExpr::trivial());
    CHECK(StructureExpr::zd(1, 7) == StructureExpr::trivial());
    CHECK_THROWS_AS(StructureExpr::atom(AtomKind::R, -1), flowcoh::DomainError);
    CHECK_THROWS_AS(StructureExpr::zd(0), flowcoh::DomainError);
    CHECK_THROWS_AS(StructureExpr::zd(6, -2), flowcoh::DomainError);
    CHECK_THROWS_AS(StructureExpr::atom(AtomKind::Zd), flowcoh::DomainError);
    CHECK(StructureExpr::trivial().isTrivial());
    CHECK(StructureExpr::trivial().toString() == "0");
}

TEST_CASE("exprSum merges and orders atoms") {
    StructureExpr r = atomExpr(AtomKind::R);
    CHECK(flowcoh::exprSum(r, StructureExpr::trivial()) == r);
    CHECK(flowcoh::exprSum(r, r) == atomExpr(AtomKind::R, 2));

    StructureExpr z2 = StructureExpr::zd(2);
    StructureExpr z6 = StructureExpr::zd(6);
    StructureExpr sum = flowcoh::exprSum(flowcoh::exprSum(z2, z6), z2);
    CHECK(sum == flowcoh::exprSum(StructureExpr::zd(2, 2), z6));
    CHECK(sum.toString() == "(Z_2)^2 ⊕ Z_6");

    // no cardinal-arithmetic collapse: R + R stays R^2
    CHECK(flowcoh::exprSum(r, r).toString() == "R^2");
}

TEST_CASE("exprSum is commutative and associative") {
    auto rng = oracle::seededRng(401);
    std::uniform_int_distribution<int> kindDist(0, 8);
    std::uniform_int_distribution<int> dDist(2, 9);
    std::uniform_int_distribution<int> expDist(0, 3);
    auto randomExpr = [&]() {
        StructureExpr e;
        for (int i = 0; i < 3; ++i) {
            AtomKind k = static_cast<AtomKind>(kindDist(rng));
            if (k == AtomKind::Zd)
                e = flowcoh::exprSum(e, StructureExpr::zd(dDist(rng), expDist(rng)));
            else
                e = flowcoh::exprSum(e, StructureExpr::atom(k, expDist(rng)));
        }
        return e;
    };
    for (int trial = 0; trial < 50; ++trial) {
        StructureExpr a = randomExpr();
        StructureExpr b = randomExpr();
        StructureExpr c = randomExpr();
        CHECK(flowcoh::exprSum(a, b) == flowcoh::exprSum(b, a));
        CHECK(flowcoh::exprSum(flowcoh::exprSum(a, b), c) ==
              flowcoh::exprSum(a, flowcoh::exprSum(b, c)));
    }
}

TEST_CASE("toString respects the fixed atom order and parenthesization") {
    StructureExpr e = StructureExpr::trivial();
    e = flowcoh::exprSum(e, StructureExpr::zd(3));
    e = flowcoh::exprSum(e, atomExpr(AtomKind::Z));
    e = flowcoh::exprSum(e, atomExpr(AtomKind::T1));
    e = flowcoh::exprSum(e, atomExpr(AtomKind::ZperpQdual));
    e = flowcoh::exprSum(e, atomExpr(AtomKind::QmodZ));
    e = flowcoh::exprSum(e, atomExpr(AtomKind::Qdual));
    e = flowcoh::exprSum(e, atomExpr(AtomKind::Q));
    e = flowcoh::exprSum(e, atomExpr(AtomKind::bR));
    e = flowcoh::exprSum(e, atomExpr(AtomKind::R));
    CHECK(e.toString() == "R ⊕ bR ⊕ Q ⊕ Q* ⊕ Q/Z ⊕ Zperp(Q*) ⊕ T1 ⊕ Z ⊕ Z_3");

    CHECK(atomExpr(AtomKind::QmodZ, 2).toString() == "(Q/Z)^2");
    CHECK(atomExpr(AtomKind::Z, 3).toString() == "Z^3");
    CHECK(atomExpr(AtomKind::bR, 2).toString() == "(bR)^2");
    CHECK(StructureExpr::zd(6, 2).toString() == "(Z_6)^2");
    CHECK(flowcoh::exprSum(StructureExpr::zd(2), StructureExpr::zd(12)).toString() ==
          "Z_2 ⊕ Z_12");
}

TEST_CASE("torsionOf frozen values") {
    CHECK(flowcoh::torsionOf(atomExpr(AtomKind::QmodZ), 4) == FgAbGroup::cyclic(4));

    StructureExpr e = flowcoh::exprSum(
        flowcoh::exprSum(atomExpr(AtomKind::R), atomExpr(AtomKind::QmodZ)),
        flowcoh::exprSum(StructureExpr::zd(2), StructureExpr::zd(6)));
    CHECK(flowcoh::torsionOf(e, 4) ==
          FgAbGroup::fromCyclicFactors(0, {Int(4), Int(2), Int(2)}));

    CHECK(flowcoh::torsionOf(StructureExpr::trivial(), 12) == FgAbGroup::trivial());
    CHECK(flowcoh::torsionOf(atomExpr(AtomKind::Z), 6) == FgAbGroup::trivial());
    CHECK(flowcoh::torsionOf(atomExpr(AtomKind::Q), 6) == FgAbGroup::trivial());
    CHECK(flowcoh::torsionOf(atomExpr(AtomKind::Qdual), 6) == FgAbGroup::trivial());
    CHECK(flowcoh::torsionOf(StructureExpr::zd(10), 15) == FgAbGroup::cyclic(5));
    CHECK(flowcoh::torsionOf(e, 1) == FgAbGroup::trivial());

    CHECK_THROWS_AS(flowcoh::torsionOf(atomExpr(AtomKind::T1), 2), flowcoh::NotApplicableError);
    CHECK_THROWS_AS(flowcoh::torsionOf(atomExpr(AtomKind::ZperpQdual), 2),
                    flowcoh::NotApplicableError);
    CHECK_THROWS_AS(flowcoh::torsionOf(e, 0), flowcoh::DomainError);
}

TEST_CASE("torsionOf is additive over exprSum") {
    auto rng = oracle::seededRng(402);
    std::uniform_int_distribution<int> kindDist(0, 8);
    std::uniform_int_distribution<int> dDist(2, 12);
    std::uniform_int_distribution<int> expDist(0, 3);
    std::uniform_int_distribution<int> kDist(1, 30);
    auto randomTorsionable = [&]() {
        StructureExpr e;
        for (int i = 0; i < 3; ++i) {
            AtomKind k = static_cast<AtomKind>(kindDist(rng));
            if (k == AtomKind::T1 || k == AtomKind::ZperpQdual)
                k = AtomKind::QmodZ;
            if (k == AtomKind::Zd)
                e = flowcoh::exprSum(e, StructureExpr::zd(dDist(rng), expDist(rng)));
            else
                e = flowcoh::exprSum(e, StructureExpr::atom(k, expDist(rng)));
        }
        return e;
    };
    for (int trial = 0; trial < 60; ++trial) {
        StructureExpr a = randomTorsionable();
        StructureExpr b = randomTorsionable();
        Int k = kDist(rng);
        CHECK(flowcoh::torsionOf(flowcoh::exprSum(a, b), k) ==
              flowcoh::torsionOf(a, k).directSum(flowcoh::torsionOf(b, k)));
    }
}

TEST_CASE("fromFgAbGroup embeds the canonical decomposition") {
    CHECK(flowcoh::fromFgAbGroup(FgAbGroup::free(1)) == atomExpr(AtomKind::Z));
    CHECK(flowcoh::fromFgAbGroup(FgAbGroup::cyclic(6)) == StructureExpr::zd(6));
    CHECK(flowcoh::fromFgAbGroup(FgAbGroup::fromInvariantFactors(2, {Int(4)})) ==
          flowcoh::exprSum(atomExpr(AtomKind::Z, 2), StructureExpr::zd(4)));
    CHECK(flowcoh::fromFgAbGroup(FgAbGroup::trivial()) == StructureExpr::trivial());

    // round trip through torsionOf at the exponent recovers the torsion part
    FgAbGroup g = FgAbGroup::fromInvariantFactors(1, {Int(2), Int(6)});
    CHECK(flowcoh::torsionOf(flowcoh::fromFgAbGroup(g), 6) ==
          FgAbGroup::fromInvariantFactors(0, {Int(2), Int(6)}));
}
