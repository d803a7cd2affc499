#include <doctest.h>

#include "flowcoh/flows.hpp"
#include "oracles.hpp"

using flowcoh::AtomKind;
using flowcoh::CoefficientGroup;
using flowcoh::FgAbGroup;
using flowcoh::FlowDescriptor;
using flowcoh::FlowFlags;
using flowcoh::Int;
using flowcoh::IntMatrix;
using flowcoh::SolenoidDescriptor;
using flowcoh::StructureExpr;

namespace {

IntMatrix mat(int rows, int cols, std::vector<long> entries) {
    std::vector<Int> e(entries.begin(), entries.end());
    return IntMatrix(rows, cols, std::move(e));
}

FlowFlags flags(bool sc, bool tf) {
    FlowFlags f;
    f.simply_connected = sc;
    f.topologically_free = tf;
    return f;
}

// R x T^1 on T^2: one free cycle next to the fibre cycle
FlowDescriptor workedExample() { return FlowDescriptor(2, mat(2, 1, {0, 1}), flags(false, true)); }

FlowDescriptor diag26() {
    return FlowDescriptor(3, mat(3, 2, {2, 0, 0, 6, 0, 0}), flags(false, true));
}

FlowDescriptor simplyConnected(int xRank) {
    return FlowDescriptor(xRank, IntMatrix(xRank, 0), flags(true, false));
}

FgAbGroup grp(int freeRank, std::vector<long> torsion) {
    return FgAbGroup::fromInvariantFactors(freeRank,
                                           std::vector<Int>(torsion.begin(), torsion.end()));
}

StructureExpr atomExpr(AtomKind k, long exp = 1) { return StructureExpr::atom(k, exp); }

} // namespace

TEST_CASE("descriptor analysis") {
    auto r = flowcoh::analyze(workedExample());
    CHECK(r.n == 1);
    CHECK(r.m == 1);
    CHECK(r.divisors == std::vector<Int>{1});
    CHECK(r.has_free_cycle);
    CHECK(r.is_topologically_free_asserted);

    auto empty = flowcoh::analyze(FlowDescriptor(0, IntMatrix(0, 0), flags(false, false)));
    CHECK(empty.n == 0);
    CHECK(empty.m == 0);
    CHECK_FALSE(empty.has_free_cycle);

    auto padded = flowcoh::analyze(diag26());
    CHECK(padded.n == 2);
    CHECK(padded.m == 1);
    CHECK(padded.divisors == std::vector<Int>{2, 6});
}

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(FlowDescriptor(2, mat(2, 1, {0, 1}), flags(true, false)),
                    flowcoh::DomainError);
    CHECK_THROWS_AS(FlowDescriptor(2, mat(1, 1, {1}), flags(false, true)),
                    flowcoh::DimensionError);
    CHECK_THROWS_AS(FlowDescriptor(-1, IntMatrix(0, 0), flags(false, false)),
                    flowcoh::DomainError);
    CHECK_NOTHROW(simplyConnected(0));
}

TEST_CASE("cohomologyCircle per branch") {
    CHECK(flowcoh::cohomologyCircle(workedExample()) ==
          flowcoh::exprSum(atomExpr(AtomKind::R), atomExpr(AtomKind::QmodZ)));
    CHECK(flowcoh::cohomologyCircle(workedExample()).toString() == "R ⊕ Q/Z");

    CHECK(flowcoh::cohomologyCircle(simplyConnected(2)) ==
          flowcoh::exprSum(atomExpr(AtomKind::R), atomExpr(AtomKind::QmodZ, 2)));

    StructureExpr expected = atomExpr(AtomKind::R);
    expected = flowcoh::exprSum(expected, atomExpr(AtomKind::QmodZ));
    expected = flowcoh::exprSum(expected, StructureExpr::zd(2));
    expected = flowcoh::exprSum(expected, StructureExpr::zd(6));
    CHECK(flowcoh::cohomologyCircle(diag26()) == expected);

    // no asserted hypothesis, or no free cycle
    CHECK_THROWS_AS(
        flowcoh::cohomologyCircle(FlowDescriptor(2, mat(2, 1, {0, 1}), flags(false, false))),
        flowcoh::NotApplicableError);
    CHECK_THROWS_AS(
        flowcoh::cohomologyCircle(FlowDescriptor(1, mat(1, 1, {3}), flags(false, true))),
        flowcoh::NotApplicableError);
}

TEST_CASE("torsionSubgroup needs no freeness hypotheses") {
    CHECK(flowcoh::torsionSubgroup(diag26(), 4) == grp(0, {2, 2, 4}));
    CHECK(flowcoh::torsionSubgroup(diag26(), 1) == FgAbGroup::trivial());
    CHECK(flowcoh::torsionSubgroup(simplyConnected(3), 5) == grp(0, {5, 5, 5}));

    // no flags, no free cycle: the torsion theorem still answers
    FlowDescriptor noFlags(1, mat(1, 1, {3}), flags(false, false));
    CHECK(flowcoh::torsionSubgroup(noFlags, 6) == FgAbGroup::cyclic(3));
    CHECK(flowcoh::torsionSubgroup(noFlags, 2) == FgAbGroup::trivial());

    CHECK_THROWS_AS(flowcoh::torsionSubgroup(diag26(), 0), flowcoh::DomainError);
}

TEST_CASE("fullTorsion") {
    CHECK(flowcoh::fullTorsion(workedExample()) == atomExpr(AtomKind::QmodZ));
    CHECK(flowcoh::fullTorsion(FlowDescriptor(1, mat(1, 1, {3}), flags(false, false))) ==
          StructureExpr::zd(3));
    CHECK(flowcoh::fullTorsion(FlowDescriptor(2, IntMatrix(2, 0), flags(false, true))) ==
          atomExpr(AtomKind::QmodZ, 2));
}

TEST_CASE("torsion routes agree on random descriptors") {
    auto rng = oracle::seededRng(501);
    std::uniform_int_distribution<int> kDist(1, 20);
    for (int trial = 0; trial < 30; ++trial) {
        FlowDescriptor fd = oracle::randomStructuredDescriptor(rng);
        for (int i = 0; i < 6; ++i) {
            Int k = kDist(rng);
            FgAbGroup direct = flowcoh::torsionSubgroup(fd, k);
            CHECK(direct == flowcoh::torsionOf(flowcoh::cohomologyCircle(fd), k));
            CHECK(direct == flowcoh::torsionOf(flowcoh::fullTorsion(fd), k));
        }
    }
}

TEST_CASE("coefficient groups reduce to rank triples") {
    CoefficientGroup t2 = CoefficientGroup::torus(2);
    CHECK(t2.r() == 2);
    CHECK(t2.f() == 2);
    CHECK(t2.t() == 0);
    CHECK_THROWS_AS(CoefficientGroup::torus(0), flowcoh::DomainError);

    CoefficientGroup sol = CoefficientGroup::solenoid({{}, {Int(2)}});
    CHECK(sol.r() == 1);
    CHECK(sol.f() == 0);
    CHECK(sol.t() == 1);
    CHECK_THROWS_AS(CoefficientGroup::solenoid({{}, {}}), flowcoh::DomainError);
    CHECK_THROWS_AS(CoefficientGroup::solenoid({{Int(2)}, {Int(1)}}), flowcoh::DomainError);

    CHECK_NOTHROW(CoefficientGroup::abstract(2, 1, 1));
    CHECK_THROWS_AS(CoefficientGroup::abstract(2, 2, 1), flowcoh::DomainError);
    CHECK_THROWS_AS(CoefficientGroup::abstract(0, 0, 0), flowcoh::DomainError);
}

TEST_CASE("cohomologyCoefficients frozen values") {
    // solenoid coefficients: n=1, m=2, d=(3)
    FlowDescriptor fd(3, mat(3, 1, {3, 0, 0}), flags(false, true));
    CHECK(flowcoh::cohomologyCoefficients(fd, CoefficientGroup::solenoid({{}, {Int(2)}})) ==
          flowcoh::exprSum(atomExpr(AtomKind::R), atomExpr(AtomKind::Q, 2)));

    // abstract(2,1,1): n=1, m=1, d=(2)
    FlowDescriptor fd2(2, mat(2, 1, {2, 0}), flags(false, true));
    StructureExpr expected = atomExpr(AtomKind::R, 2);
    expected = flowcoh::exprSum(expected, atomExpr(AtomKind::QmodZ));
    expected = flowcoh::exprSum(expected, atomExpr(AtomKind::Q));
    expected = flowcoh::exprSum(expected, StructureExpr::zd(2));
    CHECK(flowcoh::cohomologyCoefficients(fd2, CoefficientGroup::abstract(2, 1, 1)) == expected);

    CHECK_THROWS_AS(flowcoh::cohomologyCoefficients(simplyConnected(2), CoefficientGroup::torus(1)),
                    flowcoh::NotApplicableError);
}

TEST_CASE("torus(1) coefficients reproduce the circle theorem") {
    auto rng = oracle::seededRng(502);
    for (int trial = 0; trial < 40; ++trial) {
        FlowDescriptor fd = oracle::randomStructuredDescriptor(rng);
        if (fd.flags().simply_connected)
            continue;
        CHECK(flowcoh::cohomologyCoefficients(fd, CoefficientGroup::torus(1)) ==
              flowcoh::cohomologyCircle(fd));
    }
}

TEST_CASE("realizableFiniteSectionTorus frozen values") {
    FlowDescriptor fd(2, mat(2, 1, {2, 0}), flags(false, true)); // n=1, m=1, d=(2)
    CHECK(flowcoh::realizableFiniteSectionTorus(fd, 2, grp(0, {2, 4})));
    CHECK_FALSE(flowcoh::realizableFiniteSectionTorus(fd, 2, grp(0, {4, 4})));
    CHECK(flowcoh::realizableFiniteSectionTorus(fd, 0, FgAbGroup::trivial()));
    // embedding constraint: three invariant factors never fit into T^2
    CHECK_FALSE(flowcoh::realizableFiniteSectionTorus(fd, 2, grp(0, {2, 2, 2})));
    CHECK_THROWS_AS(flowcoh::realizableFiniteSectionTorus(fd, 2, FgAbGroup::free(1)),
                    flowcoh::DomainError);
}

TEST_CASE("realizableFiniteSectionTorus matches the surjection oracle") {
    auto rng = oracle::seededRng(503);
    auto candidates = oracle::allFiniteGroupsUpTo(16);
    for (int trial = 0; trial < 8; ++trial) {
        FlowDescriptor fd = oracle::randomStructuredDescriptor(rng);
        FgAbGroup source = FgAbGroup::fromCyclicFactors(fd.m(), fd.divisors());
        for (int k = 0; k <= 3; ++k)
            for (const FgAbGroup& cand : candidates) {
                bool expected = cand.invariantFactorCount() <= k &&
                                oracle::surjectionExists(source, cand);
                CHECK(flowcoh::realizableFiniteSectionTorus(fd, k, cand) == expected);
            }
    }
}

TEST_CASE("allSectionsRealizableTorus flips at m = k") {
    for (int m = 0; m <= 4; ++m) {
        FlowDescriptor fd(m, IntMatrix(m, 0), flags(false, true));
        for (int k = 0; k <= 4; ++k)
            CHECK(flowcoh::allSectionsRealizableTorus(fd, k) == (m >= k));
    }
}

TEST_CASE("all-sections implies every small-factor group is realizable") {
    auto rng = oracle::seededRng(504);
    auto candidates = oracle::allFiniteGroupsUpTo(32);
    for (int trial = 0; trial < 10; ++trial) {
        FlowDescriptor fd = oracle::randomStructuredDescriptor(rng);
        for (int k = 0; k <= 3; ++k) {
            if (!flowcoh::allSectionsRealizableTorus(fd, k))
                continue;
            for (const FgAbGroup& cand : candidates)
                if (cand.invariantFactorCount() <= k)
                    CHECK(flowcoh::realizableFiniteSectionTorus(fd, k, cand));
        }
    }
}

TEST_CASE("realizability is monotone under quotients") {
    auto rng = oracle::seededRng(505);
    auto candidates = oracle::allFiniteGroupsUpTo(16);
    std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        FlowDescriptor fd = oracle::randomStructuredDescriptor(rng);
        FgAbGroup k1 = candidates[pick(rng)];
        FgAbGroup k2 = candidates[pick(rng)];
        int k = 2;
        if (flowcoh::realizableFiniteSectionTorus(fd, k, k1) && flowcoh::isQuotientOf(k2, k1) &&
            k2.invariantFactorCount() <= k)
            CHECK(flowcoh::realizableFiniteSectionTorus(fd, k, k2));
    }
}

TEST_CASE("solenoidSectionCatalog") {
    FlowDescriptor hasCycle(1, IntMatrix(1, 0), flags(false, true));
    FlowDescriptor noCycle(1, mat(1, 1, {3}), flags(false, true));
    CHECK(flowcoh::solenoidSectionCatalog(hasCycle, {1, 2}));
    CHECK(flowcoh::solenoidSectionCatalog(hasCycle, {3, 10}));
    CHECK(flowcoh::solenoidSectionCatalog(hasCycle, {1, 0})); // whole solenoid
    CHECK_FALSE(flowcoh::solenoidSectionCatalog(noCycle, {1, 2}));
    CHECK_FALSE(flowcoh::solenoidSectionCatalog(noCycle, {1, 0}));
    CHECK_THROWS_AS(flowcoh::solenoidSectionCatalog(hasCycle, {0, 2}), flowcoh::DomainError);
    CHECK_THROWS_AS(flowcoh::solenoidSectionCatalog(hasCycle, {1, 1}), flowcoh::DomainError);
}

TEST_CASE("zdInSolenoid") {
    SolenoidDescriptor dyadic{{}, {Int(2)}};
    CHECK(flowcoh::zdInSolenoid(dyadic, 3));
    CHECK_FALSE(flowcoh::zdInSolenoid(dyadic, 2));
    CHECK(flowcoh::zdInSolenoid({{}, {Int(2), Int(3)}}, 5));
    CHECK_FALSE(flowcoh::zdInSolenoid({{}, {Int(2), Int(3)}}, 9));
    // prefix entries do not constrain the criterion
    CHECK(flowcoh::zdInSolenoid({{Int(2), Int(2)}, {Int(3)}}, 2));
    CHECK_THROWS_AS(flowcoh::zdInSolenoid({{}, {}}, 3), flowcoh::DomainError);
    CHECK_THROWS_AS(flowcoh::zdInSolenoid({{}, {Int(1)}}, 3), flowcoh::DomainError);
    CHECK_THROWS_AS(flowcoh::zdInSolenoid(dyadic, 1), flowcoh::DomainError);
}

TEST_CASE("simply connected realizability criteria") {
    CHECK(flowcoh::realizableZdSimplyConnected(simplyConnected(1), 6));
    CHECK_FALSE(flowcoh::realizableZdSimplyConnected(simplyConnected(0), 2));
    CHECK(flowcoh::realizableZdSimplyConnected(simplyConnected(2), 4));
    CHECK_THROWS_AS(flowcoh::realizableZdSimplyConnected(workedExample(), 2),
                    flowcoh::NotApplicableError);

    CHECK(flowcoh::torusModularRank(simplyConnected(2), 2, 4));
    CHECK_FALSE(flowcoh::torusModularRank(simplyConnected(1), 2, 4));
    CHECK(flowcoh::torusModularRank(simplyConnected(1), 0, 2));
    CHECK_THROWS_AS(flowcoh::torusModularRank(workedExample(), 1, 2),
                    flowcoh::NotApplicableError);
}

TEST_CASE("dPureRankOne matches the purity scan") {
    CHECK(flowcoh::dPureRankOne({Int(1), Int(0)}, 2));
    CHECK_FALSE(flowcoh::dPureRankOne({Int(2), Int(0)}, 2));
    CHECK(flowcoh::dPureRankOne({Int(2), Int(1)}, 2));
    CHECK_THROWS_AS(flowcoh::dPureRankOne({Int(0), Int(0)}, 2), flowcoh::DomainError);
    CHECK_THROWS_AS(flowcoh::dPureRankOne({Int(1)}, 1), flowcoh::DomainError);

    for (Int d = 2; d <= 6; ++d) {
        for (long x = -4; x <= 4; ++x) {
            if (x != 0)
                CHECK(flowcoh::dPureRankOne({Int(x)}, d) == oracle::dPureByScan({Int(x)}, d));
            for (long y = -4; y <= 4; ++y) {
                if (x == 0 && y == 0)
                    continue;
                std::vector<Int> v = {Int(x), Int(y)};
                CHECK(flowcoh::dPureRankOne(v, d) == oracle::dPureByScan(v, d));
            }
        }
        // a three-dimensional sample along the diagonal slices
        for (long x = -4; x <= 4; ++x)
            for (long y = -4; y <= 4; ++y) {
                std::vector<Int> v = {Int(x), Int(y), Int(x + y)};
                if (x == 0 && y == 0)
                    continue;
                CHECK(flowcoh::dPureRankOne(v, d) == oracle::dPureByScan(v, d));
            }
    }
}

TEST_CASE("freeCycleFromTori") {
    CHECK(flowcoh::freeCycleFromTori(1, 1) == 0);
    CHECK(flowcoh::freeCycleFromTori(1, 3) == 2);
    CHECK(flowcoh::freeCycleFromTori(0, 2) == 2);
    CHECK_THROWS_AS(flowcoh::freeCycleFromTori(3, 1), flowcoh::DomainError);
    CHECK_THROWS_AS(flowcoh::freeCycleFromTori(-1, 0), flowcoh::DomainError);
}

TEST_CASE("freeExtensionShapes displays the worked example") {
    auto s = flowcoh::freeExtensionShapes(workedExample());
    CHECK(s.base_sub_display == "0 ⊕ R ⊕ Z ⊕ Z");
    CHECK(s.base_ambient_display == "R ⊕ R ⊕ Q ⊕ Z");
    CHECK(s.fibre_sub_display == "bR × 1 × Zperp(Q*) × 1");
    CHECK(s.fibre_ambient_display == "bR × bR × Q* × T1");

    CHECK(s.base_sub == flowcoh::exprSum(atomExpr(AtomKind::R), atomExpr(AtomKind::Z, 2)));
    StructureExpr amb = atomExpr(AtomKind::R, 2);
    amb = flowcoh::exprSum(amb, atomExpr(AtomKind::Q));
    amb = flowcoh::exprSum(amb, atomExpr(AtomKind::Z));
    CHECK(s.base_ambient == amb);
}

TEST_CASE("freeExtensionShapes in the simply connected branch") {
    auto s = flowcoh::freeExtensionShapes(simplyConnected(2));
    CHECK(s.base_sub_display == "0 ⊕ R ⊕ Z ⊕ Z");
    CHECK(s.base_ambient_display == "R ⊕ R ⊕ Q ⊕ Q");
    CHECK(s.fibre_sub_display == "bR × 1 × Zperp(Q*) × Zperp(Q*)");
    CHECK(s.fibre_ambient_display == "bR × bR × Q* × Q*");
    CHECK(s.fibre_ambient == flowcoh::exprSum(atomExpr(AtomKind::bR, 2),
                                              atomExpr(AtomKind::Qdual, 2)));
}

TEST_CASE("freeExtensionShapes with nontrivial divisors") {
    auto s = flowcoh::freeExtensionShapes(diag26());
    CHECK(s.base_sub_display == "0 ⊕ R ⊕ Z ⊕ 2Z ⊕ 6Z");
    CHECK(s.base_ambient_display == "R ⊕ R ⊕ Q ⊕ Z ⊕ Z");
    CHECK(s.fibre_sub_display == "bR × 1 × Zperp(Q*) × Z_2 × Z_6");
    CHECK(s.fibre_ambient_display == "bR × bR × Q* × T1 × T1");

    CHECK_THROWS_AS(
        flowcoh::freeExtensionShapes(FlowDescriptor(1, mat(1, 1, {3}), flags(false, true))),
        flowcoh::NotApplicableError);
}
