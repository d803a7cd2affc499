#include "flowcoh/flows.hpp"

#include <sstream>

namespace flowcoh {

namespace {

Int gcd(Int a, Int b) {
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void requireStructureBranch(const FlowDescriptor& fd) {
    if (!fd.structureApplicable())
        throw NotApplicableError(
            "structure theorem needs topological freeness with a free cycle, "
            "or a simply connected acting group");
}

void validateSolenoid(const SolenoidDescriptor& p) {
    if (p.cycle.empty())
        throw DomainError("solenoid cycle must be nonempty");
    for (const Int& e : p.prefix)
        if (e < 2)
            throw DomainError("solenoid entries must be >= 2");
    for (const Int& e : p.cycle)
        if (e < 2)
            throw DomainError("solenoid entries must be >= 2");
}

std::string joinTokens(const std::vector<std::string>& tokens, const char* sep) {
    std::ostringstream out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0)
            out << sep;
        out << tokens[i];
    }
    return out.str();
}

} // namespace

FlowDescriptor::FlowDescriptor(int xRank, IntMatrix imageGens, FlowFlags flags)
    : x_rank_(xRank), image_gens_(std::move(imageGens)), flags_(flags) {
    if (x_rank_ < 0)
        throw DomainError("x_rank must be >= 0");
    if (image_gens_.rows() != x_rank_)
        throw DimensionError("image generators must have x_rank rows");
    SubgroupEmbedding emb = elementaryDivisorsOfSubgroup(x_rank_, image_gens_);
    n_ = emb.n;
    divisors_ = emb.divisors;
    if (flags_.simply_connected && n_ > 0)
        throw DomainError(
            "a simply connected acting group has trivial weak homology image");
}

AnalysisReport analyze(const FlowDescriptor& fd) {
    AnalysisReport r;
    r.n = fd.n();
    r.m = fd.m();
    r.divisors = fd.divisors();
    r.has_free_cycle = fd.hasFreeCycle();
    r.is_topologically_free_asserted = fd.flags().topologically_free;
    return r;
}

StructureExpr cohomologyCircle(const FlowDescriptor& fd) {
    requireStructureBranch(fd);
    StructureExpr e = StructureExpr::atom(AtomKind::R);
    if (fd.flags().simply_connected)
        return exprSum(e, StructureExpr::atom(AtomKind::QmodZ, fd.xRank()));
    e = exprSum(e, StructureExpr::atom(AtomKind::QmodZ, fd.m()));
    for (const Int& d : fd.divisors())
        e = exprSum(e, StructureExpr::zd(d));
    return e;
}

// The torsion theorems hold in the ambient Lie-group-on-manifold setting
// without freeness hypotheses, so no flag check here. The simply connected
// case needs no branch either: n = 0 forces m = x_rank and empty divisors,
// which makes the general formula collapse to (Z_k)^{x_rank}.
FgAbGroup torsionSubgroup(const FlowDescriptor& fd, const Int& k) {
    if (k < 1)
        throw DomainError("torsion order must be >= 1");
    std::vector<Int> orders;
    for (const Int& d : fd.divisors())
        orders.push_back(gcd(d, k));
    for (int i = 0; i < fd.m(); ++i)
        orders.push_back(k);
    return FgAbGroup::fromCyclicFactors(0, orders);
}

StructureExpr fullTorsion(const FlowDescriptor& fd) {
    StructureExpr e = StructureExpr::atom(AtomKind::QmodZ, fd.m());
    for (const Int& d : fd.divisors())
        e = exprSum(e, StructureExpr::zd(d));
    return e;
}

CoefficientGroup CoefficientGroup::torus(int k) {
    if (k < 1)
        throw DomainError("torus dimension must be >= 1");
    return CoefficientGroup(k, k, 0);
}

CoefficientGroup CoefficientGroup::solenoid(SolenoidDescriptor p) {
    validateSolenoid(p);
    return CoefficientGroup(1, 0, 1);
}

CoefficientGroup CoefficientGroup::abstract(int r, int f, int t) {
    if (r < 1 || f < 0 || t < 0)
        throw DomainError("coefficient ranks must be r >= 1, f, t >= 0");
    if (r != f + t)
        throw DomainError("coefficient ranks must satisfy r = f + t");
    return CoefficientGroup(r, f, t);
}

StructureExpr cohomologyCoefficients(const FlowDescriptor& fd, const CoefficientGroup& g) {
    if (!fd.flags().topologically_free || fd.m() < 1)
        throw NotApplicableError(
            "coefficient structure theorem needs topological freeness and a free cycle");
    StructureExpr e = StructureExpr::atom(AtomKind::R, g.r());
    e = exprSum(e, StructureExpr::atom(AtomKind::QmodZ, static_cast<long>(fd.m()) * g.f()));
    e = exprSum(e, StructureExpr::atom(AtomKind::Q, static_cast<long>(fd.m()) * g.t()));
    for (const Int& d : fd.divisors())
        e = exprSum(e, StructureExpr::zd(d, g.f()));
    return e;
}

bool realizableFiniteSectionTorus(const FlowDescriptor& fd, int k, const FgAbGroup& K) {
    if (k < 0)
        throw DomainError("torus dimension must be >= 0");
    if (!K.finite())
        throw DomainError("section candidate must be finite");
    if (K.invariantFactorCount() > k)
        return false;
    FgAbGroup source = FgAbGroup::fromCyclicFactors(fd.m(), fd.divisors());
    return isQuotientOf(K, source);
}

bool allSectionsRealizableTorus(const FlowDescriptor& fd, int k) {
    if (k < 0)
        throw DomainError("torus dimension must be >= 0");
    return fd.m() >= k;
}

bool solenoidSectionCatalog(const FlowDescriptor& fd, const SolenoidSubgroupKm& K) {
    if (K.m < 1)
        throw DomainError("solenoid coordinate index must be >= 1");
    if (K.k != 0 && K.k < 2)
        throw DomainError("subgroup parameter must be >= 2, or 0 for the whole solenoid");
    return fd.m() >= 1;
}

bool zdInSolenoid(const SolenoidDescriptor& p, const Int& d) {
    validateSolenoid(p);
    if (d < 2)
        throw DomainError("cyclic order must be >= 2");
    for (const Int& e : p.cycle)
        if (gcd(e, d) != 1)
            return false;
    return true;
}

bool realizableZdSimplyConnected(const FlowDescriptor& fd, const Int& d) {
    if (!fd.flags().simply_connected)
        throw NotApplicableError("criterion needs a simply connected acting group");
    if (d < 2)
        throw DomainError("cyclic order must be >= 2");
    return fd.xRank() >= 1;
}

bool torusModularRank(const FlowDescriptor& fd, int nTarget, const Int& d) {
    if (!fd.flags().simply_connected)
        throw NotApplicableError("criterion needs a simply connected acting group");
    if (nTarget < 0)
        throw DomainError("target rank must be >= 0");
    if (d < 2)
        throw DomainError("modulus must be >= 2");
    // Z^{x_rank} / d Z^{x_rank} is free of rank x_rank over Z_d.
    return fd.xRank() >= nTarget;
}

bool dPureRankOne(const std::vector<Int>& v, const Int& d) {
    if (d < 2)
        throw DomainError("modulus must be >= 2");
    Int content = 0;
    for (const Int& x : v)
        content = gcd(content, x);
    if (content == 0)
        throw DomainError("purity is about nonzero vectors");
    return gcd(content, d) == 1;
}

int freeCycleFromTori(int dimGammaTorus, int dimGTorus) {
    if (dimGammaTorus < 0 || dimGTorus < 0)
        throw DomainError("torus dimensions must be >= 0");
    if (dimGTorus < dimGammaTorus)
        throw DomainError("the acting group embeds, so its torus part cannot be larger");
    return dimGTorus - dimGammaTorus;
}

InclusionShapes freeExtensionShapes(const FlowDescriptor& fd) {
    requireStructureBranch(fd);
    InclusionShapes s;
    const bool sc = fd.flags().simply_connected;
    const int m = sc ? fd.xRank() : fd.m();

    std::vector<std::string> bsub = {"0", "R"};
    std::vector<std::string> bamb = {"R", "R"};
    std::vector<std::string> fsub = {"bR", "1"};
    std::vector<std::string> famb = {"bR", "bR"};
    for (int i = 0; i < m; ++i) {
        bsub.push_back("Z");
        bamb.push_back("Q");
        fsub.push_back(atomName({AtomKind::ZperpQdual, 0}));
        famb.push_back(atomName({AtomKind::Qdual, 0}));
    }

    s.base_sub = exprSum(StructureExpr::atom(AtomKind::R), StructureExpr::atom(AtomKind::Z, m));
    s.base_ambient = exprSum(StructureExpr::atom(AtomKind::R, 2), StructureExpr::atom(AtomKind::Q, m));
    s.fibre_sub = exprSum(StructureExpr::atom(AtomKind::bR),
                          StructureExpr::atom(AtomKind::ZperpQdual, m));
    s.fibre_ambient = exprSum(StructureExpr::atom(AtomKind::bR, 2),
                              StructureExpr::atom(AtomKind::Qdual, m));

    if (!sc) {
        for (const Int& d : fd.divisors()) {
            // d_i Z sits in the i-th Z factor; Z_{d_i} in the i-th circle.
            bsub.push_back(d == 1 ? "Z" : d.str() + "Z");
            bamb.push_back("Z");
            fsub.push_back(d == 1 ? "1" : "Z_" + d.str());
            famb.push_back(atomName({AtomKind::T1, 0}));
            s.base_sub = exprSum(s.base_sub, StructureExpr::atom(AtomKind::Z));
            s.fibre_sub = exprSum(s.fibre_sub, StructureExpr::zd(d));
        }
        s.base_ambient = exprSum(s.base_ambient, StructureExpr::atom(AtomKind::Z, fd.n()));
        s.fibre_ambient = exprSum(s.fibre_ambient, StructureExpr::atom(AtomKind::T1, fd.n()));
    }

    s.base_sub_display = joinTokens(bsub, " ⊕ ");
    s.base_ambient_display = joinTokens(bamb, " ⊕ ");
    s.fibre_sub_display = joinTokens(fsub, " × ");
    s.fibre_ambient_display = joinTokens(famb, " × ");
    return s;
}

} // namespace flowcoh
