#pragma once

#include <string>
#include <vector>

#include "flowcoh/groups.hpp"
#include "flowcoh/structure.hpp"

namespace flowcoh {

// User-asserted hypotheses about the acting group and the base flow. The
// library never verifies these; it computes consequences.
struct FlowFlags {
    bool simply_connected = false;
    bool topologically_free = false;
    bool no_finite_abelian_quotients = false;
};

// Weak first homology data of a minimal flow extension problem: the rank of
// H1w(X) and generators of the image of H1w(F) inside it.
class FlowDescriptor {
  public:
    FlowDescriptor(int xRank, IntMatrix imageGens, FlowFlags flags);

    int xRank() const { return x_rank_; }
    const IntMatrix& imageGens() const { return image_gens_; }
    const FlowFlags& flags() const { return flags_; }

    int n() const { return n_; }
    int m() const { return x_rank_ - n_; }
    const std::vector<Int>& divisors() const { return divisors_; } // 1s kept
    bool hasFreeCycle() const { return m() >= 1; }

    // Whether some structure theorem branch applies as asserted.
    bool structureApplicable() const {
        return flags_.simply_connected || (flags_.topologically_free && m() >= 1);
    }

  private:
    int x_rank_ = 0;
    IntMatrix image_gens_;
    FlowFlags flags_;
    int n_ = 0;
    std::vector<Int> divisors_;
};

struct AnalysisReport {
    int n = 0;
    int m = 0;
    std::vector<Int> divisors;
    bool has_free_cycle = false;
    bool is_topologically_free_asserted = false;
};

AnalysisReport analyze(const FlowDescriptor& fd);

// H_F for circle-valued cocycles: R + (Q/Z)^m + sum Z_{d_i} in the
// topologically free branch with a free cycle, R + (Q/Z)^{x_rank} when the
// acting group is simply connected. Throws NotApplicableError otherwise.
StructureExpr cohomologyCircle(const FlowDescriptor& fd);

// k-torsion of H_F as a finite group.
FgAbGroup torsionSubgroup(const FlowDescriptor& fd, const Int& k);

// Whole torsion subgroup of H_F.
StructureExpr fullTorsion(const FlowDescriptor& fd);

// Eventually periodic supernatural sequence: prefix then repeating cycle,
// all entries >= 2, cycle nonempty.
struct SolenoidDescriptor {
    std::vector<Int> prefix;
    std::vector<Int> cycle;
};

// Connected compact coefficient group, reduced to the three ranks that the
// structure theorem consumes: r = rank of the dual, f the free summand rank,
// t the torsion-free-divisible summand rank, r = f + t.
class CoefficientGroup {
  public:
    static CoefficientGroup torus(int k);
    static CoefficientGroup solenoid(SolenoidDescriptor p);
    static CoefficientGroup abstract(int r, int f, int t);

    int r() const { return r_; }
    int f() const { return f_; }
    int t() const { return t_; }

  private:
    CoefficientGroup(int r, int f, int t) : r_(r), f_(f), t_(t) {}

    int r_ = 0;
    int f_ = 0;
    int t_ = 0;
};

// H_F for cocycles valued in a connected coefficient group:
// R^r + (Q/Z)^{m f} + Q^{m t} + (sum Z_{d_i})^f. Needs topological freeness
// and a free cycle.
StructureExpr cohomologyCoefficients(const FlowDescriptor& fd, const CoefficientGroup& g);

// Finite K arises as the section of some extension by T^k iff K embeds in
// T^k (at most k invariant factors) and K is a quotient of
// Z_{d_1}+...+Z_{d_n}+Z^m.
bool realizableFiniteSectionTorus(const FlowDescriptor& fd, int k, const FgAbGroup& K);

// Every closed subgroup of T^k arises as a section iff m >= k.
bool allSectionsRealizableTorus(const FlowDescriptor& fd, int k);

// K = pr_m^{-1}(Z_k) inside a solenoid; k = 0 asks for the whole solenoid
// (the minimal-extension question).
struct SolenoidSubgroupKm {
    int m = 1;
    Int k = 2;
};

// Sections of solenoid-valued extensions: every K of this shape (and the
// whole solenoid) is realizable iff a free cycle exists.
bool solenoidSectionCatalog(const FlowDescriptor& fd, const SolenoidSubgroupKm& K);

// Z_d embeds into the solenoid S_p iff d is coprime to every entry of the
// repeating cycle.
bool zdInSolenoid(const SolenoidDescriptor& p, const Int& d);

// Simply connected acting group: Z_d sections exist iff x_rank >= 1.
bool realizableZdSimplyConnected(const FlowDescriptor& fd, const Int& d);

// Simply connected acting group, torus fibre T^n_target: the criterion is
// rank of H1w(X) as a Z_d-module, which for Z^{x_rank} is x_rank.
bool torusModularRank(const FlowDescriptor& fd, int nTarget, const Int& d);

// Whether the rank-one subgroup generated by v is d-pure in Z^t.
bool dPureRankOne(const std::vector<Int>& v, const Int& d);

// Equicontinuous case with torus-component dimensions: the free-cycle count
// is the dimension difference.
int freeCycleFromTori(int dimGammaTorus, int dimGTorus);

// The inclusion shapes of the structure theorem, both as normalized
// expressions and as positional displays that keep the zero slot and the
// d_i Z / Z_{d_i} factors in theorem order.
struct InclusionShapes {
    StructureExpr base_sub;
    StructureExpr base_ambient;
    StructureExpr fibre_sub;
    StructureExpr fibre_ambient;
    std::string base_sub_display;
    std::string base_ambient_display;
    std::string fibre_sub_display;
    std::string fibre_ambient_display;
};

InclusionShapes freeExtensionShapes(const FlowDescriptor& fd);

} // namespace flowcoh
