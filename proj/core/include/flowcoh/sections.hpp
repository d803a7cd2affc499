#pragma once

#include <vector>

#include "flowcoh/groups.hpp"
#include "flowcoh/lattice.hpp"

namespace flowcoh {

// Self-covering of T^g induced by an integer matrix with nonzero
// determinant; the deck kernel is finite of order |det A|.
class CoveringEndo {
  public:
    explicit CoveringEndo(IntMatrix a);

    int g() const { return a_.rows(); }
    const IntMatrix& a() const { return a_; }
    const Int& kernelOrder() const { return det_abs_; }

  private:
    IntMatrix a_;
    Int det_abs_;
};

// Finite subgroup of T^g. Canonical form: delta is the exponent of the
// subgroup and lattice is the full preimage { v in Z^g : v/delta in F },
// so equal subgroups have equal fields and == is structural.
class TorusFinSubgroup {
  public:
    static TorusFinSubgroup trivial(int g);
    // Subgroup generated by the columns of numerators divided by delta,
    // taken mod 1.
    static TorusFinSubgroup fromScaledGenerators(int g, const IntMatrix& numerators,
                                                 const Int& delta);

    int g() const { return g_; }
    const Int& delta() const { return delta_; }
    const Lattice& lattice() const { return lattice_; }

    FgAbGroup structure() const;
    Int order() const;
    bool isTrivial() const { return delta_ == 1; }

    // Membership of the rational point numer/denom mod 1.
    bool contains(const std::vector<Int>& numer, const Int& denom) const;
    bool subgroupOf(const TorusFinSubgroup& other) const;

    bool operator==(const TorusFinSubgroup& rhs) const = default;

  private:
    TorusFinSubgroup() = default;

    int g_ = 0;
    Int delta_ = 1;
    Lattice lattice_;
};

TorusFinSubgroup subgroupSum(const TorusFinSubgroup& a, const TorusFinSubgroup& b);

// Loop data of the extension: the induced map Z^t -> Z^g on fundamental
// groups, one column per generating loop of the base.
struct LoopMatrix {
    IntMatrix m;
};

// Deck kernel of the covering, K = A^{-1}Z^g / Z^g.
TorusFinSubgroup kernelOf(const CoveringEndo& c);

// Monodromy image E_K(Q) = A^{-1}(Q + A Z^g) mod 1 for a lattice Q in Z^g.
TorusFinSubgroup monodromyE(const CoveringEndo& c, const Lattice& q);

// Inverse correspondence: the lattice { v in Z^g : A^{-1} v mod 1 in e },
// defined for subgroups e of the deck kernel.
Lattice monodromyQ(const CoveringEndo& c, const TorusFinSubgroup& e);

// Section of the extension with loop matrix M: E_K applied to the image
// lattice of M.
TorusFinSubgroup sectionViaMonodromy(const CoveringEndo& c, const LoopMatrix& xi);

// Same section through duality: with d the exponent of coker(A), the
// annihilator of the section is (1/d) A^t { w : M^t w in d Z^t }, and the
// section is recovered as the annihilator dual in T^g.
TorusFinSubgroup sectionViaCohomotopy(const CoveringEndo& c, const LoopMatrix& xi);

// The two routes must agree; false signals a library bug.
bool crossCheck(const CoveringEndo& c, const LoopMatrix& xi);

// For group-disjoint sections, section(M1 + M2) = section(M1) + section(M2).
// Throws NotApplicableError when the disjointness hypothesis fails.
bool sectionAdditivity(const CoveringEndo& c, const LoopMatrix& xi1, const LoopMatrix& xi2);

} // namespace flowcoh
