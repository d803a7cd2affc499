#pragma once

#include <vector>

#include "flowcoh/groups.hpp"
#include "flowcoh/structure.hpp"

namespace flowcoh {

// Hom(a, b): Hom(Z,B)=B, Hom(Z_j,Z_k)=Z_gcd(j,k), Hom(Z_j,Z)=0, additive.
FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& b);

// Ext(a, b): Ext(Z,-)=0, Ext(Z_k,B)=B/kB, Ext(Z_k,Z)=Z_k, additive.
FgAbGroup ext(const FgAbGroup& a, const FgAbGroup& b);

// Tor(a, b): Tor(Z,-)=0, Tor(Z_j,Z_k)=Z_gcd(j,k), additive.
FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b);

// a (x) b: Z (x) C = C, Z_k (x) C = C/kC, additive.
FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b);

// (Q/Z) (x) a = (Q/Z)^rank(a): a divisible group kills torsion.
StructureExpr tensorQmodZ(const FgAbGroup& a);

// Symmetric normalized 2-cocycle on a finite base with values in a finite
// fibre. The table is indexed by base element enumeration order.
class Cocycle2 {
  public:
    Cocycle2(FgAbGroup base, FgAbGroup fibre,
             std::vector<std::vector<std::vector<Int>>> table);

    const FgAbGroup& base() const { return base_; }
    const FgAbGroup& fibre() const { return fibre_; }
    const std::vector<std::vector<Int>>& baseElements() const { return elems_; }
    const std::vector<Int>& value(size_t i, size_t j) const { return table_[i][j]; }
    const std::vector<Int>& valueAt(const std::vector<Int>& c1, const std::vector<Int>& c2) const;

  private:
    size_t indexOf(const std::vector<Int>& c) const;

    FgAbGroup base_;
    FgAbGroup fibre_;
    std::vector<std::vector<Int>> elems_;
    std::vector<std::vector<std::vector<Int>>> table_;
};

// Carry cocycle on Z_k (k >= 2) with values reduced into Z_m:
// phi(r, s) = 0 if r + s < k, else 1.
Cocycle2 cocycleZk(const Int& k, const Int& targetModulus);

// Isomorphism type of the twisted product C x_phi A.
FgAbGroup twistedProduct(const FgAbGroup& c, const FgAbGroup& a, const Cocycle2& phi);

} // namespace flowcoh
