#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flowcoh/groups.hpp"

namespace flowcoh {

// Symbolic atoms appearing in the structure reports. bR is the Bohr
// compactification of the reals, Qdual the dual of the discrete rationals,
// ZperpQdual the annihilator of Z inside it, T1 the circle.
enum class AtomKind { R, bR, Q, Qdual, QmodZ, ZperpQdual, T1, Z, Zd };

struct Atom {
    AtomKind kind = AtomKind::Z;
    Int d = 0; // used only for Zd (d >= 2)

    bool operator==(const Atom& rhs) const = default;
};

std::string atomName(const Atom& a); // "R", "Q/Z", "Z_6", "Zperp(Q*)", ...

// Formal direct sum of atoms with positive integer exponents, kept
// normalized: exponent-0 terms dropped, Z_1 dropped, like atoms merged,
// deterministic term order. Equality is multiset equality.
class StructureExpr {
  public:
    StructureExpr() = default;

    static StructureExpr trivial() { return StructureExpr(); }
    static StructureExpr atom(AtomKind kind, long exponent = 1);
    static StructureExpr zd(const Int& d, long exponent = 1);

    const std::vector<std::pair<Atom, long>>& terms() const { return terms_; }
    bool isTrivial() const { return terms_.empty(); }

    std::string toString() const; // "R ⊕ Q/Z ⊕ (Z_6)^2", "0" when trivial

    bool operator==(const StructureExpr& rhs) const = default;

  private:
    void normalize();

    std::vector<std::pair<Atom, long>> terms_;

    friend StructureExpr exprSum(const StructureExpr& e1, const StructureExpr& e2);
};

StructureExpr exprSum(const StructureExpr& e1, const StructureExpr& e2);

// k-torsion as a finite group: tor_k(Q/Z) = Z_k, tor_k(Z_d) = Z_gcd(d,k),
// tor_k of Z, Q, R, bR, Qdual is trivial. No rule for ZperpQdual or T1.
FgAbGroup torsionOf(const StructureExpr& e, const Int& k);

StructureExpr fromFgAbGroup(const FgAbGroup& g);

} // namespace flowcoh
