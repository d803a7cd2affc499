#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowcoh/lattice.hpp"
#include "flowcoh/matrix.hpp"

namespace flowcoh {

// Canonical finitely generated abelian group: free rank plus invariant
// factors d_1 | d_2 | ... with every d_i >= 2, ascending.
class FgAbGroup {
  public:
    FgAbGroup() = default;

    static FgAbGroup trivial() { return FgAbGroup(); }
    static FgAbGroup free(int rank);
    static FgAbGroup cyclic(const Int& d); // d = 0 means Z, d = 1 trivial
    static FgAbGroup fromInvariantFactors(int freeRank, std::vector<Int> torsion);
    // Arbitrary finite cyclic orders (>= 1, order 1 dropped), re-canonicalized.
    static FgAbGroup fromCyclicFactors(int freeRank, const std::vector<Int>& orders);

    int freeRank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }

    bool isTrivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool finite() const { return free_rank_ == 0; }
    Int order() const;    // finite only
    Int exponent() const; // finite only; 1 for the trivial group

    // Number of generators in the canonical decomposition.
    int generatorCount() const { return free_rank_ + static_cast<int>(torsion_.size()); }
    int invariantFactorCount() const { return static_cast<int>(torsion_.size()); }

    FgAbGroup directSum(const FgAbGroup& rhs) const;

    std::string toString() const; // "Z_2+Z_4+Z^2", "0" for trivial

    bool operator==(const FgAbGroup& rhs) const = default;

  private:
    int free_rank_ = 0;
    std::vector<Int> torsion_;
};

// Z^generators modulo the column lattice of relations.
struct PresentedGroup {
    int generators = 0;
    IntMatrix relations; // generators rows, one column per relator
};

FgAbGroup normalize(const PresentedGroup& p);

// n = rank of the subgroup of Z^ambient generated by the columns of gens;
// divisors = invariant factors of the embedding (length n, 1s retained).
struct SubgroupEmbedding {
    int n = 0;
    std::vector<Int> divisors;
};
SubgroupEmbedding elementaryDivisorsOfSubgroup(int ambientRank, const IntMatrix& gens);

// True iff a surjection source -> target exists.
bool isQuotientOf(const FgAbGroup& target, const FgAbGroup& source);

// Finite groups are self-dual under <x,y> = sum x_i y_i / d_i mod 1.
FgAbGroup dualFinite(const FgAbGroup& g);

// Annihilator of the subgroup generated by subGens inside the dual of g.
// Generators are dual-element coordinates (one residue per invariant factor).
struct AnnihilatorResult {
    FgAbGroup group;
    std::vector<std::vector<Int>> generators;
};
AnnihilatorResult annihilator(const FgAbGroup& g, const std::vector<std::vector<Int>>& subGens);

// Order of the subgroup of finite g generated by the given element vectors.
Int subgroupOrder(const FgAbGroup& g, const std::vector<std::vector<Int>>& gens);

// Finite case: the only closed subdirect product of h1 x h2 is the full
// product, which happens exactly when gcd(exponent, exponent) = 1.
bool groupDisjoint(const FgAbGroup& h1, const FgAbGroup& h2);

// Morphism between canonical groups; the matrix sends domain generator
// coordinates to codomain generator coordinates (free rows first, then one
// row per torsion factor, read modulo that factor). Well-definedness is
// checked at construction.
class FgMorphism {
  public:
    FgMorphism(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix);

    const FgAbGroup& domain() const { return domain_; }
    const FgAbGroup& codomain() const { return codomain_; }
    const IntMatrix& matrix() const { return matrix_; }

    std::vector<Int> apply(const std::vector<Int>& x) const;

  private:
    FgAbGroup domain_;
    FgAbGroup codomain_;
    IntMatrix matrix_;
};

// Element helpers for finite groups (coordinates: one residue per factor).
std::vector<Int> reduceElement(const FgAbGroup& g, std::vector<Int> x);
std::vector<Int> addElements(const FgAbGroup& g, const std::vector<Int>& x, const std::vector<Int>& y);
std::vector<Int> scaleElement(const FgAbGroup& g, const Int& k, const std::vector<Int>& x);
Int orderOfElement(const FgAbGroup& g, const std::vector<Int>& x);
// Enumeration of all elements of a finite group (order capped to keep
// enumerations deliberate; throws DomainError beyond the cap).
std::vector<std::vector<Int>> allElements(const FgAbGroup& g, size_t cap = 2000000);

std::map<Int, int> factorize(Int n); // prime -> multiplicity, n >= 1

} // namespace flowcoh
