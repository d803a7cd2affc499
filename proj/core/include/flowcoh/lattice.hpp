#pragma once

#include <optional>
#include <vector>

#include "flowcoh/matrix.hpp"

namespace flowcoh {

// Subgroup of Z^g given by an independent generating set, stored in column
// Hermite normal form with zero columns dropped. Equal lattices have
// identical stored bases.
class Lattice {
  public:
    Lattice() = default;

    static Lattice fromGenerators(int ambient, const IntMatrix& gens);
    static Lattice zero(int ambient);
    static Lattice full(int ambient);
    static Lattice scaledIdentity(int ambient, const Int& d); // d * Z^g

    int ambient() const { return ambient_; }
    int rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Int>& v) const;
    // X with basis * X = m, if every column of m lies in the lattice.
    std::optional<IntMatrix> solve(const IntMatrix& m) const;

    bool operator==(const Lattice& rhs) const = default;

  private:
    int ambient_ = 0;
    IntMatrix basis_; // ambient x rank
};

Lattice latticeSum(const Lattice& p, const Lattice& q);
Lattice latticeIntersection(const Lattice& p, const Lattice& q);

// { v in Z^cols(m) : m*v in q }
Lattice latticePreimage(const IntMatrix& m, const Lattice& q);

// { v in Z^g : d*v in q }, d >= 1
Lattice divideLattice(const Int& d, const Lattice& q);

Lattice scaleLattice(const Int& c, const Lattice& q); // c*Q, c >= 1

// [sup : sub] for sub a finite-index sublattice of sup (equal ranks).
Int latticeIndex(const Lattice& sup, const Lattice& sub);

} // namespace flowcoh
