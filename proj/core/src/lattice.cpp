#include "flowcoh/lattice.hpp"

namespace flowcoh {

Lattice Lattice::fromGenerators(int ambient, const IntMatrix& gens) {
    if (ambient < 0)
        throw DimensionError("negative ambient rank");
    if (gens.rows() != ambient)
        throw DimensionError("generator rows do not match ambient rank");
    IntMatrix h = hnf(gens);
    int rank = 0;
    for (int j = h.cols(); j > 0; --j) {
        bool nz = false;
        for (int i = 0; i < ambient; ++i)
            if (h.at(i, j - 1) != 0) {
                nz = true;
                break;
            }
        if (nz) {
            rank = j;
            break;
        }
    }
    Lattice l;
    l.ambient_ = ambient;
    l.basis_ = h.columnRange(0, rank);
    return l;
}

Lattice Lattice::zero(int ambient) { return fromGenerators(ambient, IntMatrix(ambient, 0)); }

Lattice Lattice::full(int ambient) { return fromGenerators(ambient, IntMatrix::identity(ambient)); }

Lattice Lattice::scaledIdentity(int ambient, const Int& d) {
    if (d < 0)
        throw DomainError("negative lattice scale");
    return fromGenerators(ambient, IntMatrix::identity(ambient).scaled(d));
}

std::optional<IntMatrix> Lattice::solve(const IntMatrix& m) const {
    if (m.rows() != ambient_)
        throw DimensionError("solve: ambient mismatch");
    const int s = basis_.cols();
    // Pivot row of each basis column (columns start at their pivot).
    std::vector<int> pivotRow(s, -1);
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < ambient_; ++i)
            if (basis_.at(i, j) != 0) {
                pivotRow[j] = i;
                break;
            }
    IntMatrix x(s, m.cols());
    for (int col = 0; col < m.cols(); ++col) {
        std::vector<Int> v = m.column(col);
        for (int j = 0; j < s; ++j) {
            const int p = pivotRow[j];
            const Int& piv = basis_.at(p, j);
            if (v[p] % piv != 0)
                return std::nullopt;
            Int q = v[p] / piv;
            if (q != 0)
                for (int i = p; i < ambient_; ++i)
                    v[i] -= q * basis_.at(i, j);
            x.at(j, col) = q;
        }
        for (int i = 0; i < ambient_; ++i)
            if (v[i] != 0)
                return std::nullopt;
    }
    return x;
}

bool Lattice::contains(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw DimensionError("contains: vector length mismatch");
    return solve(IntMatrix::columnVector(v)).has_value();
}

Lattice latticeSum(const Lattice& p, const Lattice& q) {
    if (p.ambient() != q.ambient())
        throw DimensionError("lattice sum: ambient mismatch");
    return Lattice::fromGenerators(p.ambient(), p.basis().hcat(q.basis()));
}

Lattice latticeIntersection(const Lattice& p, const Lattice& q) {
    if (p.ambient() != q.ambient())
        throw DimensionError("lattice intersection: ambient mismatch");
    // Kernel of [Bp | -Bq]; the Bp-part of each kernel vector lands in both.
    IntMatrix stacked = p.basis().hcat(q.basis().scaled(Int(-1)));
    IntMatrix k = kernelBasis(stacked);
    IntMatrix coeffs = k.topRows(p.rank());
    return Lattice::fromGenerators(p.ambient(), p.basis() * coeffs);
}

Lattice latticePreimage(const IntMatrix& m, const Lattice& q) {
    if (m.rows() != q.ambient())
        throw DimensionError("lattice preimage: ambient mismatch");
    IntMatrix stacked = m.hcat(q.basis().scaled(Int(-1)));
    IntMatrix k = kernelBasis(stacked);
    return Lattice::fromGenerators(m.cols(), k.topRows(m.cols()));
}

Lattice divideLattice(const Int& d, const Lattice& q) {
    if (d < 1)
        throw DomainError("divideLattice needs d >= 1");
    if (d == 1)
        return q;
    return latticePreimage(IntMatrix::identity(q.ambient()).scaled(d), q);
}

Lattice scaleLattice(const Int& c, const Lattice& q) {
    if (c < 1)
        throw DomainError("scaleLattice needs c >= 1");
    return Lattice::fromGenerators(q.ambient(), q.basis().scaled(c));
}

Int latticeIndex(const Lattice& sup, const Lattice& sub) {
    if (sup.ambient() != sub.ambient())
        throw DimensionError("lattice index: ambient mismatch");
    auto x = sup.solve(sub.basis());
    if (!x)
        throw DomainError("lattice index: not a sublattice");
    if (sub.rank() != sup.rank())
        throw DomainError("lattice index: infinite index");
    Int det = determinant(*x);
    return det < 0 ? Int(-det) : det;
}

} // namespace flowcoh
