#include "flowcoh/functors.hpp"

#include <algorithm>

namespace flowcoh {

namespace {

Int gcdInt(Int a, Int b) {
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

void repeat(std::vector<Int>& orders, const Int& d, int times) {
    for (int i = 0; i < times; ++i)
        orders.push_back(d);
}

} // namespace

FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> cyclic;
    for (const Int& k : b.torsion())
        repeat(cyclic, k, a.freeRank()); // Hom(Z^ra, tor b) = tor(b)^ra
    for (const Int& j : a.torsion())
        for (const Int& k : b.torsion())
            cyclic.push_back(gcdInt(j, k));
    return FgAbGroup::fromCyclicFactors(a.freeRank() * b.freeRank(), cyclic);
}

FgAbGroup ext(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> cyclic;
    for (const Int& j : a.torsion()) {
        repeat(cyclic, j, b.freeRank()); // Ext(Z_j, Z) = Z_j
        for (const Int& k : b.torsion())
            cyclic.push_back(gcdInt(j, k)); // Ext(Z_j, Z_k) = Z_k/jZ_k
    }
    return FgAbGroup::fromCyclicFactors(0, cyclic);
}

FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> cyclic;
    for (const Int& j : a.torsion())
        for (const Int& k : b.torsion())
            cyclic.push_back(gcdInt(j, k));
    return FgAbGroup::fromCyclicFactors(0, cyclic);
}

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> cyclic;
    for (const Int& k : b.torsion())
        repeat(cyclic, k, a.freeRank());
    for (const Int& j : a.torsion())
        repeat(cyclic, j, b.freeRank());
    for (const Int& j : a.torsion())
        for (const Int& k : b.torsion())
            cyclic.push_back(gcdInt(j, k));
    return FgAbGroup::fromCyclicFactors(a.freeRank() * b.freeRank(), cyclic);
}

StructureExpr tensorQmodZ(const FgAbGroup& a) {
    return StructureExpr::atom(AtomKind::QmodZ, a.freeRank());
}

Cocycle2::Cocycle2(FgAbGroup base, FgAbGroup fibre,
                   std::vector<std::vector<std::vector<Int>>> table)
    : base_(std::move(base)), fibre_(std::move(fibre)), table_(std::move(table)) {
    if (!base_.finite() || !fibre_.finite())
        throw DomainError("cocycles live on finite groups here");
    elems_ = allElements(base_, 4096);
    const size_t n = elems_.size();
    if (table_.size() != n)
        throw DimensionError("cocycle table has wrong size");
    for (auto& row : table_) {
        if (row.size() != n)
            throw DimensionError("cocycle table has wrong size");
        for (auto& v : row)
            v = reduceElement(fibre_, v);
    }

    // (C2) normalization, (C3) symmetry, (C1) the cocycle identity.
    const std::vector<Int> zero(fibre_.torsion().size(), Int(0));
    for (size_t i = 0; i < n; ++i)
        if (table_[0][i] != zero || table_[i][0] != zero)
            throw DomainError("cocycle violates phi(0,c) = phi(c,0) = 0");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (table_[i][j] != table_[j][i])
                throw DomainError("cocycle is not symmetric");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t ij = indexOf(addElements(base_, elems_[i], elems_[j]));
            for (size_t k = 0; k < n; ++k) {
                size_t jk = indexOf(addElements(base_, elems_[j], elems_[k]));
                auto lhs = addElements(fibre_, table_[i][j], table_[ij][k]);
                auto rhs = addElements(fibre_, table_[i][jk], table_[j][k]);
                if (lhs != rhs)
                    throw DomainError("cocycle identity fails");
            }
        }
}

size_t Cocycle2::indexOf(const std::vector<Int>& c) const {
    // Mixed-radix index; elements enumerate with the last coordinate fastest.
    const auto& tors = base_.torsion();
    size_t idx = 0;
    for (size_t i = 0; i < tors.size(); ++i)
        idx = idx * static_cast<size_t>(tors[i]) + static_cast<size_t>(c[i]);
    return idx;
}

const std::vector<Int>& Cocycle2::valueAt(const std::vector<Int>& c1,
                                          const std::vector<Int>& c2) const {
    return table_[indexOf(reduceElement(base_, c1))][indexOf(reduceElement(base_, c2))];
}

Cocycle2 cocycleZk(const Int& k, const Int& targetModulus) {
    if (k < 2)
        throw DomainError("carry cocycle needs k >= 2");
    if (targetModulus < 1)
        throw DomainError("target modulus must be >= 1");
    FgAbGroup base = FgAbGroup::cyclic(k);
    FgAbGroup fibre = FgAbGroup::cyclic(targetModulus);
    const size_t n = static_cast<size_t>(k);
    const size_t coords = fibre.torsion().size(); // 0 when modulus collapses
    std::vector<std::vector<std::vector<Int>>> table(
        n, std::vector<std::vector<Int>>(n, std::vector<Int>(coords, Int(0))));
    for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < n; ++s)
            if (coords == 1 && Int(r) + Int(s) >= k)
                table[r][s][0] = Int(1) % targetModulus;
    return Cocycle2(std::move(base), std::move(fibre), std::move(table));
}

FgAbGroup twistedProduct(const FgAbGroup& c, const FgAbGroup& a, const Cocycle2& phi) {
    if (phi.base() != c || phi.fibre() != a)
        throw DomainError("cocycle does not match the given base and fibre");
    // Present the product on lifted base generators plus fibre generators.
    // A lifted generator g_i of order k_i satisfies
    //   k_i g_i = sum_{r=1}^{k_i - 1} phi(r e_i, e_i)
    // in the fibre, and each fibre generator keeps its own order. The
    // relation matrix is triangular with determinant |C||A|, and the
    // presented group surjects onto the twisted product, so they agree.
    const int sc = static_cast<int>(c.torsion().size());
    const int sa = static_cast<int>(a.torsion().size());
    IntMatrix rel(sc + sa, sc + sa);
    for (int i = 0; i < sc; ++i) {
        const Int& k = c.torsion()[i];
        rel.at(i, i) = k;
        std::vector<Int> e(sc, Int(0));
        e[i] = 1;
        std::vector<Int> acc(sa, Int(0));
        std::vector<Int> cur = e;
        for (Int r = 1; r < k; ++r) {
            acc = addElements(a, acc, phi.valueAt(cur, e));
            cur = addElements(c, cur, e);
        }
        for (int j = 0; j < sa; ++j)
            rel.at(sc + j, i) = -acc[j];
    }
    for (int j = 0; j < sa; ++j)
        rel.at(sc + j, sc + j) = a.torsion()[j];
    return normalize(PresentedGroup{sc + sa, rel});
}

} // namespace flowcoh
