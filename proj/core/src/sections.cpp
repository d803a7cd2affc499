#include "flowcoh/sections.hpp"

namespace flowcoh {

namespace {

Int lcmInt(const Int& a, const Int& b) {
    Int x = a;
    Int y = b;
    if (x < 0)
        x = -x;
    if (y < 0)
        y = -y;
    Int g = x;
    Int h = y;
    while (h != 0) {
        Int t = g % h;
        g = h;
        h = t;
    }
    return x / g * y;
}

// Coefficients of delta * I in the lattice basis; defined whenever
// delta Z^g is contained in the lattice.
IntMatrix quotientPresentation(const Lattice& l, const Int& delta) {
    auto x = l.solve(IntMatrix::identity(l.ambient()).scaled(delta));
    if (!x)
        throw ConsistencyError("scaled standard lattice escapes its overlattice");
    return *x;
}

} // namespace

CoveringEndo::CoveringEndo(IntMatrix a) : a_(std::move(a)) {
    if (!a_.isSquare())
        throw DimensionError("covering matrix must be square");
    det_abs_ = determinant(a_);
    if (det_abs_ < 0)
        det_abs_ = -det_abs_;
    if (det_abs_ == 0)
        throw DomainError("covering matrix must be nonsingular");
}

TorusFinSubgroup TorusFinSubgroup::trivial(int g) {
    return fromScaledGenerators(g, IntMatrix(g, 0), 1);
}

TorusFinSubgroup TorusFinSubgroup::fromScaledGenerators(int g, const IntMatrix& numerators,
                                                        const Int& delta) {
    if (g < 0)
        throw DimensionError("negative torus dimension");
    if (numerators.rows() != g)
        throw DimensionError("generator numerators must have g rows");
    if (delta < 1)
        throw DomainError("denominator must be >= 1");

    // Raw lattice delta Z^g <= L <= Z^g representing the subgroup L/delta.
    Lattice raw = Lattice::fromGenerators(
        g, numerators.hcat(IntMatrix::identity(g).scaled(delta)));

    // Intrinsic exponent: largest invariant factor of L / delta Z^g.
    IntMatrix pres = quotientPresentation(raw, delta);
    std::vector<Int> factors = snf(pres).invariantFactors();
    Int exponent = factors.empty() ? Int(1) : factors.back();

    TorusFinSubgroup f;
    f.g_ = g;
    f.delta_ = exponent;
    // Rescale: the full preimage of the subgroup at denominator `exponent`
    // is {v : delta v in exponent L}.
    f.lattice_ = divideLattice(delta, scaleLattice(exponent, raw));
    return f;
}

FgAbGroup TorusFinSubgroup::structure() const {
    return normalize(PresentedGroup{g_, quotientPresentation(lattice_, delta_)});
}

Int TorusFinSubgroup::order() const {
    if (g_ == 0)
        return 1;
    return latticeIndex(lattice_, Lattice::scaledIdentity(g_, delta_));
}

bool TorusFinSubgroup::contains(const std::vector<Int>& numer, const Int& denom) const {
    if (static_cast<int>(numer.size()) != g_)
        throw DimensionError("point dimension mismatch");
    if (denom < 1)
        throw DomainError("denominator must be >= 1");
    // numer/denom in F  <=>  delta * numer in denom * lattice
    std::vector<Int> scaled(numer.size());
    for (size_t i = 0; i < numer.size(); ++i)
        scaled[i] = delta_ * numer[i];
    return scaleLattice(denom, lattice_).contains(scaled);
}

bool TorusFinSubgroup::subgroupOf(const TorusFinSubgroup& other) const {
    if (g_ != other.g_)
        throw DimensionError("torus dimension mismatch");
    for (int j = 0; j < lattice_.basis().cols(); ++j)
        if (!other.contains(lattice_.basis().column(j), delta_))
            return false;
    return true;
}

TorusFinSubgroup subgroupSum(const TorusFinSubgroup& a, const TorusFinSubgroup& b) {
    if (a.g() != b.g())
        throw DimensionError("torus dimension mismatch");
    Int delta = lcmInt(a.delta(), b.delta());
    IntMatrix gens = a.lattice().basis().scaled(delta / a.delta());
    gens = gens.hcat(b.lattice().basis().scaled(delta / b.delta()));
    return TorusFinSubgroup::fromScaledGenerators(a.g(), gens, delta);
}

TorusFinSubgroup kernelOf(const CoveringEndo& c) {
    auto [inv, delta] = rationalInverse(c.a());
    return TorusFinSubgroup::fromScaledGenerators(c.g(), inv, delta);
}

TorusFinSubgroup monodromyE(const CoveringEndo& c, const Lattice& q) {
    if (q.ambient() != c.g())
        throw DimensionError("lattice ambient dimension mismatch");
    Lattice s = latticeSum(q, Lattice::fromGenerators(c.g(), c.a()));
    auto [inv, delta] = rationalInverse(c.a());
    return TorusFinSubgroup::fromScaledGenerators(c.g(), inv * s.basis(), delta);
}

Lattice monodromyQ(const CoveringEndo& c, const TorusFinSubgroup& e) {
    if (e.g() != c.g())
        throw DimensionError("torus dimension mismatch");
    if (!e.subgroupOf(kernelOf(c)))
        throw DomainError("subgroup must lie in the deck kernel");
    auto [inv, delta] = rationalInverse(c.a());
    // A^{-1} v in e  <=>  delta_e * inv * v in delta_A * L_e
    return latticePreimage(inv.scaled(e.delta()), scaleLattice(delta, e.lattice()));
}

TorusFinSubgroup sectionViaMonodromy(const CoveringEndo& c, const LoopMatrix& xi) {
    if (xi.m.rows() != c.g())
        throw DimensionError("loop matrix must have g rows");
    return monodromyE(c, Lattice::fromGenerators(c.g(), xi.m));
}

TorusFinSubgroup sectionViaCohomotopy(const CoveringEndo& c, const LoopMatrix& xi) {
    if (xi.m.rows() != c.g())
        throw DimensionError("loop matrix must have g rows");
    const int g = c.g();
    const int t = xi.m.cols();

    std::vector<Int> factors = snf(c.a()).invariantFactors();
    Int d = factors.empty() ? Int(1) : factors.back(); // exponent of coker(A)

    // { w in Z^g : M^t w in d Z^t }
    Lattice pre = latticePreimage(xi.m.transpose(), Lattice::scaledIdentity(t, d));
    // annihilator of the section: (1/d) A^t pre
    Lattice ann = divideLattice(
        d, Lattice::fromGenerators(g, c.a().transpose() * pre.basis()));

    if (ann.rank() != g)
        throw ConsistencyError("section annihilator must have full rank");
    // Dual subgroup of T^g: (B^t)^{-1} Z^g mod 1.
    auto [inv, delta] = rationalInverse(ann.basis().transpose());
    return TorusFinSubgroup::fromScaledGenerators(g, inv, delta);
}

bool crossCheck(const CoveringEndo& c, const LoopMatrix& xi) {
    return sectionViaMonodromy(c, xi) == sectionViaCohomotopy(c, xi);
}

bool sectionAdditivity(const CoveringEndo& c, const LoopMatrix& xi1, const LoopMatrix& xi2) {
    TorusFinSubgroup f1 = sectionViaMonodromy(c, xi1);
    TorusFinSubgroup f2 = sectionViaMonodromy(c, xi2);
    if (!groupDisjoint(f1.structure(), f2.structure()))
        throw NotApplicableError("sections are not group-disjoint");
    TorusFinSubgroup combined = sectionViaMonodromy(c, LoopMatrix{xi1.m + xi2.m});
    return combined == subgroupSum(f1, f2);
}

} // namespace flowcoh
