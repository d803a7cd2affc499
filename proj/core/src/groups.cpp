#include "flowcoh/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

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

Int lcmInt(const Int& a, const Int& b) {
    if (a == 0 || b == 0)
        return 0;
    return a / gcdInt(a, b) * b;
}

} // namespace

std::map<Int, int> factorize(Int n) {
    if (n < 1)
        throw DomainError("factorize needs n >= 1");
    std::map<Int, int> out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1)
        ++out[n];
    return out;
}

FgAbGroup FgAbGroup::free(int rank) {
    if (rank < 0)
        throw DomainError("negative free rank");
    FgAbGroup g;
    g.free_rank_ = rank;
    return g;
}

FgAbGroup FgAbGroup::cyclic(const Int& d) {
    if (d < 0)
        throw DomainError("negative cyclic order");
    if (d == 0)
        return free(1);
    FgAbGroup g;
    if (d >= 2)
        g.torsion_.push_back(d);
    return g;
}

FgAbGroup FgAbGroup::fromInvariantFactors(int freeRank, std::vector<Int> torsion) {
    if (freeRank < 0)
        throw DomainError("negative free rank");
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2)
            throw DomainError("invariant factors must be >= 2");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw DomainError("invariant factors must form a divisibility chain");
    }
    FgAbGroup g;
    g.free_rank_ = freeRank;
    g.torsion_ = std::move(torsion);
    return g;
}

FgAbGroup FgAbGroup::fromCyclicFactors(int freeRank, const std::vector<Int>& orders) {
    // Align the prime-power pieces: the i-th largest exponent of every prime
    // lands in the i-th largest invariant factor.
    std::map<Int, std::vector<int>> primeExps;
    size_t depth = 0;
    for (const Int& d : orders) {
        if (d < 1)
            throw DomainError("cyclic factor orders must be >= 1");
        for (auto& [p, e] : factorize(d)) {
            primeExps[p].push_back(e);
        }
    }
    for (auto& [p, exps] : primeExps) {
        std::sort(exps.begin(), exps.end(), std::greater<int>());
        depth = std::max(depth, exps.size());
    }
    std::vector<Int> chain(depth, Int(1));
    for (auto& [p, exps] : primeExps)
        for (size_t i = 0; i < exps.size(); ++i) {
            Int pe = 1;
            for (int k = 0; k < exps[i]; ++k)
                pe *= p;
            chain[i] *= pe;
        }
    std::reverse(chain.begin(), chain.end()); // ascending
    return fromInvariantFactors(freeRank, std::move(chain));
}

Int FgAbGroup::order() const {
    if (!finite())
        throw DomainError("order of an infinite group");
    Int o = 1;
    for (const Int& d : torsion_)
        o *= d;
    return o;
}

Int FgAbGroup::exponent() const {
    if (!finite())
        throw DomainError("exponent of an infinite group");
    return torsion_.empty() ? Int(1) : torsion_.back();
}

FgAbGroup FgAbGroup::directSum(const FgAbGroup& rhs) const {
    std::vector<Int> orders = torsion_;
    orders.insert(orders.end(), rhs.torsion_.begin(), rhs.torsion_.end());
    return fromCyclicFactors(free_rank_ + rhs.free_rank_, orders);
}

std::string FgAbGroup::toString() const {
    if (isTrivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const Int& d : torsion_) {
        os << (first ? "" : "+") << "Z_" << d.str();
        first = false;
    }
    if (free_rank_ == 1)
        os << (first ? "" : "+") << "Z";
    else if (free_rank_ > 1)
        os << (first ? "" : "+") << "Z^" << free_rank_;
    return os.str();
}

FgAbGroup normalize(const PresentedGroup& p) {
    if (p.relations.rows() != p.generators)
        throw DimensionError("relation rows must match generator count");
    SnfResult s = snf(p.relations);
    std::vector<Int> factors = s.invariantFactors();
    int freeRank = p.generators - static_cast<int>(factors.size());
    std::vector<Int> torsion;
    for (Int& d : factors)
        if (d >= 2)
            torsion.push_back(d);
    return FgAbGroup::fromInvariantFactors(freeRank, std::move(torsion));
}

SubgroupEmbedding elementaryDivisorsOfSubgroup(int ambientRank, const IntMatrix& gens) {
    if (gens.rows() != ambientRank)
        throw DimensionError("generator rows must match ambient rank");
    SnfResult s = snf(gens);
    SubgroupEmbedding e;
    e.divisors = s.invariantFactors();
    e.n = static_cast<int>(e.divisors.size());
    return e;
}

bool isQuotientOf(const FgAbGroup& target, const FgAbGroup& source) {
    if (target.freeRank() > source.freeRank())
        return false;
    // Local condition at every prime p of the target: for each j >= 1 the
    // number of factors of p-adic valuation >= j (free generators counting
    // as unbounded) must not exceed the source's count.
    std::map<Int, int> primes;
    for (const Int& d : target.torsion())
        for (auto& [p, e] : factorize(d))
            primes[p] = std::max(primes[p], e);
    for (auto& [p, maxExp] : primes) {
        auto countAtLeast = [&p](const FgAbGroup& g, int j) {
            int c = g.freeRank();
            for (const Int& d : g.torsion()) {
                Int q = d;
                int v = 0;
                while (q % p == 0) {
                    q /= p;
                    ++v;
                }
                if (v >= j)
                    ++c;
            }
            return c;
        };
        for (int j = 1; j <= maxExp; ++j)
            if (countAtLeast(target, j) > countAtLeast(source, j))
                return false;
    }
    return true;
}

FgAbGroup dualFinite(const FgAbGroup& g) {
    if (!g.finite())
        throw DomainError("dualFinite needs a finite group");
    return g;
}

AnnihilatorResult annihilator(const FgAbGroup& g, const std::vector<std::vector<Int>>& subGens) {
    if (!g.finite())
        throw DomainError("annihilator needs a finite group");
    const auto& tors = g.torsion();
    const int s = static_cast<int>(tors.size());
    for (const auto& v : subGens)
        if (static_cast<int>(v.size()) != s)
            throw DomainError("subgroup generator has wrong coordinate count");

    if (s == 0)
        return {FgAbGroup::trivial(), {}};

    const Int big = g.exponent();
    // chi = (y_1..y_s) annihilates x iff sum x_i y_i big/d_i = 0 mod big.
    IntMatrix t(static_cast<int>(subGens.size()), s);
    for (size_t a = 0; a < subGens.size(); ++a)
        for (int i = 0; i < s; ++i)
            t.at(static_cast<int>(a), i) = subGens[a][i] * (big / tors[i]);
    Lattice solutions = latticePreimage(t, Lattice::scaledIdentity(static_cast<int>(subGens.size()), big));

    // Structure of solutions / diag(d): pull the torsion lattice back along
    // the solution basis.
    Lattice torLat = Lattice::fromGenerators(s, IntMatrix::diagonal(tors));
    auto x = solutions.solve(torLat.basis());
    if (!x)
        throw ConsistencyError("annihilator: torsion lattice escaped the solution lattice");
    AnnihilatorResult res;
    res.group = normalize(PresentedGroup{solutions.rank(), *x});
    for (int j = 0; j < solutions.rank(); ++j) {
        std::vector<Int> gen = solutions.basis().column(j);
        for (int i = 0; i < s; ++i)
            gen[i] = ((gen[i] % tors[i]) + tors[i]) % tors[i];
        res.generators.push_back(std::move(gen));
    }
    return res;
}

Int subgroupOrder(const FgAbGroup& g, const std::vector<std::vector<Int>>& gens) {
    if (!g.finite())
        throw DomainError("subgroupOrder needs a finite group");
    const auto& tors = g.torsion();
    const int s = static_cast<int>(tors.size());
    if (s == 0)
        return 1;
    IntMatrix cols(s, static_cast<int>(gens.size()));
    for (size_t a = 0; a < gens.size(); ++a) {
        if (static_cast<int>(gens[a].size()) != s)
            throw DomainError("subgroup generator has wrong coordinate count");
        for (int i = 0; i < s; ++i)
            cols.at(i, static_cast<int>(a)) = gens[a][i];
    }
    Lattice sub = Lattice::fromGenerators(s, cols.hcat(IntMatrix::diagonal(tors)));
    Lattice torLat = Lattice::fromGenerators(s, IntMatrix::diagonal(tors));
    return latticeIndex(sub, torLat);
}

bool groupDisjoint(const FgAbGroup& h1, const FgAbGroup& h2) {
    if (!h1.finite() || !h2.finite())
        throw DomainError("groupDisjoint is defined here for finite groups only");
    return gcdInt(h1.exponent(), h2.exponent()) == 1;
}

FgMorphism::FgMorphism(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.generatorCount() || matrix_.cols() != domain_.generatorCount())
        throw DimensionError("morphism matrix shape mismatch");
    // Each domain relation d_i e_i must map into the codomain relations.
    const int dFree = domain_.freeRank();
    const int cFree = codomain_.freeRank();
    for (size_t i = 0; i < domain_.torsion().size(); ++i) {
        const Int& q = domain_.torsion()[i];
        const int col = dFree + static_cast<int>(i);
        for (int r = 0; r < matrix_.rows(); ++r) {
            Int img = q * matrix_.at(r, col);
            if (r < cFree) {
                if (img != 0)
                    throw DomainError("morphism not well defined on torsion generator");
            } else if (img % codomain_.torsion()[r - cFree] != 0) {
                throw DomainError("morphism not well defined on torsion generator");
            }
        }
    }
}

std::vector<Int> FgMorphism::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != domain_.generatorCount())
        throw DimensionError("element has wrong coordinate count");
    const int cFree = codomain_.freeRank();
    std::vector<Int> y(matrix_.rows(), Int(0));
    for (int r = 0; r < matrix_.rows(); ++r) {
        for (int c = 0; c < matrix_.cols(); ++c)
            y[r] += matrix_.at(r, c) * x[c];
        if (r >= cFree) {
            const Int& d = codomain_.torsion()[r - cFree];
            y[r] = ((y[r] % d) + d) % d;
        }
    }
    return y;
}

std::vector<Int> reduceElement(const FgAbGroup& g, std::vector<Int> x) {
    if (!g.finite())
        throw DomainError("element helpers need finite groups");
    const auto& tors = g.torsion();
    if (x.size() != tors.size())
        throw DimensionError("element has wrong coordinate count");
    for (size_t i = 0; i < x.size(); ++i)
        x[i] = ((x[i] % tors[i]) + tors[i]) % tors[i];
    return x;
}

std::vector<Int> addElements(const FgAbGroup& g, const std::vector<Int>& x, const std::vector<Int>& y) {
    std::vector<Int> z(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        z[i] = x[i] + y[i];
    return reduceElement(g, std::move(z));
}

std::vector<Int> scaleElement(const FgAbGroup& g, const Int& k, const std::vector<Int>& x) {
    std::vector<Int> z(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        z[i] = k * x[i];
    return reduceElement(g, std::move(z));
}

Int orderOfElement(const FgAbGroup& g, const std::vector<Int>& x) {
    if (!g.finite())
        throw DomainError("element helpers need finite groups");
    Int o = 1;
    for (size_t i = 0; i < x.size(); ++i) {
        const Int& d = g.torsion()[i];
        Int xi = ((x[i] % d) + d) % d;
        Int ord = d / gcdInt(xi, d); // order of xi in Z_d (gcd(0,d)=d)
        o = lcmInt(o, ord);
    }
    return o;
}

std::vector<std::vector<Int>> allElements(const FgAbGroup& g, size_t cap) {
    if (!g.finite())
        throw DomainError("cannot enumerate an infinite group");
    Int o = g.order();
    if (o > Int(cap))
        throw DomainError("group too large to enumerate");
    const auto& tors = g.torsion();
    std::vector<std::vector<Int>> out;
    out.reserve(static_cast<size_t>(o));
    std::vector<Int> cur(tors.size(), Int(0));
    for (;;) {
        out.push_back(cur);
        int i = static_cast<int>(tors.size()) - 1;
        while (i >= 0) {
            cur[i] += 1;
            if (cur[i] < tors[i])
                break;
            cur[i] = 0;
            --i;
        }
        if (i < 0)
            break;
    }
    return out;
}

} // namespace flowcoh
