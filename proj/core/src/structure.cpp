#include "flowcoh/structure.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

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

bool atomLess(const Atom& a, const Atom& b) {
    if (a.kind != b.kind)
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.d < b.d;
}

} // namespace

std::string atomName(const Atom& a) {
    switch (a.kind) {
    case AtomKind::R:
        return "R";
    case AtomKind::bR:
        return "bR";
    case AtomKind::Q:
        return "Q";
    case AtomKind::Qdual:
        return "Q*";
    case AtomKind::QmodZ:
        return "Q/Z";
    case AtomKind::ZperpQdual:
        return "Zperp(Q*)";
    case AtomKind::T1:
        return "T1";
    case AtomKind::Z:
        return "Z";
    case AtomKind::Zd:
        return "Z_" + a.d.str();
    }
    throw DomainError("unknown atom");
}

StructureExpr StructureExpr::atom(AtomKind kind, long exponent) {
    if (kind == AtomKind::Zd)
        throw DomainError("use StructureExpr::zd for cyclic atoms");
    StructureExpr e;
    if (exponent < 0)
        throw DomainError("negative exponent");
    if (exponent > 0)
        e.terms_.push_back({Atom{kind, 0}, exponent});
    return e;
}

StructureExpr StructureExpr::zd(const Int& d, long exponent) {
    if (d < 1)
        throw DomainError("cyclic atom needs d >= 1");
    if (exponent < 0)
        throw DomainError("negative exponent");
    StructureExpr e;
    if (d >= 2 && exponent > 0)
        e.terms_.push_back({Atom{AtomKind::Zd, d}, exponent});
    return e;
}

void StructureExpr::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& x, const auto& y) { return atomLess(x.first, y.first); });
    std::vector<std::pair<Atom, long>> merged;
    for (auto& t : terms_) {
        if (t.second == 0 || (t.first.kind == AtomKind::Zd && t.first.d == 1))
            continue;
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(t);
    }
    terms_ = std::move(merged);
}

StructureExpr exprSum(const StructureExpr& e1, const StructureExpr& e2) {
    StructureExpr e;
    e.terms_ = e1.terms_;
    e.terms_.insert(e.terms_.end(), e2.terms_.begin(), e2.terms_.end());
    e.normalize();
    return e;
}

std::string StructureExpr::toString() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, exp] : terms_) {
        if (!first)
            os << " ⊕ ";
        first = false;
        std::string name = atomName(a);
        if (exp == 1)
            os << name;
        else if (name.size() == 1)
            os << name << "^" << exp;
        else
            os << "(" << name << ")^" << exp;
    }
    return os.str();
}

FgAbGroup torsionOf(const StructureExpr& e, const Int& k) {
    if (k < 1)
        throw DomainError("torsionOf needs k >= 1");
    std::vector<Int> orders;
    for (const auto& [a, exp] : e.terms()) {
        Int piece;
        switch (a.kind) {
        case AtomKind::QmodZ:
            piece = k;
            break;
        case AtomKind::Zd:
            piece = gcdInt(a.d, k);
            break;
        case AtomKind::Z:
        case AtomKind::Q:
        case AtomKind::R:
        case AtomKind::bR:
        case AtomKind::Qdual:
            piece = 1;
            break;
        case AtomKind::ZperpQdual:
        case AtomKind::T1:
            throw NotApplicableError("no torsion rule for atom " + atomName(a));
        }
        if (piece >= 2)
            for (long i = 0; i < exp; ++i)
                orders.push_back(piece);
    }
    return FgAbGroup::fromCyclicFactors(0, orders);
}

StructureExpr fromFgAbGroup(const FgAbGroup& g) {
    StructureExpr e = StructureExpr::atom(AtomKind::Z, g.freeRank());
    for (const Int& d : g.torsion())
        e = exprSum(e, StructureExpr::zd(d));
    return e;
}

} // namespace flowcoh
