#pragma once

#include <string>

#include "flowcoh/flows.hpp"
#include "flowcoh/matrix.hpp"

namespace flowcoh {

// Tiny group grammar: atoms "Z", "Z^r", "Z_d" joined by '+'; "0" is the
// trivial group. parse(render(g)) == g.
FgAbGroup parseGroupSpec(const std::string& spec);
std::string renderGroup(const FgAbGroup& g);

// Fibre grammar: "torus:k", "solenoid:prefix;cycle" with comma-separated
// entries and possibly empty prefix ("solenoid:;2" is the dyadic solenoid),
// "pure:d" for purity queries.
struct FibreSpec {
    enum class Kind { Torus, Solenoid, Pure };

    Kind kind = Kind::Torus;
    int torus_k = 0;
    SolenoidDescriptor solenoid;
    Int pure_d = 0;
};

FibreSpec parseFibreSpec(const std::string& spec);

// {"x_rank": int, "image_gens": [[int]], "flags": {...}} with flags
// simply_connected / topologically_free / no_finite_abelian_quotients,
// each defaulting to false. image_gens needs x_rank rows ([] meaning no
// generators is accepted); ragged arrays are rejected.
FlowDescriptor parseFlowDescriptorJson(const std::string& text);

// {"A": [[int]], "M": [[int]]}
struct SectionInput {
    IntMatrix a;
    IntMatrix m;
};

SectionInput parseSectionInputJson(const std::string& text);

// Comma-separated integer vector, e.g. "2,1,0".
std::vector<Int> parseIntVector(const std::string& spec);

} // namespace flowcoh
