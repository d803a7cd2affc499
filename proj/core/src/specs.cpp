#include "flowcoh/specs.hpp"

#include <json.hpp>

namespace flowcoh {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

Int parseInt(const std::string& raw, const char* what) {
    std::string s = strip(raw);
    if (s.empty())
        throw ParseError(std::string("empty ") + what);
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size())
        throw ParseError(std::string("bad ") + what + ": '" + raw + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw ParseError(std::string("bad ") + what + ": '" + raw + "'");
    return Int(s);
}

long parseCount(const std::string& raw, const char* what) {
    Int v = parseInt(raw, what);
    if (v < 0 || v > 1000000)
        throw ParseError(std::string(what) + " out of range: '" + raw + "'");
    return static_cast<long>(v);
}

IntMatrix matrixFromJson(const nlohmann::json& j, const char* what, int forcedRows = -1) {
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array of rows");
    if (j.empty())
        return IntMatrix(forcedRows >= 0 ? forcedRows : 0, 0);
    std::vector<std::vector<Int>> rows;
    size_t width = 0;
    for (const auto& row : j) {
        if (!row.is_array())
            throw ParseError(std::string(what) + " rows must be arrays");
        if (rows.empty())
            width = row.size();
        else if (row.size() != width)
            throw ParseError(std::string(what) + " is ragged");
        std::vector<Int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw ParseError(std::string(what) + " entries must be integers");
            r.push_back(Int(x.get<long long>()));
        }
        rows.push_back(std::move(r));
    }
    if (width == 0)
        return IntMatrix(static_cast<int>(rows.size()), 0);
    return IntMatrix::fromRows(rows);
}

nlohmann::json parseJsonText(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("invalid JSON");
    return j;
}

} // namespace

FgAbGroup parseGroupSpec(const std::string& spec) {
    std::string s = strip(spec);
    if (s.empty())
        throw ParseError("empty group spec");
    if (s == "0")
        return FgAbGroup::trivial();
    int freeRank = 0;
    std::vector<Int> orders;
    for (const std::string& rawAtom : split(s, '+')) {
        std::string atom = strip(rawAtom);
        if (atom == "Z") {
            freeRank += 1;
        } else if (atom.rfind("Z^", 0) == 0) {
            freeRank += static_cast<int>(parseCount(atom.substr(2), "free rank"));
        } else if (atom.rfind("Z_", 0) == 0) {
            Int d = parseInt(atom.substr(2), "cyclic order");
            if (d < 1)
                throw ParseError("cyclic order must be >= 1: '" + atom + "'");
            orders.push_back(d);
        } else {
            throw ParseError("bad group atom: '" + atom + "'");
        }
    }
    return FgAbGroup::fromCyclicFactors(freeRank, orders);
}

std::string renderGroup(const FgAbGroup& g) {
    return g.toString();
}

FibreSpec parseFibreSpec(const std::string& spec) {
    std::string s = strip(spec);
    size_t colon = s.find(':');
    if (colon == std::string::npos)
        throw ParseError("fibre spec needs 'kind:...': '" + spec + "'");
    std::string kind = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    FibreSpec out;
    if (kind == "torus") {
        out.kind = FibreSpec::Kind::Torus;
        out.torus_k = static_cast<int>(parseCount(rest, "torus dimension"));
    } else if (kind == "solenoid") {
        out.kind = FibreSpec::Kind::Solenoid;
        size_t semi = rest.find(';');
        if (semi == std::string::npos)
            throw ParseError("solenoid spec needs 'prefix;cycle': '" + spec + "'");
        std::string prefix = strip(rest.substr(0, semi));
        std::string cycle = strip(rest.substr(semi + 1));
        if (!prefix.empty())
            for (const std::string& p : split(prefix, ','))
                out.solenoid.prefix.push_back(parseInt(p, "solenoid entry"));
        if (cycle.empty())
            throw ParseError("solenoid cycle must be nonempty");
        for (const std::string& p : split(cycle, ','))
            out.solenoid.cycle.push_back(parseInt(p, "solenoid entry"));
    } else if (kind == "pure") {
        out.kind = FibreSpec::Kind::Pure;
        out.pure_d = parseInt(rest, "purity modulus");
    } else {
        throw ParseError("unknown fibre kind: '" + kind + "'");
    }
    return out;
}

FlowDescriptor parseFlowDescriptorJson(const std::string& text) {
    nlohmann::json j = parseJsonText(text);
    if (!j.is_object())
        throw ParseError("descriptor must be a JSON object");
    if (!j.contains("x_rank") || !j["x_rank"].is_number_integer())
        throw ParseError("descriptor needs an integer x_rank");
    long long xr = j["x_rank"].get<long long>();
    if (xr < 0 || xr > 1000)
        throw ParseError("x_rank out of range");
    IntMatrix gens(static_cast<int>(xr), 0);
    if (j.contains("image_gens"))
        gens = matrixFromJson(j["image_gens"], "image_gens", static_cast<int>(xr));
    FlowFlags flags;
    if (j.contains("flags")) {
        const auto& f = j["flags"];
        if (!f.is_object())
            throw ParseError("flags must be an object");
        auto readFlag = [&](const char* name) {
            if (!f.contains(name))
                return false;
            if (!f[name].is_boolean())
                throw ParseError(std::string("flag ") + name + " must be boolean");
            return f[name].get<bool>();
        };
        flags.simply_connected = readFlag("simply_connected");
        flags.topologically_free = readFlag("topologically_free");
        flags.no_finite_abelian_quotients = readFlag("no_finite_abelian_quotients");
    }
    return FlowDescriptor(static_cast<int>(xr), std::move(gens), flags);
}

SectionInput parseSectionInputJson(const std::string& text) {
    nlohmann::json j = parseJsonText(text);
    if (!j.is_object() || !j.contains("A") || !j.contains("M"))
        throw ParseError("section input needs matrices A and M");
    SectionInput in;
    in.a = matrixFromJson(j["A"], "A");
    in.m = matrixFromJson(j["M"], "M", in.a.rows());
    return in;
}

std::vector<Int> parseIntVector(const std::string& spec) {
    std::vector<Int> v;
    for (const std::string& p : split(spec, ','))
        v.push_back(parseInt(p, "vector entry"));
    return v;
}

} // namespace flowcoh
