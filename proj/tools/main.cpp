#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "flowcoh/flows.hpp"
#include "flowcoh/functors.hpp"
#include "flowcoh/sections.hpp"
#include "flowcoh/specs.hpp"

namespace {

using nlohmann::ordered_json;
using namespace flowcoh;

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json intToJson(const Int& v) {
    if (v >= (std::numeric_limits<long long>::min)() &&
        v <= (std::numeric_limits<long long>::max)())
        return v.convert_to<long long>();
    return v.str();
}

FlowDescriptor descriptorFromFile(const std::string& path) {
    if (path.empty())
        throw ParseError("this command needs --input with a flow descriptor");
    return parseFlowDescriptorJson(readFile(path));
}

ordered_json cmdAnalyze(const std::string& inputPath) {
    FlowDescriptor fd = descriptorFromFile(inputPath);
    AnalysisReport r = analyze(fd);
    ordered_json out;
    out["n"] = r.n;
    out["m"] = r.m;
    out["d"] = ordered_json::array();
    for (const Int& d : r.divisors)
        out["d"].push_back(intToJson(d));
    out["has_free_cycle"] = r.has_free_cycle;
    out["simply_connected"] = fd.flags().simply_connected;
    out["topologically_free"] = r.is_topologically_free_asserted;
    out["structure_applicable"] = fd.structureApplicable();
    if (fd.structureApplicable()) {
        out["H_F"] = cohomologyCircle(fd).toString();
        out["full_torsion"] = fullTorsion(fd).toString();
        InclusionShapes s = freeExtensionShapes(fd);
        out["inclusions"]["base_sub"] = s.base_sub_display;
        out["inclusions"]["base_ambient"] = s.base_ambient_display;
        out["inclusions"]["fibre_sub"] = s.fibre_sub_display;
        out["inclusions"]["fibre_ambient"] = s.fibre_ambient_display;
    }
    return out;
}

ordered_json cmdTorsion(const std::string& inputPath, long long k) {
    FlowDescriptor fd = descriptorFromFile(inputPath);
    ordered_json out;
    out["k"] = k;
    out["torsion"] = renderGroup(torsionSubgroup(fd, Int(k)));
    return out;
}

ordered_json cmdRealize(const std::string& inputPath, const std::string& fibreStr,
                        const std::string& groupStr) {
    FibreSpec fibre = parseFibreSpec(fibreStr);
    std::string criterion;
    bool realizable = false;

    auto startsWith = [](const std::string& s, const char* p) { return s.rfind(p, 0) == 0; };
    auto oneInt = [](const std::string& s, const char* what) {
        std::vector<Int> v = parseIntVector(s);
        if (v.size() != 1)
            throw ParseError(std::string("expected a single integer ") + what);
        return v[0];
    };

    switch (fibre.kind) {
    case FibreSpec::Kind::Torus: {
        if (groupStr == "all") {
            criterion = "all_sections_torus";
            realizable = allSectionsRealizableTorus(descriptorFromFile(inputPath), fibre.torus_k);
        } else if (startsWith(groupStr, "mod:")) {
            criterion = "modular_rank";
            realizable = torusModularRank(descriptorFromFile(inputPath), fibre.torus_k,
                                          oneInt(groupStr.substr(4), "modulus"));
        } else {
            FgAbGroup target = parseGroupSpec(groupStr);
            FlowDescriptor fd = descriptorFromFile(inputPath);
            if (fd.flags().simply_connected && fibre.torus_k == 1 && target.finite() &&
                target.invariantFactorCount() == 1) {
                criterion = "zd_simply_connected";
                realizable = realizableZdSimplyConnected(fd, target.torsion()[0]);
            } else {
                criterion = "finite_section_torus";
                realizable = realizableFiniteSectionTorus(fd, fibre.torus_k, target);
            }
        }
        break;
    }
    case FibreSpec::Kind::Solenoid: {
        if (startsWith(groupStr, "sub:")) {
            criterion = "solenoid_catalog";
            std::string rest = groupStr.substr(4);
            size_t comma = rest.find(',');
            if (comma == std::string::npos)
                throw ParseError("subgroup spec is 'sub:m,k' with k an integer or 'inf'");
            SolenoidSubgroupKm km;
            Int m = oneInt(rest.substr(0, comma), "coordinate index");
            if (m < 1 || m > 1000000)
                throw ParseError("coordinate index out of range");
            km.m = m.convert_to<int>();
            std::string kPart = rest.substr(comma + 1);
            km.k = (kPart == "inf") ? Int(0) : oneInt(kPart, "subgroup parameter");
            realizable = solenoidSectionCatalog(descriptorFromFile(inputPath), km);
        } else {
            FgAbGroup target = parseGroupSpec(groupStr);
            if (!target.finite() || target.invariantFactorCount() != 1)
                throw ParseError("solenoid membership expects a finite cyclic group Z_d");
            criterion = "zd_in_solenoid";
            realizable = zdInSolenoid(fibre.solenoid, target.torsion()[0]);
        }
        break;
    }
    case FibreSpec::Kind::Pure: {
        criterion = "d_pure_rank_one";
        realizable = dPureRankOne(parseIntVector(groupStr), fibre.pure_d);
        break;
    }
    }

    ordered_json out;
    out["fibre"] = fibreStr;
    out["group"] = groupStr;
    out["criterion"] = criterion;
    out["realizable"] = realizable;
    return out;
}

ordered_json cmdSection(const std::string& inputPath) {
    if (inputPath.empty())
        throw ParseError("this command needs --input with matrices A and M");
    SectionInput in = parseSectionInputJson(readFile(inputPath));
    CoveringEndo cover(in.a);
    LoopMatrix loops{in.m};
    TorusFinSubgroup viaMonodromy = sectionViaMonodromy(cover, loops);
    TorusFinSubgroup viaCohomotopy = sectionViaCohomotopy(cover, loops);
    if (!(viaMonodromy == viaCohomotopy))
        throw ConsistencyError("monodromy and cohomotopy sections disagree");
    ordered_json out;
    out["monodromy"] = renderGroup(viaMonodromy.structure());
    out["cohomotopy"] = renderGroup(viaCohomotopy.structure());
    out["agree"] = true;
    return out;
}

ordered_json cmdAlgebra(const std::string& functor, const std::string& lhs,
                        const std::string& rhs) {
    FgAbGroup a = parseGroupSpec(lhs);
    FgAbGroup b = parseGroupSpec(rhs);
    FgAbGroup result;
    if (functor == "hom")
        result = hom(a, b);
    else if (functor == "ext")
        result = ext(a, b);
    else if (functor == "tor")
        result = tor(a, b);
    else if (functor == "tensor")
        result = tensor(a, b);
    else
        throw ParseError("unknown functor '" + functor + "' (hom, ext, tor, tensor)");
    ordered_json out;
    out["functor"] = functor;
    out["a"] = lhs;
    out["b"] = rhs;
    out["result"] = renderGroup(result);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohomology calculus for group extensions of minimal flows"};
    app.require_subcommand(1);

    bool pretty = false;
    bool compact = false;
    app.add_flag("--pretty", pretty, "indented JSON output");
    app.add_flag("--json", compact, "compact JSON output (default)");

    std::string inputPath;
    long long k = 1;
    std::string fibreStr;
    std::string groupStr;
    std::string functor;
    std::string lhs;
    std::string rhs;

    CLI::App* analyzeCmd =
        app.add_subcommand("analyze", "rank/divisor analysis and structure report");
    analyzeCmd->add_option("--input", inputPath, "flow descriptor JSON file")->required();

    CLI::App* torsionCmd = app.add_subcommand("torsion", "k-torsion of the cohomology group");
    torsionCmd->add_option("--input", inputPath, "flow descriptor JSON file")->required();
    torsionCmd->add_option("--k", k, "torsion order")->required();

    CLI::App* realizeCmd = app.add_subcommand("realize", "section realizability criteria");
    realizeCmd->add_option("--input", inputPath, "flow descriptor JSON file");
    realizeCmd->add_option("--fibre", fibreStr, "fibre spec: torus:k | solenoid:prefix;cycle | pure:d")
        ->required();
    realizeCmd->add_option("--group", groupStr,
                           "group spec, or all | mod:d | sub:m,k | v1,v2,... depending on fibre")
        ->required();

    CLI::App* sectionCmd =
        app.add_subcommand("section", "torus section by monodromy and cohomotopy");
    sectionCmd->add_option("--input", inputPath, "JSON file with matrices A and M")->required();

    CLI::App* algebraCmd = app.add_subcommand("algebra", "hom/ext/tor/tensor of fg abelian groups");
    algebraCmd->add_option("functor", functor, "hom | ext | tor | tensor")->required();
    algebraCmd->add_option("a", lhs, "left group spec")->required();
    algebraCmd->add_option("b", rhs, "right group spec")->required();

    for (CLI::App* sub : {analyzeCmd, torsionCmd, realizeCmd, sectionCmd, algebraCmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ordered_json out;
        if (*analyzeCmd)
            out = cmdAnalyze(inputPath);
        else if (*torsionCmd)
            out = cmdTorsion(inputPath, k);
        else if (*realizeCmd)
            out = cmdRealize(inputPath, fibreStr, groupStr);
        else if (*sectionCmd)
            out = cmdSection(inputPath);
        else
            out = cmdAlgebra(functor, lhs, rhs);
        std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotApplicableError& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return 3;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
