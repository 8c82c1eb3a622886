#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "wrank/construct.hpp"
#include "wrank/corpus.hpp"
#include "wrank/io.hpp"
#include "wrank/setfunc.hpp"

using namespace wrank;

namespace {

BruteForceCaps caps_from_env()
{
    BruteForceCaps caps;
    if (const char* s = std::getenv("WRANK_BF_BIT_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0)
            caps.bit_cap = static_cast<int>(v);
        else
            std::cerr << "warning: ignoring invalid WRANK_BF_BIT_CAP\n";
    }
    if (const char* s = std::getenv("WRANK_BF_STATE_CAP")) {
        char* end = nullptr;
        const long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v > 0)
            caps.state_cap = v;
        else
            std::cerr << "warning: ignoring invalid WRANK_BF_STATE_CAP\n";
    }
    return caps;
}

void emit(const nlohmann::json& j)
{
    std::cout << j.dump(2) << "\n";
}

struct Options {
    std::string file;
    std::string subset;
    std::string claim;
    std::string method = "both";
    std::string output;
    int k = 0;
    double tolerance = 1e-9;
    long long seed = 0;
};

Mask subset_or_full(const Options& opt, int n)
{
    if (opt.subset.empty())
        return full_mask(n);
    const auto m = parse_subset(opt.subset, n);
    if (!m)
        throw std::runtime_error("bad --subset '" + opt.subset + "'");
    return *m;
}

int cmd_rank(const Options& opt)
{
    const MatroidFile f = load_matroid_file(opt.file);
    const Mask s = subset_or_full(opt, f.matroid.size());
    const int r = f.matroid.rank(s);
    const Rat phi = weighted_rank(f.matroid, f.weights, s);
    if (opt.output == "json") {
        nlohmann::json j;
        j["subset"] = subset_key(s, f.matroid.size());
        j["rank"] = r;
        j["phi"] = rat_to_string(phi);
        emit(j);
    } else {
        std::cout << "subset " << subset_key(s, f.matroid.size()) << "\n"
                  << "rank " << r << "\n"
                  << "phi " << rat_to_string(phi) << "\n";
    }
    return 0;
}

int cmd_circuits(const Options& opt)
{
    const MatroidFile f = load_matroid_file(opt.file);
    const CircuitList list = circuits(f.matroid);
    if (opt.output == "json") {
        auto arr = nlohmann::json::array();
        for (Mask c : list.circuits) {
            nlohmann::json j;
            j["subset"] = subset_key(c, f.matroid.size());
            j["elements"] = elements_of(c);
            arr.push_back(std::move(j));
        }
        emit(arr);
    } else {
        for (Mask c : list.circuits) {
            std::cout << subset_key(c, f.matroid.size()) << " {";
            const auto els = elements_of(c);
            for (std::size_t i = 0; i < els.size(); ++i)
                std::cout << (i ? "," : "") << els[i];
            std::cout << "}\n";
        }
        std::cout << list.circuits.size() << " circuits\n";
    }
    return 0;
}

// The three running-example cycle variants: same algebraic entropy oracle the
// verify command uses, full ground set.
int cmd_figure2(const Options& opt)
{
    struct Case {
        const char* label;
        Graph graph;
        int weight;
    };
    const Case cases[] = {
        {"triangle, weights (2,2,2)", triangle_graph(), 2},
        {"subdivided triangle, unit weights", subdivided_triangle(), 1},
        {"doubled triangle, unit weights", doubled_triangle(), 1},
    };
    const char* note =
        "serial/parallel reduction preserves neither weighted rank nor entropy:"
        " the three variants of the same cycle differ";
    const BruteForceCaps caps = caps_from_env();
    auto arr = nlohmann::json::array();
    for (const Case& c : cases) {
        const Matroid m = binary_from_graphic(c.graph);
        std::vector<Rat> ws(static_cast<std::size_t>(m.size()), Rat(c.weight));
        const BinaryConstruction bc = build_binary(m, WeightFunction(std::move(ws)));
        const Mask full = m.full_set();
        const EntropyValue alg = algebraic_entropy_binary(bc, full);
        const double brute = brute_force_entropy_binary(bc, full, caps);
        if (opt.output == "json") {
            nlohmann::json j;
            j["case"] = c.label;
            j["algebraic"] = alg.str();
            j["brute"] = brute;
            arr.push_back(std::move(j));
        } else {
            std::cout << c.label << ": " << alg.str() << " bits (brute force "
                      << brute << ")\n";
        }
    }
    if (opt.output == "json") {
        nlohmann::json j;
        j["cases"] = std::move(arr);
        j["note"] = note;
        emit(j);
    } else {
        std::cout << "note: " << note << "\n";
    }
    return 0;
}

int cmd_entropy_vector(const Options& opt)
{
    const MatroidFile f = load_matroid_file(opt.file);
    const BruteForceCaps caps = caps_from_env();
    const int n = f.matroid.size();
    const bool want_alg = opt.method != "bruteforce";
    const bool want_bf = opt.method != "algebraic";
    nlohmann::json out;

    if (opt.k > 0) {
        if (f.matroid.kind() != Matroid::Kind::Graphic)
            throw std::runtime_error("--k needs a graphic matroid file");
        const GraphicZkConstruction c = build_graphic_zk(f.matroid.graph(), opt.k);
        nlohmann::json phi = nlohmann::json::object();
        for (Mask s = 1; s <= full_mask(n); ++s)
            phi[subset_key(s, n)] = EntropyValue(Rat(f.matroid.rank(s)), opt.k).str();
        out["phi"] = std::move(phi);
        if (want_alg) {
            nlohmann::json alg = nlohmann::json::object();
            for (Mask s = 1; s <= full_mask(n); ++s)
                alg[subset_key(s, n)] = algebraic_entropy_zk(c, s).str();
            out["algebraic"] = std::move(alg);
        }
        if (want_bf) {
            try {
                nlohmann::json bf = nlohmann::json::object();
                for (Mask s = 1; s <= full_mask(n); ++s)
                    bf[subset_key(s, n)] = brute_force_entropy_zk(c, s, caps);
                out["bruteforce"] = std::move(bf);
            } catch (const std::invalid_argument& ex) {
                std::cerr << "warning: " << ex.what() << "; algebraic only\n";
            }
        }
    } else {
        out["phi"] = set_function_json(phi_vector(f.matroid, f.weights));
        if (f.matroid.kind() == Matroid::Kind::Uniform) {
            if (want_alg || want_bf)
                std::cerr << "warning: no entropic construction for uniform files; "
                             "phi only\n";
        } else {
            const Matroid bin = f.matroid.kind() == Matroid::Kind::Binary
                                    ? f.matroid
                                    : binary_from_graphic(f.matroid.graph());
            const BinaryConstruction c = build_binary(bin, f.weights);
            if (want_alg) {
                nlohmann::json alg = nlohmann::json::object();
                for (Mask s = 1; s <= full_mask(n); ++s)
                    alg[subset_key(s, n)] = algebraic_entropy_binary(c, s).str();
                out["algebraic"] = std::move(alg);
            }
            if (want_bf) {
                if (c.bit_dim() <= caps.bit_cap && c.bit_dim() <= 62) {
                    nlohmann::json bf = nlohmann::json::object();
                    for (Mask s = 1; s <= full_mask(n); ++s)
                        bf[subset_key(s, n)] = brute_force_entropy_binary(c, s, caps);
                    out["bruteforce"] = std::move(bf);
                } else {
                    std::cerr << "warning: bit space dimension " << c.bit_dim()
                              << " exceeds the brute-force cap; algebraic only\n";
                }
            }
        }
    }
    if (opt.output == "text") {
        for (Mask s = 1; s <= full_mask(n); ++s) {
            const std::string key = subset_key(s, n);
            std::cout << key << " phi=" << out["phi"][key].get<std::string>();
            if (out.contains("algebraic"))
                std::cout << " algebraic=" << out["algebraic"][key].get<std::string>();
            if (out.contains("bruteforce"))
                std::cout << " brute=" << out["bruteforce"][key].get<double>();
            std::cout << "\n";
        }
    } else {
        emit(out);
    }
    return 0;
}

int cmd_verify(const Options& opt)
{
    const MatroidFile f = load_matroid_file(opt.file);
    const BruteForceCaps caps = caps_from_env();
    const int n = f.matroid.size();
    nlohmann::json out;
    out["claim"] = opt.claim;
    bool pass = false;

    if (opt.claim == "submodular") {
        const SetFunctionVector v = phi_vector(f.matroid, f.weights);
        const auto violation = first_submodularity_violation(v);
        pass = !violation;
        if (violation) {
            nlohmann::json w;
            w["base"] = subset_key(violation->base, n);
            w["i"] = violation->i;
            w["j"] = violation->j;
            out["witness"] = std::move(w);
        }
    } else if (opt.claim == "vertex") {
        if (n > 5)
            throw std::runtime_error("vertex claim capped at 5 elements");
        const ConeDescription desc = gamma_polytope(n, f.weights);
        const SetFunctionVector v = phi_vector(f.matroid, f.weights);
        const ExtremePointCheck check = is_extreme_point(desc, v);
        pass = check.status == ExtremePointCheck::Status::Vertex;
        out["status"] = check.status == ExtremePointCheck::Status::Vertex ? "vertex"
                        : check.status == ExtremePointCheck::Status::NotVertex
                            ? "not-vertex"
                            : "infeasible";
        out["tight_constraints"] = check.tight.size();
        out["tight_rank"] = check.tight_rank;
        out["dimension"] = (1u << n) - 1;
    } else if (opt.claim == "entropic") {
        if (f.matroid.kind() == Matroid::Kind::Uniform)
            throw std::runtime_error("entropic claim needs a binary or graphic file");
        const Matroid bin = f.matroid.kind() == Matroid::Kind::Binary
                                ? f.matroid
                                : binary_from_graphic(f.matroid.graph());
        if (!f.weights.integral())
            throw std::runtime_error("entropic claim needs integer weights");
        const VerifyReport report = verify_theorem2(bin, f.weights, opt.tolerance, caps);
        if (!report.brute_force_used)
            std::cerr << "warning: brute-force cap exceeded; algebraic only\n";
        pass = report.pass;
        out = report_json(report, n);
        out["claim"] = opt.claim;
    } else {  // zk
        if (f.matroid.kind() != Matroid::Kind::Graphic)
            throw std::runtime_error("zk claim needs a graphic file");
        if (opt.k < 2)
            throw std::runtime_error("zk claim needs --k >= 2");
        const VerifyReport report =
            verify_theorem4(f.matroid.graph(), opt.k, opt.tolerance, caps);
        if (!report.brute_force_used)
            std::cerr << "warning: brute-force cap exceeded; algebraic only\n";
        pass = report.pass;
        out = report_json(report, n);
        out["claim"] = opt.claim;
        out["k"] = opt.k;
    }
    out["pass"] = pass;
    if (opt.output == "text")
        std::cout << opt.claim << " " << (pass ? "pass" : "FAIL") << "\n";
    else
        emit(out);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"weighted matroid rank functions, entropy vectors, and their verifiers"};
    app.require_subcommand(1);
    Options opt;

    // Empty output means each command's natural default (text for rank,
    // circuits, figure2; json for entropy-vector and verify).
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", opt.output, "output format: json | text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    int rc = 0;
    auto* rank = app.add_subcommand("rank", "rank and weighted rank of a subset");
    rank->add_option("file", opt.file, "matroid JSON file")->required();
    rank->add_option("--subset", opt.subset, "hex mask or comma-separated elements");
    add_common(rank);
    rank->callback([&] { rc = cmd_rank(opt); });

    auto* circ = app.add_subcommand("circuits", "all minimal dependent sets");
    circ->add_option("file", opt.file, "matroid JSON file")->required();
    add_common(circ);
    circ->callback([&] { rc = cmd_circuits(opt); });

    auto* ev = app.add_subcommand("entropy-vector",
                                  "entropy vector of the construction next to phi");
    ev->add_option("file", opt.file, "matroid JSON file")->required();
    ev->add_option("--method", opt.method, "algebraic | bruteforce | both")
        ->check(CLI::IsMember({"algebraic", "bruteforce", "both"}));
    ev->add_option("--k", opt.k, "use the Z_k construction with this modulus");
    add_common(ev);
    ev->callback([&] { rc = cmd_entropy_vector(opt); });

    auto* verify = app.add_subcommand("verify", "check a claim, exit 0 pass / 1 fail");
    verify->add_option("file", opt.file, "matroid JSON file")->required();
    verify->add_option("--claim", opt.claim, "submodular | vertex | entropic | zk")
        ->required()
        ->check(CLI::IsMember({"submodular", "vertex", "entropic", "zk"}));
    verify->add_option("--k", opt.k, "modulus for the zk claim");
    verify->add_option("--tolerance", opt.tolerance, "brute-force comparison tolerance")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed,
                       "seed for randomized suites (deterministic claims ignore it)");
    add_common(verify);
    verify->callback([&] { rc = cmd_verify(opt); });

    auto* fig = app.add_subcommand("figure2", "the three running-example entropies");
    add_common(fig);
    fig->callback([&] { rc = cmd_figure2(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
