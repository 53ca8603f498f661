// Command-line surface for exact tree-number computations on power and
// commuting graphs of finite groups.  Output is deterministic: identical
// invocations produce byte-identical output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kappagraph/factored.hpp"
#include "kappagraph/graph.hpp"
#include "kappagraph/graph_expr.hpp"
#include "kappagraph/group.hpp"
#include "kappagraph/spectrum.hpp"
#include "kappagraph/structure.hpp"
#include "kappagraph/suzuki.hpp"
#include "kappagraph/tree_count.hpp"
#include "kappagraph/verify.hpp"

using json = nlohmann::ordered_json;
using namespace kappagraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;
constexpr double kDecimalDigitLimit = 200000;

std::uint64_t trial_bound_from_env() {
    const char* env = std::getenv("KAPPA_TRIAL_BOUND");
    if (!env) return 1000000;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (!end || *end != '\0' || v < 2)
        throw std::invalid_argument("KAPPA_TRIAL_BOUND must be an integer >= 2");
    return v;
}

std::string classification_name(UniversalClass c) {
    switch (c) {
        case UniversalClass::CyclicPrimePower: return "CyclicPrimePower";
        case UniversalClass::CyclicNonPrimePower: return "CyclicNonPrimePower";
        case UniversalClass::GeneralizedQuaternion: return "GeneralizedQuaternion";
        case UniversalClass::TrivialOnly: return "TrivialOnly";
    }
    return {};
}

std::string family_name(PowerFreeFamily f) {
    switch (f) {
        case PowerFreeFamily::ElementaryAbelian2: return "ElementaryAbelian2";
        case PowerFreeFamily::Dihedral2Power: return "Dihedral2Power";
        case PowerFreeFamily::DihedralFrobenius2pn: return "DihedralFrobenius2pn";
        case PowerFreeFamily::None: return "None";
    }
    return {};
}

json factored_json(const FactoredInteger& f) {
    json j;
    j["factored"] = f.to_string();
    json factors = json::array();
    for (const auto& pp : f.factors()) factors.push_back({{"prime", pp.prime}, {"exponent", pp.exponent}});
    j["factors"] = std::move(factors);
    j["cofactor"] = f.cofactor().get_str();
    return j;
}

struct KappaOptions {
    std::string graph_kind = "power";
    std::string group_spec;
    std::string subset = "all";
    std::string method = "auto";
    std::string dump_path;
    bool as_json = false;
    bool quiet = false;
};

int run_kappa(const KappaOptions& opt) {
    Group g = build_group(opt.group_spec);
    const VertexSet subset = opt.subset == "nonidentity" ? VertexSet::NonIdentity : VertexSet::All;
    Graph graph = opt.graph_kind == "power" ? power_graph(g, subset) : commuting_graph(g, subset);

    DetMethod method = DetMethod::Auto;
    if (opt.method == "bareiss") method = DetMethod::Bareiss;
    if (opt.method == "crt") method = DetMethod::Multimodular;

    if (!opt.dump_path.empty()) {
        std::ofstream out(opt.dump_path);
        if (!out) throw std::runtime_error("cannot write graph dump: " + opt.dump_path);
        graph.write_adjacency(out);
    }

    BigCount kappa = tree_number(graph, method);
    FactoredInteger factored = factorize(kappa, trial_bound_from_env());

    if (opt.quiet) {
        std::cout << kappa.get_str() << '\n';
        return kExitOk;
    }
    if (opt.as_json) {
        json j;
        j["group"] = g.label();
        j["group_order"] = g.order();
        j["graph"] = opt.graph_kind;
        j["subset"] = opt.subset;
        j["vertices"] = graph.vertex_count();
        j["edges"] = graph.edge_count();
        j["kappa"] = kappa.get_str();
        j["kappa_factored"] = factored_json(factored);
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "group: " << g.label() << " (order " << g.order() << ")\n";
    std::cout << "graph: " << opt.graph_kind << " on " << opt.subset << ", "
              << graph.vertex_count() << " vertices, " << graph.edge_count() << " edges\n";
    std::cout << "kappa: " << kappa.get_str() << '\n';
    std::cout << "kappa-factored: " << factored.to_string() << '\n';
    return kExitOk;
}

struct SpectrumOptions {
    std::string expr;
    bool as_json = false;
    bool quiet = false;
    bool decimal = false;
};

int run_spectrum(const SpectrumOptions& opt) {
    GraphExpr e = parse_graph_expr(opt.expr);
    Spectrum s = spectrum(e);
    FactoredInteger kappa = kappa_factored_from_spectrum(s, trial_bound_from_env());
    const bool small = kappa.decimal_digits_estimate() <= kDecimalDigitLimit;

    if (opt.quiet) {
        if (!small && !opt.decimal)
            std::cout << kappa.to_string() << '\n';
        else
            std::cout << kappa.value().get_str() << '\n';
        return kExitOk;
    }
    if (opt.as_json) {
        json j;
        j["expr"] = e.to_string();
        j["vertices"] = e.vertex_count();
        json spect = json::array();
        for (auto it = s.multiplicities().rbegin(); it != s.multiplicities().rend(); ++it)
            spect.push_back({{"eigenvalue", it->first}, {"multiplicity", it->second}});
        j["spectrum"] = std::move(spect);
        j["kappa_factored"] = factored_json(kappa);
        if (small || opt.decimal) j["kappa"] = kappa.value().get_str();
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "expr: " << e.to_string() << '\n';
    std::cout << "vertices: " << e.vertex_count() << '\n';
    std::cout << "spectrum: " << s.to_string() << '\n';
    std::cout << "kappa-factored: " << kappa.to_string() << '\n';
    if (small || opt.decimal)
        std::cout << "kappa: " << kappa.value().get_str() << '\n';
    else
        std::cout << "kappa: (decimal suppressed, ~" << static_cast<std::uint64_t>(kappa.decimal_digits_estimate())
                  << " digits; pass --decimal to force)\n";
    return kExitOk;
}

struct SuzukiOptions {
    unsigned n = 1;
    bool check_sylow = false;
    bool as_json = false;
};

int run_suzuki(const SuzukiOptions& opt) {
    SuzukiParams sp = suzuki_params(opt.n);
    const std::uint64_t q = mpz_get_ui(sp.q.get_mpz_t());
    FactoredInteger sylow = kappa_sylow_closed(q);
    FactoredInteger total = kappa_suzuki_closed(q);

    bool sylow_check_ran = false, sylow_check_ok = false;
    if (opt.check_sylow) {
        sylow_check_ran = true;
        Graph realized = realize(sylow_commuting_expr(8));
        sylow_check_ok = tree_number(realized) == kappa_sylow_closed(8).value();
    }

    if (opt.as_json) {
        json j;
        j["n"] = sp.n;
        j["q"] = sp.q.get_str();
        j["r"] = sp.r.get_str();
        j["alpha"] = sp.alpha.get_str();
        j["beta"] = sp.beta.get_str();
        j["order"] = sp.order.get_str();
        j["sylow_conjugates"] = sp.p_cosets.get_str();
        j["torus_conjugates_a"] = sp.a.get_str();
        j["torus_conjugates_b"] = sp.b.get_str();
        j["torus_conjugates_c"] = sp.c.get_str();
        j["kappa_sylow"] = factored_json(sylow);
        j["kappa_commuting"] = factored_json(total);
        if (sylow_check_ran) j["sylow_matrix_tree_check"] = sylow_check_ok ? "pass" : "fail";
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "n: " << sp.n << '\n';
        std::cout << "q: " << sp.q.get_str() << '\n';
        std::cout << "r: " << sp.r.get_str() << '\n';
        std::cout << "alpha: " << sp.alpha.get_str() << '\n';
        std::cout << "beta: " << sp.beta.get_str() << '\n';
        std::cout << "order: " << sp.order.get_str() << '\n';
        std::cout << "sylow-conjugates: " << sp.p_cosets.get_str() << '\n';
        std::cout << "torus-conjugates: a=" << sp.a.get_str() << " b=" << sp.b.get_str()
                  << " c=" << sp.c.get_str() << '\n';
        std::cout << "kappa-sylow: " << sylow.to_string() << '\n';
        std::cout << "kappa-commuting: " << total.to_string() << '\n';
        if (sylow_check_ran)
            std::cout << "sylow-matrix-tree-check (q=8): " << (sylow_check_ok ? "pass" : "fail")
                      << '\n';
    }
    return sylow_check_ran && !sylow_check_ok ? kExitComputation : kExitOk;
}

struct DecomposeOptions {
    std::string group_spec;
    unsigned blocks = 1;
    bool as_json = false;
};

json block_json(const Group& g, const std::vector<std::uint32_t>& elements) {
    json arr = json::array();
    for (std::uint32_t e : elements) arr.push_back({{"index", e}, {"order", g.element_order(e)}});
    return arr;
}

void print_block(const Group& g, const char* name, const std::vector<std::uint32_t>& elements) {
    std::cout << name << " (size " << elements.size() << "):";
    for (std::uint32_t e : elements) std::cout << ' ' << e << "(o=" << g.element_order(e) << ')';
    std::cout << '\n';
}

int run_decompose(const DecomposeOptions& opt) {
    Group g = build_group(opt.group_spec);
    DecompositionSearchResult result = find_power_free_decomposition(g, opt.blocks);
    ClassificationVerdict verdict = classify_power_free(g);

    if (opt.as_json) {
        json j;
        j["group"] = g.label();
        j["group_order"] = g.order();
        j["blocks_requested"] = opt.blocks;
        j["predicted_family"] = family_name(verdict.predicted);
        if (verdict.predicted == PowerFreeFamily::DihedralFrobenius2pn) {
            j["predicted_prime"] = verdict.prime;
            j["predicted_exponent"] = verdict.exponent;
        }
        if (result.decomposition) {
            j["found"] = true;
            j["clique_part"] = block_json(g, result.decomposition->clique_part);
            json blocks = json::array();
            for (const auto& b : result.decomposition->blocks) blocks.push_back(block_json(g, b));
            j["blocks"] = std::move(blocks);
        } else {
            j["found"] = false;
            j["per_prime_reading_differs"] = result.per_prime_reading_differs;
        }
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }

    std::cout << "group: " << g.label() << " (order " << g.order() << ")\n";
    std::cout << "predicted-family: " << family_name(verdict.predicted) << '\n';
    if (!result.decomposition) {
        std::cout << "NOT_FOUND\n";
        if (result.per_prime_reading_differs)
            std::cout << "note: a per-prime-maximal clique part would admit a decomposition\n";
        return kExitOk;
    }
    print_block(g, "C", result.decomposition->clique_part);
    for (std::size_t i = 0; i < result.decomposition->blocks.size(); ++i)
        print_block(g, ("B" + std::to_string(i + 1)).c_str(), result.decomposition->blocks[i]);
    return kExitOk;
}

struct VerifyOptions {
    std::string suite = "all";
    bool as_json = false;
};

int run_verify(const VerifyOptions& opt) {
    auto results = run_verify_suite(opt.suite);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.pass;

    if (opt.as_json) {
        json j;
        j["suite"] = opt.suite;
        json checks = json::array();
        for (const auto& r : results) {
            json c;
            c["name"] = r.name;
            c["pass"] = r.pass;
            if (!r.pass) c["detail"] = r.detail;
            checks.push_back(std::move(c));
        }
        j["checks"] = std::move(checks);
        j["passed"] = passed;
        j["failed"] = results.size() - passed;
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "ok   " : "FAIL ") << r.name;
            if (!r.pass && !r.detail.empty()) std::cout << "  [" << r.detail << ']';
            std::cout << '\n';
        }
        std::cout << "suite " << opt.suite << ": " << passed << " passed, "
                  << results.size() - passed << " failed\n";
    }
    return passed == results.size() ? kExitOk : kExitComputation;
}

struct CensusOptions {
    std::string group_spec;
    bool as_json = false;
};

int run_census(const CensusOptions& opt) {
    Group g = build_group(opt.group_spec);
    auto census = order_census(g);
    UniversalReport universal = universal_vertices(g);
    auto involutions = involution_set(g);

    if (opt.as_json) {
        json j;
        j["group"] = g.label();
        j["group_order"] = g.order();
        json cen = json::array();
        for (const auto& [order, count] : census)
            cen.push_back({{"element_order", order}, {"count", count}});
        j["order_census"] = std::move(cen);
        j["universal_vertices"] = universal.universal_set;
        j["universal_class"] = classification_name(universal.classification);
        j["involutions"] = involutions;
        j["power_equals_commuting"] = power_equals_commuting(g);
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }

    std::cout << "group: " << g.label() << " (order " << g.order() << ")\n";
    std::cout << "order census:";
    for (const auto& [order, count] : census) std::cout << ' ' << order << ':' << count;
    std::cout << '\n';
    std::cout << "universal vertices (" << classification_name(universal.classification) << "):";
    for (std::uint32_t v : universal.universal_set) std::cout << ' ' << v;
    std::cout << '\n';
    std::cout << "involutions (" << involutions.size() << "):";
    for (std::uint32_t v : involutions) std::cout << ' ' << v;
    std::cout << '\n';
    std::cout << "power == commuting: " << (power_equals_commuting(g) ? "yes" : "no") << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tree-numbers of power and commuting graphs of finite groups"};
    app.require_subcommand(1);

    KappaOptions kappa_opt;
    auto* kappa_cmd = app.add_subcommand("kappa", "spanning-tree count of a group graph");
    kappa_cmd->add_option("--graph", kappa_opt.graph_kind, "power|commuting")
        ->check(CLI::IsMember({"power", "commuting"}));
    kappa_cmd->add_option("--group", kappa_opt.group_spec, "group spec, e.g. Z:6, PSL2:7, file:tbl")
        ->required();
    kappa_cmd->add_option("--subset", kappa_opt.subset, "all|nonidentity")
        ->check(CLI::IsMember({"all", "nonidentity"}));
    kappa_cmd->add_option("--method", kappa_opt.method, "auto|bareiss|crt")
        ->check(CLI::IsMember({"auto", "bareiss", "crt"}));
    kappa_cmd->add_option("--dump-graph", kappa_opt.dump_path, "write the adjacency dump here");
    kappa_cmd->add_flag("--json", kappa_opt.as_json, "JSON output");
    kappa_cmd->add_flag("--quiet", kappa_opt.quiet, "print only the value");

    SpectrumOptions spectrum_opt;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian spectrum and kappa of an expression");
    spectrum_cmd->add_option("expr", spectrum_opt.expr, "graph expression, e.g. \"K(3) * (K(2) + K(1))\"")
        ->required();
    spectrum_cmd->add_flag("--json", spectrum_opt.as_json, "JSON output");
    spectrum_cmd->add_flag("--quiet", spectrum_opt.quiet, "print only the value");
    spectrum_cmd->add_flag("--decimal", spectrum_opt.decimal, "force the decimal expansion");

    SuzukiOptions suzuki_opt;
    auto* suzuki_cmd = app.add_subcommand("suzuki", "Suzuki group commuting-graph report");
    suzuki_cmd->add_option("--n", suzuki_opt.n, "field parameter, q = 2^(2n+1)")->required();
    suzuki_cmd->add_flag("--check-sylow", suzuki_opt.check_sylow,
                         "cross-check the q=8 Sylow value by matrix-tree");
    suzuki_cmd->add_flag("--json", suzuki_opt.as_json, "JSON output");

    DecomposeOptions decompose_opt;
    auto* decompose_cmd = app.add_subcommand("decompose", "search for a power-free decomposition");
    decompose_cmd->add_option("--group", decompose_opt.group_spec, "group spec")->required();
    decompose_cmd->add_option("--n", decompose_opt.blocks, "number of independent blocks")->required();
    decompose_cmd->add_flag("--json", decompose_opt.as_json, "JSON output");

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "run a named invariant suite");
    verify_cmd->add_option("--suite", verify_opt.suite, "closed-forms|oracle|catalog|classification|inequalities|suzuki|all");
    verify_cmd->add_flag("--json", verify_opt.as_json, "JSON output");

    CensusOptions census_opt;
    auto* census_cmd = app.add_subcommand("census", "order census, universal vertices, involutions");
    census_cmd->add_option("--group", census_opt.group_spec, "group spec")->required();
    census_cmd->add_flag("--json", census_opt.as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*kappa_cmd) return run_kappa(kappa_opt);
        if (*spectrum_cmd) return run_spectrum(spectrum_opt);
        if (*suzuki_cmd) return run_suzuki(suzuki_opt);
        if (*decompose_cmd) return run_decompose(decompose_opt);
        if (*verify_cmd) return run_verify(verify_opt);
        if (*census_cmd) return run_census(census_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitUsage;
}
