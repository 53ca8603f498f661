#include "kappagraph/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kappagraph/factored.hpp"
#include "kappagraph/graph.hpp"
#include "kappagraph/graph_expr.hpp"
#include "kappagraph/group.hpp"
#include "kappagraph/spectrum.hpp"
#include "kappagraph/structure.hpp"
#include "kappagraph/suzuki.hpp"
#include "kappagraph/tree_count.hpp"

namespace kappagraph {

namespace {

using Checks = std::vector<CheckResult>;

void record(Checks& out, const std::string& name, bool pass, const std::string& detail = {}) {
    out.push_back({name, pass, pass ? std::string{} : detail});
}

// ---------------------------------------------------------------------- //

void suite_closed_forms(Checks& out) {
    bool cayley = true;
    std::string detail;
    for (std::uint64_t n = 2; n <= 30; ++n) {
        BigCount got = tree_number(realize(GraphExpr::complete(n)));
        BigCount want = big_pow(n, n - 2);
        if (got != want) {
            cayley = false;
            detail = "K_" + std::to_string(n);
            break;
        }
    }
    record(out, "cayley formula K_n, n=2..30", cayley, detail);

    bool bipartite = true, split = true;
    for (std::uint64_t a = 1; a <= 12 && (bipartite || split); ++a) {
        for (std::uint64_t b = 1; b <= 12; ++b) {
            GraphExpr kab = GraphExpr::join(GraphExpr::coclique(a), GraphExpr::coclique(b));
            BigCount want = big_pow(b, a - 1) * big_pow(a, b - 1);
            if (kappa_from_spectrum(spectrum(kab)) != want || tree_number(realize(kab)) != want)
                bipartite = false;

            GraphExpr spl = GraphExpr::join(GraphExpr::complete(a), GraphExpr::coclique(b));
            BigCount want2 = big_pow(a + b, a - 1) * big_pow(a, b - 1);
            if (kappa_from_spectrum(spectrum(spl)) != want2 || tree_number(realize(spl)) != want2)
                split = false;
        }
    }
    record(out, "complete bipartite kappa, a,b<=12, both routes", bipartite);
    record(out, "split graph kappa, a,b<=12, both routes", split);
}

// ---------------------------------------------------------------------- //

GraphExpr random_expr(std::mt19937_64& rng, std::uint64_t budget, int depth) {
    std::uniform_int_distribution<int> kind(0, depth >= 4 ? 1 : 4);
    std::uniform_int_distribution<std::uint64_t> leaf(1, std::min<std::uint64_t>(budget, 8));
    switch (kind(rng)) {
        case 0:
            return GraphExpr::complete(leaf(rng));
        case 1:
            return GraphExpr::coclique(leaf(rng));
        case 2: {
            std::uint64_t lhs = std::max<std::uint64_t>(1, budget / 2);
            GraphExpr a = random_expr(rng, lhs, depth + 1);
            GraphExpr b = random_expr(rng, std::max<std::uint64_t>(1, budget - a.vertex_count()),
                                      depth + 1);
            return GraphExpr::join(std::move(a), std::move(b));
        }
        case 3: {
            std::uint64_t lhs = std::max<std::uint64_t>(1, budget / 2);
            GraphExpr a = random_expr(rng, lhs, depth + 1);
            GraphExpr b = random_expr(rng, std::max<std::uint64_t>(1, budget - a.vertex_count()),
                                      depth + 1);
            return GraphExpr::disjoint_union(std::move(a), std::move(b));
        }
        default: {
            std::uniform_int_distribution<std::uint64_t> copies(1, 4);
            std::uint64_t k = copies(rng);
            return GraphExpr::repeat(k, random_expr(rng, std::max<std::uint64_t>(1, budget / k),
                                                    depth + 1));
        }
    }
}

void suite_oracle(Checks& out) {
    std::mt19937_64 rng(0x0cea11edULL);
    bool kappa_ok = true, sum_ok = true, zero_ok = true;
    std::string detail;
    for (int i = 0; i < 200; ++i) {
        GraphExpr e = random_expr(rng, 60, 0);
        while (e.vertex_count() > 60) e = random_expr(rng, 60, 0);
        Graph g = realize(e);
        Spectrum s = spectrum(e);
        if (kappa_from_spectrum(s) != tree_number(g)) {
            kappa_ok = false;
            detail = e.to_string();
        }
        if (s.weighted_sum() != BigCount(2) * static_cast<unsigned long>(g.edge_count()))
            sum_ok = false;
        if (s.multiplicity(0) != g.component_count()) zero_ok = false;
    }
    record(out, "200 random expressions: spectral kappa == matrix-tree kappa", kappa_ok, detail);
    record(out, "200 random expressions: eigenvalue sum == 2|E|", sum_ok);
    record(out, "200 random expressions: zero multiplicity == component count", zero_ok);
}

// ---------------------------------------------------------------------- //

bool is_cyclic_group(const Group& g) {
    for (std::uint32_t i = 0; i < g.order(); ++i)
        if (g.element_order(i) == g.order()) return true;
    return false;
}

bool is_cyclic_prime_power_group(const Group& g) {
    return is_cyclic_group(g) &&
           (g.order() == 1 || prime_power_decompose(g.order()).has_value());
}

bool is_generalized_quaternion_group(const Group& g) {
    auto pk = prime_power_decompose(g.order());
    if (!pk || pk->first != 2 || g.order() < 8 || is_cyclic_group(g)) return false;
    std::uint32_t involutions = 0;
    for (std::uint32_t i = 1; i < g.order(); ++i)
        if (g.element_order(i) == 2) ++involutions;
    return involutions == 1;
}

// Frobenius group with cyclic p-group kernel and cyclic q-group complement.
bool is_frobenius_cyclic_pq(const Group& g) {
    const std::uint32_t n = g.order();
    std::set<std::vector<std::uint32_t>> kernels;
    for (std::uint32_t i = 1; i < n; ++i) kernels.insert(g.element_info(i).cyclic_subgroup);
    for (const auto& k : kernels) {
        if (k.size() == n) continue;
        auto pk = prime_power_decompose(k.size());
        if (!pk) continue;
        auto qk = prime_power_decompose(n / k.size());
        if (!qk || qk->first == pk->first) continue;

        // normality of the kernel
        std::vector<bool> in_k(n, false);
        for (std::uint32_t e : k) in_k[e] = true;
        bool normal = true;
        for (std::uint32_t x = 0; x < n && normal; ++x)
            for (std::uint32_t e : k)
                if (!in_k[g.mult(g.mult(x, e), g.inverse(x))]) {
                    normal = false;
                    break;
                }
        if (!normal) continue;

        // cyclic complement acting without fixed points
        const std::uint32_t comp_order = n / static_cast<std::uint32_t>(k.size());
        for (std::uint32_t c = 1; c < n; ++c) {
            if (g.element_order(c) != comp_order || in_k[c]) continue;
            const auto comp = g.element_info(c).cyclic_subgroup;
            bool trivial_meet = true;
            for (std::uint32_t e : comp)
                if (e != 0 && in_k[e]) trivial_meet = false;
            if (!trivial_meet) continue;
            bool fixed_point_free = true;
            for (std::uint32_t x : comp) {
                if (x == 0) continue;
                for (std::uint32_t e : k) {
                    if (e == 0) continue;
                    if (g.mult(x, e) == g.mult(e, x)) {
                        fixed_point_free = false;
                        break;
                    }
                }
                if (!fixed_point_free) break;
            }
            if (fixed_point_free) return true;
        }
    }
    return false;
}

bool pc_equality_predicted(const Group& g) {
    return is_cyclic_prime_power_group(g) || is_generalized_quaternion_group(g) ||
           is_frobenius_cyclic_pq(g);
}

const std::vector<std::string>& catalog_specs() {
    static const std::vector<std::string> specs = {
        "Z:1",  "Z:2",  "Z:3",  "Z:4",   "Z:5",  "Z:6",  "Z:8",  "Z:9",
        "Z:12", "Z:16", "Z:30", "D:6",   "D:8",  "D:10", "D:12", "D:16",
        "D:18", "Q:8",  "Q:16", "Q:32",  "EA:4", "EA:8", "EA:9", "EA:25",
        "S:3",  "S:4",  "A:4",  "A:5",   "Z:2*Z:4", "Z:3*Z:6", "PSL2:7",
    };
    return specs;
}

void suite_catalog(Checks& out) {
    bool embed = true, complete_iff = true, kappa_mono = true, pc_iff = true;
    std::string e1, e2, e3, e4;
    for (const auto& spec : catalog_specs()) {
        Group g = build_group(spec);
        Graph p = power_graph(g);
        Graph c = commuting_graph(g);

        for (std::uint32_t u = 0; u < p.vertex_count() && embed; ++u)
            for (std::uint32_t v = u + 1; v < p.vertex_count(); ++v)
                if (p.adjacent(u, v) && !c.adjacent(u, v)) {
                    embed = false;
                    e1 = spec;
                }

        const bool complete =
            p.edge_count() == static_cast<std::uint64_t>(g.order()) * (g.order() - 1) / 2;
        if (complete != is_cyclic_prime_power_group(g)) {
            complete_iff = false;
            e2 = spec;
        }

        if (tree_number(c) < tree_number(p)) {
            kappa_mono = false;
            e3 = spec;
        }

        if ((p == c) != pc_equality_predicted(g)) {
            pc_iff = false;
            e4 = spec;
        }
    }
    record(out, "power graph is an edge-subgraph of the commuting graph", embed, e1);
    record(out, "power graph complete iff cyclic of prime power order", complete_iff, e2);
    record(out, "kappa(commuting) >= kappa(power)", kappa_mono, e3);
    record(out, "power graph == commuting graph iff cyclic p-power / quaternion / Frobenius pq",
           pc_iff, e4);

    // nonidentity power graphs of groups covered by trivially intersecting
    // cyclic subgroups split into the corresponding disjoint pieces
    bool split_ok = true;
    std::string e5;
    for (const auto& spec : {"D:6", "D:10", "D:18", "S:3", "A:5"}) {
        Group g = build_group(spec);
        Graph sharp = power_graph(g, VertexSet::NonIdentity);
        std::set<std::vector<std::uint32_t>> cyclics;
        for (std::uint32_t i = 1; i < g.order(); ++i)
            cyclics.insert(g.element_info(i).cyclic_subgroup);
        std::uint64_t expected_edges = 0;
        bool covers = true;
        std::uint64_t covered = 0;
        for (const auto& sub : cyclics) {
            bool maximal = true;
            for (const auto& other : cyclics)
                if (&other != &sub && other.size() > sub.size() &&
                    std::includes(other.begin(), other.end(), sub.begin(), sub.end()))
                    maximal = false;
            if (!maximal) continue;
            covered += sub.size() - 1;
            expected_edges += (sub.size() - 1) * (sub.size() - 2) / 2;
        }
        covers = covered == g.order() - 1ull;
        if (!covers || sharp.edge_count() != expected_edges) {
            split_ok = false;
            e5 = spec;
        }
    }
    record(out, "nonidentity power graph splits along trivially intersecting cyclic subgroups",
           split_ok, e5);

    bool pc_families = true;
    std::string e6;
    for (const auto& spec : {"Z:8", "Z:9", "Q:8", "Q:16", "Q:32", "D:6", "D:10", "D:18"}) {
        Group g = build_group(spec);
        if (!power_equals_commuting(g)) {
            pc_families = false;
            e6 = spec;
        }
    }
    record(out, "P(G) == C(G) for cyclic p-powers, quaternion, odd dihedral Frobenius",
           pc_families, e6);
}

// ---------------------------------------------------------------------- //

void suite_classification(Checks& out) {
    std::vector<std::string> specs;
    for (int n = 2; n <= 64; ++n) specs.push_back("Z:" + std::to_string(n));
    for (int m = 4; m <= 64; m += 2) specs.push_back("D:" + std::to_string(m));
    for (int m = 8; m <= 64; m *= 2) specs.push_back("Q:" + std::to_string(m));
    for (int q : {4, 8, 16, 32, 64, 9, 27, 25, 49}) specs.push_back("EA:" + std::to_string(q));
    for (const char* s : {"Z:2*Z:2", "Z:2*Z:4", "Z:2*Z:6", "Z:2*Z:8", "Z:2*Z:10", "Z:2*Z:12",
                          "Z:2*Z:16", "Z:4*Z:4", "Z:4*Z:8", "Z:2*Z:20", "Z:3*Z:3", "Z:3*Z:6",
                          "Z:3*Z:9", "Z:5*Z:5", "Z:6*Z:6", "Z:2*Z:32", "Z:2*Z:2*Z:4",
                          "Z:2*Z:2*Z:2*Z:2", "Z:4*Z:12"})
        specs.push_back(s);
    for (const char* s : {"S:3", "S:4", "A:4", "A:5"}) specs.push_back(s);

    bool theorem = true;
    std::string detail;
    for (const auto& spec : specs) {
        Group g = build_group(spec);
        if (g.order() > 64) continue;
        ClassificationVerdict v = classify_power_free(g);
        if (v.has_1pfd != (v.predicted != PowerFreeFamily::None)) {
            theorem = false;
            detail = spec;
            break;
        }
    }
    record(out, "order <= 64 scan: 1-decomposition exists iff predicted family", theorem, detail);

    bool quaternion = true;
    std::string qdetail;
    for (const auto& spec : {"Q:8", "Q:16", "Q:32"}) {
        Group g = build_group(spec);
        if (!find_power_free_decomposition(g, 2).decomposition ||
            find_power_free_decomposition(g, 1).decomposition) {
            quaternion = false;
            qdetail = spec;
        }
    }
    record(out, "generalized quaternion: 2-decomposition yes, 1-decomposition no", quaternion,
           qdetail);

    bool cyclic_none = true;
    std::string cdetail;
    for (int n = 2; n <= 32 && cyclic_none; ++n) {
        Group g = build_group("Z:" + std::to_string(n));
        for (unsigned blocks = 1; blocks <= 3; ++blocks)
            if (find_power_free_decomposition(g, blocks).decomposition) {
                cyclic_none = false;
                cdetail = "Z:" + std::to_string(n);
            }
    }
    record(out, "cyclic groups have no decomposition (n<=32, blocks 1..3)", cyclic_none, cdetail);
}

// ---------------------------------------------------------------------- //

std::vector<std::uint32_t> cyclic_subgroup_of_order(const Group& g, std::uint32_t order) {
    for (std::uint32_t i = 0; i < g.order(); ++i)
        if (g.element_order(i) == order) return g.element_info(i).cyclic_subgroup;
    throw std::invalid_argument("no element of the requested order");
}

void suite_inequalities(Checks& out) {
    bool product = true;
    std::string pdetail;
    {
        struct Case {
            const char* spec;
            std::vector<std::uint32_t> orders;
        };
        for (const Case& c : {Case{"S:3", {3, 2}}, Case{"Z:6", {3, 2}}, Case{"D:18", {9, 2}},
                              Case{"A:5", {5, 3, 2}}, Case{"PSL2:7", {7, 3, 4}}}) {
            Group g = build_group(c.spec);
            std::vector<std::vector<std::uint32_t>> subgroups;
            for (std::uint32_t o : c.orders) subgroups.push_back(cyclic_subgroup_of_order(g, o));
            auto report = check_subgroup_product_bound(g, subgroups);
            if (!report.holds) {
                product = false;
                pdetail = c.spec;
            }
        }
    }
    record(out, "subgroup product bound on pairwise trivially intersecting families", product,
           pdetail);

    bool extension = true, equality = true;
    std::string edetail, qdetail;
    {
        struct Case {
            const char* spec;
            std::uint32_t subgroup_order;
            std::uint32_t outside_order;
            bool expect_equality;
        };
        for (const Case& c : {Case{"S:3", 3, 2, true}, Case{"D:18", 9, 2, true},
                              Case{"Z:6", 3, 6, false}, Case{"Q:8", 4, 4, false},
                              Case{"Q:16", 8, 4, false}, Case{"A:4", 3, 2, false}}) {
            Group g = build_group(c.spec);
            auto h = cyclic_subgroup_of_order(g, c.subgroup_order);
            auto report = check_extension_bound(g, h, c.outside_order);
            if (!report.holds) {
                extension = false;
                edetail = c.spec;
            }
            if (report.equality_is_frobenius_case != c.expect_equality) {
                equality = false;
                qdetail = c.spec;
            }
        }
    }
    record(out, "extension bound kappa_P(G) >= (phi(m)+1)^(phi(m)-1) kappa_P(H)", extension,
           edetail);
    record(out, "extension bound equality exactly in the order-2 Frobenius cases", equality,
           qdetail);

    bool frobenius_values = true;
    std::string fdetail;
    {
        Group s3 = build_group("S:3");
        Group d18 = build_group("D:18");
        if (tree_number(power_graph(s3)) != 3) {
            frobenius_values = false;
            fdetail = "S:3";
        }
        if (tree_number(power_graph(d18)) != big_pow(3, 14)) {
            frobenius_values = false;
            fdetail = "D:18";
        }
    }
    record(out, "kappa_P(S3) == 3 and kappa_P(D18) == 3^14", frobenius_values, fdetail);
}

// ---------------------------------------------------------------------- //

void suite_suzuki(Checks& out) {
    bool params_ok = true;
    std::string pdetail;
    for (unsigned n = 1; n <= 4; ++n) {
        try {
            suzuki_params(n);
        } catch (const std::exception& e) {
            params_ok = false;
            pdetail = "n=" + std::to_string(n) + ": " + e.what();
        }
    }
    record(out, "parameter identities for n=1..4", params_ok, pdetail);

    bool two_route = true;
    std::string tdetail;
    for (unsigned n = 1; n <= 3; ++n) {
        const std::uint64_t q = 1ull << (2 * n + 1);
        FactoredInteger closed = kappa_suzuki_closed(q);
        FactoredInteger spectral = kappa_factored_from_spectrum(spectrum(suzuki_commuting_expr(q)));
        if (!(closed == spectral)) {
            two_route = false;
            tdetail = "q=" + std::to_string(q);
        }
    }
    record(out, "closed form == spectral route for n=1..3", two_route, tdetail);

    const BigCount sylow_expected = big_pow(2, 256);
    bool sylow_ok = kappa_sylow_closed(8).value() == sylow_expected &&
                    tree_number(realize(sylow_commuting_expr(8))) == sylow_expected &&
                    kappa_from_spectrum(spectrum(sylow_commuting_expr(8))) == sylow_expected;
    record(out, "q=8 Sylow commuting graph: matrix-tree == spectrum == 2^256", sylow_ok);

    bool absorb = true;
    std::string adetail;
    for (std::uint64_t q : {8ull, 32ull}) {
        GraphExpr cp_sharp = GraphExpr::join(GraphExpr::complete(q - 1),
                                             GraphExpr::repeat(q - 1, GraphExpr::complete(q)));
        GraphExpr rebuilt = GraphExpr::join(GraphExpr::complete(1), cp_sharp);
        if (!(spectrum(rebuilt) == spectrum(sylow_commuting_expr(q)))) {
            absorb = false;
            adetail = "q=" + std::to_string(q);
        }
    }
    record(out, "identity vertex absorbs into the center clique of C(P)", absorb, adetail);
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"closed-forms", "oracle", "catalog", "classification", "inequalities", "suzuki",
            "all"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
    Checks out;
    bool matched = false;
    auto want = [&](const char* name) {
        if (suite != name && suite != "all") return false;
        matched = true;
        return true;
    };
    if (want("closed-forms")) suite_closed_forms(out);
    if (want("oracle")) suite_oracle(out);
    if (want("catalog")) suite_catalog(out);
    if (want("classification")) suite_classification(out);
    if (want("inequalities")) suite_inequalities(out);
    if (want("suzuki")) suite_suzuki(out);
    if (!matched) throw std::invalid_argument("unknown verify suite: " + suite);
    return out;
}

}  // namespace kappagraph
