#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "kappagraph/factored.hpp"
#include "kappagraph/graph.hpp"
#include "kappagraph/graph_expr.hpp"
#include "kappagraph/spectrum.hpp"
#include "kappagraph/group.hpp"
#include "kappagraph/tree_count.hpp"
#include "support/oracles.hpp"

using namespace kappagraph;

namespace {

Graph relabel(const Graph& g, const std::vector<std::uint32_t>& perm) {
    Graph out(g.vertex_count());
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
        for (std::uint32_t v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("tree_count");

TEST_CASE("base cases") {
    Graph single(1);
    CHECK(tree_number(single) == 1);

    Graph two(2);
    CHECK(tree_number(two) == 0);  // disconnected
    two.add_edge(0, 1);
    CHECK(tree_number(two) == 1);

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(tree_number(path) == 1);
}

TEST_CASE("K4 has 16 spanning trees") {
    Graph k4 = realize(GraphExpr::complete(4));
    CHECK(tree_number(k4) == 16);
    CHECK(testsupport::count_spanning_trees_exhaustive(k4) == 16);
}

TEST_CASE("cayley formula for complete graphs") {
    for (std::uint64_t n = 2; n <= 30; ++n) {
        BigCount expected = big_pow(n, n - 2);
        Graph kn = realize(GraphExpr::complete(n));
        CHECK(tree_number(kn, DetMethod::Bareiss) == expected);
        CHECK(tree_number(kn, DetMethod::Multimodular) == expected);
    }
}

TEST_CASE("power graph of Z:6 has 540 spanning trees") {
    Graph p = power_graph(build_group("Z:6"));
    CHECK(tree_number(p, DetMethod::Bareiss) == 540);
    CHECK(tree_number(p, DetMethod::Multimodular) == 540);
    CHECK(testsupport::count_spanning_trees_exhaustive(p) == 540);
}

TEST_CASE("exhaustive enumeration agreement on small power graphs") {
    for (const char* spec :
         {"Z:2", "Z:3", "Z:4", "Z:5", "Z:6", "Z:7", "Z:8", "EA:4", "EA:8", "D:6", "D:8",
          "Q:8", "Z:2*Z:4", "Z:2*Z:2"}) {
        Group g = build_group(spec);
        REQUIRE(g.order() <= 8);
        Graph p = power_graph(g);
        CHECK(tree_number(p) == testsupport::count_spanning_trees_exhaustive(p));
        Graph c = commuting_graph(g);
        CHECK(tree_number(c) == testsupport::count_spanning_trees_exhaustive(c));
    }
}

TEST_CASE("exhaustive enumeration agreement on random small graphs") {
    std::mt19937_64 rng(0xbead5u);
    std::uniform_int_distribution<std::uint32_t> size(2, 8);
    std::uniform_int_distribution<int> coin(0, 99);
    for (int t = 0; t < 40; ++t) {
        const std::uint32_t n = size(rng);
        Graph g(n);
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v)
                if (coin(rng) < 55) g.add_edge(u, v);
        CHECK(tree_number(g, DetMethod::Bareiss) ==
              testsupport::count_spanning_trees_exhaustive(g));
        CHECK(tree_number(g, DetMethod::Multimodular) ==
              testsupport::count_spanning_trees_exhaustive(g));
    }
}

TEST_CASE("isomorphism invariance under relabeling") {
    std::mt19937_64 rng(0x51ab1eu);
    Graph p = power_graph(build_group("Z:12"));
    BigCount expected = tree_number(p);
    std::vector<std::uint32_t> perm(p.vertex_count());
    std::iota(perm.begin(), perm.end(), 0u);
    for (int t = 0; t < 10; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(tree_number(relabel(p, perm)) == expected);
    }
}

TEST_CASE("commuting graph never has fewer spanning trees than the power graph") {
    for (const char* spec : {"Z:6", "D:8", "D:12", "Q:16", "S:3", "S:4", "A:4", "EA:9"}) {
        Group g = build_group(spec);
        CHECK(tree_number(commuting_graph(g)) >= tree_number(power_graph(g)));
    }
}

TEST_CASE("methods agree on medium instances") {
    for (const char* spec : {"Z:30", "D:32", "S:4", "A:5"}) {
        Graph p = power_graph(build_group(spec));
        CHECK(tree_number(p, DetMethod::Bareiss) == tree_number(p, DetMethod::Multimodular));
    }
}

TEST_CASE("known factored values of the simple-group power graphs") {
    Group a5 = build_group("A:5");
    BigCount kappa_a5 = tree_number(power_graph(a5));
    CHECK(kappa_a5 == big_pow(3, 10) * big_pow(5, 18));
    CHECK(factorize(kappa_a5).to_string() == "3^10 * 5^18");
    CHECK(factorize(kappa_a5).fully_factored());

    Group l27 = build_group("PSL2:7");
    BigCount kappa_l27 = tree_number(power_graph(l27));
    CHECK(kappa_l27 == big_pow(2, 84) * big_pow(3, 28) * big_pow(7, 40));
    CHECK(factorize(kappa_l27).to_string() == "2^84 * 3^28 * 7^40");
    CHECK(factorize(kappa_l27).fully_factored());
}

TEST_CASE("simple-group power graphs decompose into cliques joined to the identity") {
    // The nonidentity power graph of these groups is a disjoint union of
    // cliques (the cyclic subgroups minus the identity), so kappa has a
    // determinant-free route: component census -> join/union spectrum.
    struct Expected {
        const char* spec;
        std::map<std::uint32_t, std::uint32_t> clique_census;  // size -> count
    };
    std::vector<Expected> cases;
    cases.push_back({"A:5", {{1, 15}, {2, 10}, {4, 6}}});
    cases.push_back({"PSL2:7", {{2, 28}, {3, 21}, {6, 8}}});
    cases.push_back({"A:6", {{2, 40}, {3, 45}, {4, 36}}});
    for (const Expected& x : cases) {
        Group g = build_group(x.spec);
        Graph sharp = power_graph(g, VertexSet::NonIdentity);
        auto comp = sharp.component_ids();

        std::map<std::uint32_t, std::vector<std::uint32_t>> members;
        for (std::uint32_t v = 0; v < sharp.vertex_count(); ++v)
            members[comp[v]].push_back(v);
        std::map<std::uint32_t, std::uint32_t> census;
        for (const auto& [id, verts] : members) {
            for (std::size_t a = 0; a < verts.size(); ++a)  // each component is a clique
                for (std::size_t b = a + 1; b < verts.size(); ++b)
                    REQUIRE(sharp.adjacent(verts[a], verts[b]));
            ++census[static_cast<std::uint32_t>(verts.size())];
        }
        CHECK(census == x.clique_census);

        GraphExpr pieces = GraphExpr::repeat(census.begin()->second,
                                             GraphExpr::complete(census.begin()->first));
        for (auto it = std::next(census.begin()); it != census.end(); ++it)
            pieces = GraphExpr::disjoint_union(
                pieces, GraphExpr::repeat(it->second, GraphExpr::complete(it->first)));
        GraphExpr whole = GraphExpr::join(GraphExpr::complete(1), pieces);
        CHECK(kappa_from_spectrum(spectrum(whole)) == tree_number(power_graph(g)));
    }
}

TEST_CASE("cyclic prime power groups have complete power graphs with p^(n(p^n-2)) trees") {
    for (const char* spec : {"Z:4", "Z:8", "Z:9", "Z:25", "Z:27"}) {
        Group g = build_group(spec);
        auto pk = prime_power_decompose(g.order());
        REQUIRE(pk.has_value());
        BigCount expected = big_pow(pk->first, static_cast<std::uint64_t>(pk->second) *
                                                   (g.order() - 2));
        CHECK(tree_number(power_graph(g)) == expected);
    }
}

TEST_SUITE_END();

// Heavier cross-validations, run through the dedicated ctest entry.
TEST_SUITE_BEGIN("slow" * doctest::skip());

TEST_CASE("bareiss and multimodular agree on the 168-vertex power graph") {
    Graph p = power_graph(build_group("PSL2:7"));
    CHECK(tree_number(p, DetMethod::Bareiss) == tree_number(p, DetMethod::Multimodular));
}

TEST_CASE("bareiss and multimodular agree on the 360-vertex power graph") {
    Graph p = power_graph(build_group("A:6"));
    BigCount bareiss = tree_number(p, DetMethod::Bareiss);
    BigCount crt = tree_number(p, DetMethod::Multimodular);
    CHECK(bareiss == crt);
    CHECK(bareiss == big_pow(2, 180) * big_pow(3, 40) * big_pow(5, 108));
}

TEST_CASE("bareiss and multimodular agree on dense random graphs") {
    std::mt19937_64 rng(0xdeadbeefULL);
    std::uniform_int_distribution<int> coin(0, 99);
    for (std::uint32_t n : {40u, 90u, 130u}) {
        Graph g(n);
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v)
                if (coin(rng) < 60) g.add_edge(u, v);
        CHECK(tree_number(g, DetMethod::Bareiss) == tree_number(g, DetMethod::Multimodular));
    }
}

TEST_SUITE_END();
