#include <doctest.h>

#include <set>

#include "kappagraph/factored.hpp"
#include "kappagraph/graph.hpp"
#include "kappagraph/group.hpp"
#include "kappagraph/structure.hpp"
#include "kappagraph/tree_count.hpp"
#include "support/catalog.hpp"

using namespace kappagraph;

namespace {

std::vector<std::uint32_t> cyclic_subgroup_of_order(const Group& g, std::uint32_t order) {
    for (std::uint32_t i = 0; i < g.order(); ++i)
        if (g.element_order(i) == order) return g.element_info(i).cyclic_subgroup;
    throw std::runtime_error("no element of the requested order");
}

std::set<std::uint64_t> prime_set(std::uint64_t n) {
    std::set<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (is_prime_u64(p) && n % p == 0) out.insert(p);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("structure");

TEST_CASE("universal vertices of cyclic groups") {
    UniversalReport z12 = universal_vertices(build_group("Z:12"));
    CHECK(z12.universal_set.size() == 5);  // 1 + phi(12)
    CHECK(z12.classification == UniversalClass::CyclicNonPrimePower);

    UniversalReport z8 = universal_vertices(build_group("Z:8"));
    CHECK(z8.universal_set.size() == 8);
    CHECK(z8.classification == UniversalClass::CyclicPrimePower);
}

TEST_CASE("universal vertices of quaternion groups") {
    for (const char* spec : {"Q:8", "Q:16"}) {
        Group g = build_group(spec);
        UniversalReport report = universal_vertices(g);
        CHECK(report.classification == UniversalClass::GeneralizedQuaternion);
        REQUIRE(report.universal_set.size() == 2);
        CHECK(report.universal_set[0] == 0);
        CHECK(g.element_order(report.universal_set[1]) == 2);
    }
}

TEST_CASE("groups with only the identity universal") {
    for (const char* spec : {"S:3", "A:4", "D:8", "EA:4"}) {
        UniversalReport report = universal_vertices(build_group(spec));
        CHECK(report.classification == UniversalClass::TrivialOnly);
        CHECK(report.universal_set == std::vector<std::uint32_t>{0});
    }
}

TEST_CASE("coprime witness") {
    Group z6 = build_group("Z:6");
    auto w = coprime_witness(z6);
    REQUIRE(w.size() == 2);
    std::set<std::uint32_t> orders{z6.element_order(w[0]), z6.element_order(w[1])};
    CHECK(orders == std::set<std::uint32_t>{2, 3});

    CHECK(coprime_witness(build_group("Z:8")).size() == 1);

    Group a5 = build_group("A:5");
    auto wa = coprime_witness(a5);
    REQUIRE(wa.size() == 3);
    std::set<std::uint32_t> oa;
    for (std::uint32_t v : wa) oa.insert(a5.element_order(v));
    CHECK(oa == std::set<std::uint32_t>{2, 3, 5});
    for (std::size_t i = 0; i < wa.size(); ++i)
        for (std::size_t j = i + 1; j < wa.size(); ++j)
            CHECK(!a5.is_power_related(wa[i], wa[j]));
}

TEST_CASE("involution sets") {
    CHECK(involution_set(build_group("D:8")).size() == 5);
    CHECK(involution_set(build_group("Q:8")).size() == 1);
    CHECK(involution_set(build_group("Z:9")).empty());
}

TEST_CASE("cyclic groups admit no decomposition") {
    for (const char* spec : {"Z:4", "Z:6", "Z:12", "Z:16"}) {
        Group g = build_group(spec);
        for (unsigned blocks = 1; blocks <= 3; ++blocks)
            CHECK(!find_power_free_decomposition(g, blocks).decomposition);
    }
}

TEST_CASE("Q:16 has a 2-block decomposition with the expected shape") {
    Group g = build_group("Q:16");
    auto result = find_power_free_decomposition(g, 2);
    REQUIRE(result.decomposition);
    const auto& d = *result.decomposition;
    CHECK(d.clique_part.size() == 8);  // <x> of order 8
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.blocks[0].size() == 4);
    CHECK(d.blocks[1].size() == 4);
    verify_power_free_decomposition(g, d, 2);
}

TEST_CASE("D:8 has a power-free decomposition into rotations and reflections") {
    Group g = build_group("D:8");
    auto result = find_power_free_decomposition(g, 1);
    REQUIRE(result.decomposition);
    const auto& d = *result.decomposition;
    CHECK(d.clique_part == std::vector<std::uint32_t>{0, 1, 2, 3});
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0] == std::vector<std::uint32_t>{4, 5, 6, 7});
    verify_power_free_decomposition(g, d, 1);
}

TEST_CASE("Q:8 has no 1-block decomposition") {
    CHECK(!find_power_free_decomposition(build_group("Q:8"), 1).decomposition);
}

TEST_CASE("necessary conditions hold on found decompositions") {
    struct Case {
        const char* spec;
        unsigned blocks;
    };
    for (Case c : {Case{"D:8", 1}, Case{"D:18", 1}, Case{"EA:16", 1}, Case{"Q:16", 2},
                   Case{"Q:32", 2}}) {
        Group g = build_group(c.spec);
        auto result = find_power_free_decomposition(g, c.blocks);
        REQUIRE(result.decomposition);
        const auto& d = *result.decomposition;

        std::vector<bool> in_c(g.order(), false);
        for (std::uint32_t e : d.clique_part) in_c[e] = true;
        for (std::uint32_t i = 0; i < g.order(); ++i)
            if (!in_c[i]) CHECK(euler_phi(g.element_order(i)) <= c.blocks);

        // pi(G) is contained in pi((n+1)!) together with the clique prime
        auto pk = prime_power_decompose(d.clique_part.size());
        REQUIRE(pk.has_value());
        std::set<std::uint64_t> allowed = {pk->first};
        std::uint64_t factorial = 1;
        for (std::uint64_t i = 2; i <= c.blocks + 1; ++i) factorial *= i;
        for (std::uint64_t p : prime_set(factorial)) allowed.insert(p);
        for (std::uint64_t p : prime_set(g.order())) CHECK(allowed.count(p) == 1);

        // when the clique prime is outside pi((n+1)!), C is normal and meets
        // no centralizer of an outside element
        if (!prime_set(factorial).count(pk->first)) {
            for (std::uint32_t x = 0; x < g.order(); ++x)
                for (std::uint32_t e : d.clique_part)
                    CHECK(in_c[g.mult(g.mult(x, e), g.inverse(x))]);
            for (std::uint32_t b = 0; b < g.order(); ++b) {
                if (in_c[b]) continue;
                for (std::uint32_t e : d.clique_part)
                    if (e != 0) CHECK(g.mult(b, e) != g.mult(e, b));
            }
        }
    }
}

TEST_CASE("groups with several universal vertices decompose iff quaternion") {
    for (const char* spec : {"Z:4", "Z:8", "Z:12", "Z:16", "Z:36", "Q:8", "Q:16", "Q:32"}) {
        Group g = build_group(spec);
        UniversalReport u = universal_vertices(g);
        REQUIRE(u.universal_set.size() > 1);
        bool any = false;
        for (unsigned blocks = 1; blocks <= 3 && !any; ++blocks)
            any = find_power_free_decomposition(g, blocks).decomposition.has_value();
        CHECK(any == testsupport::is_generalized_quaternion(g));
    }
}

TEST_CASE("classification verdicts") {
    ClassificationVerdict ea4 = classify_power_free(build_group("EA:4"));
    CHECK(ea4.predicted == PowerFreeFamily::ElementaryAbelian2);
    CHECK(ea4.has_1pfd);

    ClassificationVerdict d16 = classify_power_free(build_group("D:16"));
    CHECK(d16.predicted == PowerFreeFamily::Dihedral2Power);
    CHECK(d16.has_1pfd);

    ClassificationVerdict d18 = classify_power_free(build_group("D:18"));
    CHECK(d18.predicted == PowerFreeFamily::DihedralFrobenius2pn);
    CHECK(d18.prime == 3);
    CHECK(d18.exponent == 2);
    CHECK(d18.has_1pfd);

    ClassificationVerdict s4 = classify_power_free(build_group("S:4"));
    CHECK(s4.predicted == PowerFreeFamily::None);
    CHECK(!s4.has_1pfd);

    ClassificationVerdict d12 = classify_power_free(build_group("D:12"));
    CHECK(d12.predicted == PowerFreeFamily::None);
    CHECK(!d12.has_1pfd);

    ClassificationVerdict q8 = classify_power_free(build_group("Q:8"));
    CHECK(q8.predicted == PowerFreeFamily::None);
    CHECK(!q8.has_1pfd);
}

TEST_CASE("subgroup product bound instances") {
    Group s3 = build_group("S:3");
    auto r1 = check_subgroup_product_bound(
        s3, {cyclic_subgroup_of_order(s3, 3), cyclic_subgroup_of_order(s3, 2)});
    CHECK(r1.lhs == 3);
    CHECK(r1.rhs == 3);
    CHECK(r1.holds);

    Group z6 = build_group("Z:6");
    auto r2 = check_subgroup_product_bound(
        z6, {cyclic_subgroup_of_order(z6, 3), cyclic_subgroup_of_order(z6, 2)});
    CHECK(r2.lhs == 540);
    CHECK(r2.rhs == 3);
    CHECK(r2.holds);
}

TEST_CASE("subgroup product bound validates its inputs") {
    Group q8 = build_group("Q:8");
    // the three cyclic order-4 subgroups share the central involution
    std::vector<std::vector<std::uint32_t>> fours;
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint32_t i = 1; i < q8.order(); ++i)
        if (q8.element_order(i) == 4) seen.insert(q8.element_info(i).cyclic_subgroup);
    fours.assign(seen.begin(), seen.end());
    REQUIRE(fours.size() == 3);
    CHECK_THROWS_AS(check_subgroup_product_bound(q8, fours), std::invalid_argument);

    Group z6 = build_group("Z:6");
    CHECK_THROWS_AS(check_subgroup_product_bound(z6, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(check_subgroup_product_bound(z6, {{0}}), std::invalid_argument);
}

TEST_CASE("kappa of a subgroup is intrinsic") {
    // building the subgroup as a group and inducing the graph on the subset
    // agree, because power adjacency inside a subgroup is intrinsic
    struct Case {
        const char* spec;
        std::uint32_t order;
    };
    for (Case c : {Case{"S:3", 3}, Case{"Q:16", 8}, Case{"A:5", 5}, Case{"Z:12", 4}}) {
        Group g = build_group(c.spec);
        auto sub = cyclic_subgroup_of_order(g, c.order);
        Graph induced = power_graph(g, sub);
        Graph standalone = power_graph(subgroup_as_group(g, sub));
        CHECK(induced == standalone);
        CHECK(tree_number(induced) == tree_number(standalone));
    }
}

TEST_CASE("extension bound instances") {
    Group s3 = build_group("S:3");
    auto r1 = check_extension_bound(s3, cyclic_subgroup_of_order(s3, 3), 2);
    CHECK(r1.factor == 1);  // phi(2) = 1
    CHECK(r1.lhs == 3);
    CHECK(r1.rhs == 3);
    CHECK(r1.holds);
    CHECK(r1.equality_is_frobenius_case);

    Group z6 = build_group("Z:6");
    auto r2 = check_extension_bound(z6, cyclic_subgroup_of_order(z6, 3), 6);
    CHECK(r2.factor == 3);  // (phi(6)+1)^(phi(6)-1) = 3^1
    CHECK(r2.kappa_subgroup == 3);
    CHECK(r2.rhs == 9);
    CHECK(r2.lhs == 540);
    CHECK(r2.holds);
    CHECK(!r2.equality_is_frobenius_case);

    Group q8 = build_group("Q:8");
    auto r3 = check_extension_bound(q8, cyclic_subgroup_of_order(q8, 4), 4);
    CHECK(r3.factor == 3);
    CHECK(r3.kappa_subgroup == 16);
    CHECK(r3.lhs == 2048);
    CHECK(r3.holds);
    CHECK(!r3.equality_is_frobenius_case);

    Group d18 = build_group("D:18");
    auto r4 = check_extension_bound(d18, cyclic_subgroup_of_order(d18, 9), 2);
    CHECK(r4.lhs == big_pow(3, 14));
    CHECK(r4.equality_is_frobenius_case);
}

TEST_CASE("extension bound validates its inputs") {
    Group z6 = build_group("Z:6");
    CHECK_THROWS_AS(check_extension_bound(z6, {0, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_extension_bound(z6, {0, 1, 2, 3, 4, 5}, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_extension_bound(z6, {0, 2, 4}, 5), std::invalid_argument);
}

TEST_CASE("power equals commuting characterization") {
    CHECK(power_equals_commuting(build_group("Z:8")));
    CHECK(power_equals_commuting(build_group("Q:16")));
    CHECK(power_equals_commuting(build_group("S:3")));
    CHECK(!power_equals_commuting(build_group("Z:6")));
    CHECK(!power_equals_commuting(build_group("A:4")));
}

TEST_CASE("search argument validation") {
    Group g = build_group("Z:6");
    CHECK_THROWS_AS(find_power_free_decomposition(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(find_power_free_decomposition(build_group("Z:1"), 1), std::invalid_argument);
}

TEST_SUITE_END();
