#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kappagraph/bigint.hpp"

namespace kappagraph {

class Group;

enum class UniversalClass {
    CyclicPrimePower,     // S = G
    CyclicNonPrimePower,  // S = identity + generators, |S| = 1 + phi(n)
    GeneralizedQuaternion,  // S = {identity, unique involution}
    TrivialOnly,          // S = {identity}
};

struct UniversalReport {
    std::vector<std::uint32_t> universal_set;  // sorted element indices
    UniversalClass classification;
};

// Universal vertices of the power graph on all of G, classified.
UniversalReport universal_vertices(const Group& g);

// One element of order p for every prime p dividing |G|; the returned
// vertices are pairwise nonadjacent in the power graph.
std::vector<std::uint32_t> coprime_witness(const Group& g);

// All elements of order 2 (an independent set of the power graph).
std::vector<std::uint32_t> involution_set(const Group& g);

// G = C + B_1 + ... + B_n with C a cyclic subgroup of prime-power order,
// maximal among all cyclic prime-power-order subgroups, each B_i an
// independent set of the power graph with |B_i| > 1.
struct PowerFreeDecomposition {
    std::vector<std::uint32_t> clique_part;
    std::vector<std::vector<std::uint32_t>> blocks;
};

struct DecompositionSearchResult {
    std::optional<PowerFreeDecomposition> decomposition;
    // Only meaningful when no decomposition was found under the global
    // maximality reading: true when some per-prime-maximal clique part would
    // have admitted one.
    bool per_prime_reading_differs = false;
};

// Exhaustive search over every maximal-order cyclic prime-power subgroup C
// and every proper coloring of the power graph on the complement into
// block_count independent blocks of size > 1.  Absence is a value, not an
// error.
DecompositionSearchResult find_power_free_decomposition(const Group& g, unsigned block_count);

// Re-checks every invariant of a decomposition; throws std::logic_error
// with a description on the first violation.
void verify_power_free_decomposition(const Group& g, const PowerFreeDecomposition& d,
                                     unsigned block_count);

enum class PowerFreeFamily {
    ElementaryAbelian2,    // order >= 4
    Dihedral2Power,        // D_(2^m), m >= 3
    DihedralFrobenius2pn,  // D_(2 p^n), p odd
    None,
};

struct ClassificationVerdict {
    bool has_1pfd = false;
    PowerFreeFamily predicted = PowerFreeFamily::None;
    std::uint64_t prime = 0;     // DihedralFrobenius2pn: p
    std::uint64_t exponent = 0;  // DihedralFrobenius2pn: n in p^n
};

// Recognizes the family by cheap invariants (order, abelianness, exponent,
// involution count, maximal element order) and runs the 1-block search.
ClassificationVerdict classify_power_free(const Group& g);

struct SubgroupProductReport {
    BigCount lhs;  // kappa_P(G)
    BigCount rhs;  // product of kappa_P(H_i)
    bool holds;
};

// Requires each H_i to be a nontrivial subgroup and all pairwise
// intersections to be exactly {identity}; throws std::invalid_argument
// otherwise.
SubgroupProductReport check_subgroup_product_bound(
    const Group& g, const std::vector<std::vector<std::uint32_t>>& subgroups);

struct ExtensionBoundReport {
    BigCount lhs;             // kappa_P(G)
    BigCount rhs;             // factor * kappa_P(H)
    BigCount factor;          // (phi(m)+1)^(phi(m)-1)
    BigCount kappa_subgroup;  // kappa_P(H)
    bool holds;
    // kappa_P(G) == kappa_P(H); this happens precisely when G is a Frobenius
    // group with kernel H and a complement of order 2, which is re-verified
    // structurally whenever the flag is set.
    bool equality_is_frobenius_case;
};

ExtensionBoundReport check_extension_bound(const Group& g,
                                           const std::vector<std::uint32_t>& subgroup,
                                           std::uint64_t element_order_outside);

// Edge sets of the power graph and the commuting graph on all of G coincide.
bool power_equals_commuting(const Group& g);

}  // namespace kappagraph
