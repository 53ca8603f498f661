#pragma once

#include <cstdint>

#include "kappagraph/bigint.hpp"
#include "kappagraph/factored.hpp"
#include "kappagraph/graph_expr.hpp"

namespace kappagraph {

// Arithmetic data of Sz(q), q = 2^(2n+1).  The group itself is never
// constructed; its commuting graph is fully determined by the subgroup
// pattern below, which is what the expressions in this module encode.
struct SuzukiParams {
    unsigned n = 0;
    BigCount q;         // 2^(2n+1)
    BigCount r;         // 2^(n+1)
    BigCount alpha;     // q - r + 1
    BigCount beta;      // q + r + 1
    BigCount order;     // q^2 (q-1) (q^2+1)
    BigCount p_cosets;  // q^2 + 1, conjugates of the Sylow 2-subgroup
    BigCount a;         // q^2 (q^2+1) / 2, conjugates of the order q-1 torus
    BigCount b;         // q^2 (q-1) beta / 4, conjugates of the order alpha torus
    BigCount c;         // q^2 (q-1) alpha / 4, conjugates of the order beta torus
};

// Computes all parameters exactly and asserts both arithmetic invariants:
// the order product identity and the conjugate partition identity
//   1 + p(q^2-1) + a(q-2) + b(alpha-1) + c(beta-1) = order.
SuzukiParams suzuki_params(unsigned n);

// kappa of the commuting graph of a Sylow 2-subgroup: 2^((q-1)^2) q^(q^2+q-3).
FactoredInteger kappa_sylow_closed(std::uint64_t q);

// C(P) = K_q joined with q-1 disjoint copies of K_q, on q^2 vertices.
GraphExpr sylow_commuting_expr(std::uint64_t q);

// C(Sz(q)) as a graph expression over the conjugate decomposition:
// K_1 joined with (q^2+1 copies of C(P minus identity)) + cliques for the
// three torus classes.  Vertex count equals |Sz(q)|.
GraphExpr suzuki_commuting_expr(std::uint64_t q);

// Closed form for kappa of C(Sz(q)), fully factored into primes.
FactoredInteger kappa_suzuki_closed(std::uint64_t q);

}  // namespace kappagraph
