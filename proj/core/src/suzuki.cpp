#include "kappagraph/suzuki.hpp"

#include <limits>
#include <stdexcept>

namespace kappagraph {

namespace {

// q must be 2^(2n+1) with n >= 1; returns n.
unsigned field_exponent(std::uint64_t q) {
    if (q < 8 || (q & (q - 1)) != 0)
        throw std::invalid_argument("Suzuki parameter q must be 2^(2n+1) with n >= 1");
    unsigned e = 0;
    for (std::uint64_t v = q; v > 1; v >>= 1) ++e;
    if (e % 2 == 0) throw std::invalid_argument("Suzuki parameter q must be 2^(2n+1) with n >= 1");
    return (e - 1) / 2;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("Suzuki parameter overflow; use a smaller n");
    return static_cast<std::uint64_t>(p);
}

std::uint64_t to_u64(const BigCount& v, const char* what) {
    if (!mpz_fits_ulong_p(v.get_mpz_t()))
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits; use a smaller n");
    return mpz_get_ui(v.get_mpz_t());
}

}  // namespace

SuzukiParams suzuki_params(unsigned n) {
    if (n < 1) throw std::invalid_argument("Suzuki parameter n must be >= 1");
    SuzukiParams sp;
    sp.n = n;
    sp.q = big_pow(static_cast<std::uint64_t>(2), 2ull * n + 1);
    sp.r = big_pow(static_cast<std::uint64_t>(2), n + 1ull);
    sp.alpha = sp.q - sp.r + 1;
    sp.beta = sp.q + sp.r + 1;
    sp.order = sp.q * sp.q * (sp.q - 1) * (sp.q * sp.q + 1);
    if (sp.order != sp.q * sp.q * (sp.q - 1) * sp.alpha * sp.beta)
        throw std::logic_error("Suzuki order identity failed");
    sp.p_cosets = sp.q * sp.q + 1;
    sp.a = sp.q * sp.q * (sp.q * sp.q + 1) / 2;
    sp.b = sp.q * sp.q * (sp.q - 1) * sp.beta / 4;
    sp.c = sp.q * sp.q * (sp.q - 1) * sp.alpha / 4;

    const BigCount covered = 1 + sp.p_cosets * (sp.q * sp.q - 1) + sp.a * (sp.q - 2) +
                             sp.b * (sp.alpha - 1) + sp.c * (sp.beta - 1);
    if (covered != sp.order) throw std::logic_error("Suzuki conjugate partition identity failed");
    return sp;
}

FactoredInteger kappa_sylow_closed(std::uint64_t q) {
    const unsigned n = field_exponent(q);
    // 2^((q-1)^2) * q^(q^2+q-3) with q = 2^(2n+1)
    const std::uint64_t qm1_sq = checked_mul(q - 1, q - 1);
    const std::uint64_t q_exp = checked_mul(q, q) + q - 3;
    const std::uint64_t total = qm1_sq + checked_mul(2ull * n + 1, q_exp);
    return FactoredInteger::from_prime_power(2, total);
}

GraphExpr sylow_commuting_expr(std::uint64_t q) {
    field_exponent(q);
    return GraphExpr::join(GraphExpr::complete(q),
                           GraphExpr::repeat(q - 1, GraphExpr::complete(q)));
}

GraphExpr suzuki_commuting_expr(std::uint64_t q) {
    const unsigned n = field_exponent(q);
    const SuzukiParams sp = suzuki_params(n);
    const std::uint64_t alpha = to_u64(sp.alpha, "alpha");
    const std::uint64_t beta = to_u64(sp.beta, "beta");
    const std::uint64_t p = to_u64(sp.p_cosets, "p");
    const std::uint64_t a = to_u64(sp.a, "a");
    const std::uint64_t b = to_u64(sp.b, "b");
    const std::uint64_t c = to_u64(sp.c, "c");

    // commuting graph of P with the identity removed
    GraphExpr cp_sharp = GraphExpr::join(GraphExpr::complete(q - 1),
                                         GraphExpr::repeat(q - 1, GraphExpr::complete(q)));
    GraphExpr tori = GraphExpr::disjoint_union(
        GraphExpr::repeat(a, GraphExpr::complete(q - 2)),
        GraphExpr::disjoint_union(GraphExpr::repeat(b, GraphExpr::complete(alpha - 1)),
                                  GraphExpr::repeat(c, GraphExpr::complete(beta - 1))));
    GraphExpr rest = GraphExpr::disjoint_union(GraphExpr::repeat(p, cp_sharp), tori);
    GraphExpr expr = GraphExpr::join(GraphExpr::complete(1), rest);

    if (BigCount(static_cast<unsigned long>(expr.vertex_count())) != sp.order)
        throw std::logic_error("Suzuki commuting expression has wrong vertex count");
    return expr;
}

FactoredInteger kappa_suzuki_closed(std::uint64_t q) {
    const unsigned n = field_exponent(q);
    const SuzukiParams sp = suzuki_params(n);
    const std::uint64_t alpha = to_u64(sp.alpha, "alpha");
    const std::uint64_t beta = to_u64(sp.beta, "beta");
    const std::uint64_t p = to_u64(sp.p_cosets, "p");
    const std::uint64_t a = to_u64(sp.a, "a");
    const std::uint64_t b = to_u64(sp.b, "b");
    const std::uint64_t c = to_u64(sp.c, "c");

    FactoredInteger result = kappa_sylow_closed(q).pow(p);
    result *= factorize_u64(q - 1).pow(checked_mul(q - 3, a));
    result *= factorize_u64(alpha).pow(checked_mul(alpha - 2, b));
    result *= factorize_u64(beta).pow(checked_mul(beta - 2, c));
    return result;
}

}  // namespace kappagraph
