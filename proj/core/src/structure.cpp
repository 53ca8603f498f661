#include "kappagraph/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kappagraph/factored.hpp"
#include "kappagraph/graph.hpp"
#include "kappagraph/group.hpp"
#include "kappagraph/tree_count.hpp"

namespace kappagraph {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

BigCount kappa_power(const Group& g) { return tree_number(power_graph(g, VertexSet::All)); }

// All distinct cyclic subgroups of prime-power order, as sorted index sets.
std::vector<std::vector<std::uint32_t>> cyclic_prime_power_subgroups(const Group& g) {
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint32_t i = 1; i < g.order(); ++i) {
        if (!prime_power_decompose(g.element_order(i))) continue;
        seen.insert(g.element_info(i).cyclic_subgroup);
    }
    return {seen.begin(), seen.end()};
}

// Backtracking proper coloring of the power graph induced on `rest` into
// exactly `blocks` color classes, each of size >= 2.  Color symmetry is
// broken by allowing a vertex only the used colors plus the next unused one.
class BlockColoring {
public:
    BlockColoring(const Group& g, std::vector<std::uint32_t> rest, unsigned blocks)
        : group_(g), rest_(std::move(rest)), blocks_(blocks) {
        const std::size_t r = rest_.size();
        adj_.assign(r, std::vector<bool>(r, false));
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = a + 1; b < r; ++b)
                if (group_.is_power_related(rest_[a], rest_[b])) adj_[a][b] = adj_[b][a] = true;
        color_.assign(r, blocks_);
        class_size_.assign(blocks_, 0);
    }

    std::optional<std::vector<std::vector<std::uint32_t>>> run() {
        if (rest_.size() < 2ull * blocks_) return std::nullopt;
        if (!descend(0, 0)) return std::nullopt;
        std::vector<std::vector<std::uint32_t>> out(blocks_);
        for (std::size_t v = 0; v < rest_.size(); ++v) out[color_[v]].push_back(rest_[v]);
        for (auto& block : out) std::sort(block.begin(), block.end());
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    bool feasible(std::size_t next) const {
        // every class still short of two members must be fillable
        std::uint64_t deficit = 0;
        for (unsigned c = 0; c < blocks_; ++c)
            if (class_size_[c] < 2) deficit += 2 - class_size_[c];
        return deficit <= rest_.size() - next;
    }

    bool descend(std::size_t v, unsigned used) {
        if (v == rest_.size()) {
            for (unsigned c = 0; c < blocks_; ++c)
                if (class_size_[c] < 2) return false;
            return true;
        }
        if (!feasible(v)) return false;
        const unsigned limit = std::min<unsigned>(blocks_, used + 1);
        for (unsigned c = 0; c < limit; ++c) {
            bool ok = true;
            for (std::size_t w = 0; w < v; ++w)
                if (color_[w] == c && adj_[v][w]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color_[v] = c;
            ++class_size_[c];
            if (descend(v + 1, std::max(used, c + 1))) return true;
            --class_size_[c];
            color_[v] = blocks_;
        }
        return false;
    }

    const Group& group_;
    std::vector<std::uint32_t> rest_;
    unsigned blocks_;
    std::vector<std::vector<bool>> adj_;
    std::vector<unsigned> color_;
    std::vector<std::uint64_t> class_size_;
};

std::optional<PowerFreeDecomposition> try_clique_part(const Group& g,
                                                      const std::vector<std::uint32_t>& clique,
                                                      unsigned block_count) {
    std::vector<bool> in_c(g.order(), false);
    for (std::uint32_t e : clique) in_c[e] = true;
    std::vector<std::uint32_t> rest;
    for (std::uint32_t i = 0; i < g.order(); ++i)
        if (!in_c[i]) rest.push_back(i);
    if (rest.size() < 2ull * block_count) return std::nullopt;

    // necessary condition: the generators of <b> all lie outside C and form
    // a clique, so phi(o(b)) must fit into the available blocks
    for (std::uint32_t b : rest)
        if (euler_phi(g.element_order(b)) > block_count) return std::nullopt;

    BlockColoring coloring(g, rest, block_count);
    auto blocks = coloring.run();
    if (!blocks) return std::nullopt;
    PowerFreeDecomposition d;
    d.clique_part = clique;
    d.blocks = std::move(*blocks);
    return d;
}

}  // namespace

UniversalReport universal_vertices(const Group& g) {
    Graph p = power_graph(g, VertexSet::All);
    UniversalReport report;
    for (std::uint32_t v = 0; v < p.vertex_count(); ++v)
        if (p.degree(v) == p.vertex_count() - 1) report.universal_set.push_back(v);

    const std::size_t s = report.universal_set.size();
    const std::uint32_t n = g.order();
    bool cyclic = false;
    for (std::uint32_t i = 0; i < n && !cyclic; ++i) cyclic = g.element_order(i) == n;

    if (s == 1) {
        report.classification = UniversalClass::TrivialOnly;
    } else if (s == n) {
        report.classification = UniversalClass::CyclicPrimePower;
    } else if (cyclic) {
        report.classification = UniversalClass::CyclicNonPrimePower;
        if (s != 1 + euler_phi(n))
            throw std::logic_error("universal set of a cyclic group has unexpected size");
    } else {
        report.classification = UniversalClass::GeneralizedQuaternion;
        if (s != 2 || g.element_order(report.universal_set[1]) != 2)
            throw std::logic_error("non-cyclic group with universal vertices is not quaternion-like");
    }
    return report;
}

std::vector<std::uint32_t> coprime_witness(const Group& g) {
    std::vector<std::uint32_t> witness;
    for (std::uint64_t p : prime_divisors(g.order())) {
        for (std::uint32_t i = 1; i < g.order(); ++i) {
            if (g.element_order(i) == p) {
                witness.push_back(i);
                break;
            }
        }
    }
    for (std::size_t a = 0; a < witness.size(); ++a)
        for (std::size_t b = a + 1; b < witness.size(); ++b)
            if (g.is_power_related(witness[a], witness[b]))
                throw std::logic_error("coprime witness elements are power-related");
    return witness;
}

std::vector<std::uint32_t> involution_set(const Group& g) {
    std::vector<std::uint32_t> inv;
    for (std::uint32_t i = 1; i < g.order(); ++i)
        if (g.element_order(i) == 2) inv.push_back(i);
    for (std::size_t a = 0; a < inv.size(); ++a)
        for (std::size_t b = a + 1; b < inv.size(); ++b)
            if (g.is_power_related(inv[a], inv[b]))
                throw std::logic_error("involutions are power-related");
    return inv;
}

DecompositionSearchResult find_power_free_decomposition(const Group& g, unsigned block_count) {
    if (block_count < 1) throw std::invalid_argument("block count must be >= 1");
    if (g.order() < 2) throw std::invalid_argument("group must have order >= 2");

    const auto subgroups = cyclic_prime_power_subgroups(g);
    std::size_t max_size = 0;
    for (const auto& c : subgroups) max_size = std::max(max_size, c.size());

    DecompositionSearchResult result;
    for (const auto& c : subgroups) {
        if (c.size() != max_size) continue;
        if (auto d = try_clique_part(g, c, block_count)) {
            verify_power_free_decomposition(g, *d, block_count);
            result.decomposition = std::move(d);
            return result;
        }
    }

    // Global reading failed; report whether a per-prime-maximal clique part
    // would have changed the verdict.
    for (std::uint64_t p : prime_divisors(g.order())) {
        std::size_t max_p = 0;
        for (const auto& c : subgroups) {
            auto pk = prime_power_decompose(static_cast<std::uint64_t>(c.size()));
            if (pk && pk->first == p) max_p = std::max(max_p, c.size());
        }
        if (max_p == 0 || max_p == max_size) continue;
        for (const auto& c : subgroups) {
            auto pk = prime_power_decompose(static_cast<std::uint64_t>(c.size()));
            if (!pk || pk->first != p || c.size() != max_p) continue;
            if (try_clique_part(g, c, block_count)) {
                result.per_prime_reading_differs = true;
                return result;
            }
        }
    }
    return result;
}

void verify_power_free_decomposition(const Group& g, const PowerFreeDecomposition& d,
                                     unsigned block_count) {
    if (d.blocks.size() != block_count) throw std::logic_error("decomposition: wrong block count");

    // exact partition
    std::vector<int> cover(g.order(), 0);
    for (std::uint32_t e : d.clique_part) cover.at(e) += 1;
    for (const auto& block : d.blocks)
        for (std::uint32_t e : block) cover.at(e) += 1;
    for (std::uint32_t i = 0; i < g.order(); ++i)
        if (cover[i] != 1) throw std::logic_error("decomposition: parts do not partition the group");

    // clique part: cyclic subgroup of prime-power order, maximal among all
    // cyclic prime-power-order subgroups
    if (!is_subgroup(g, d.clique_part)) throw std::logic_error("decomposition: C is not a subgroup");
    bool generated = false;
    for (std::uint32_t e : d.clique_part)
        if (g.element_info(e).cyclic_subgroup == d.clique_part) generated = true;
    if (!generated) throw std::logic_error("decomposition: C is not cyclic");
    if (!prime_power_decompose(static_cast<std::uint64_t>(d.clique_part.size())))
        throw std::logic_error("decomposition: |C| is not a prime power");
    for (const auto& other : cyclic_prime_power_subgroups(g))
        if (other.size() > d.clique_part.size())
            throw std::logic_error("decomposition: C is not of maximal order");

    // blocks: independent, size > 1
    for (const auto& block : d.blocks) {
        if (block.size() < 2) throw std::logic_error("decomposition: block of size <= 1");
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                if (g.is_power_related(block[a], block[b]))
                    throw std::logic_error("decomposition: block is not independent");
    }

    // necessary condition on element orders outside C
    std::vector<bool> in_c(g.order(), false);
    for (std::uint32_t e : d.clique_part) in_c[e] = true;
    for (std::uint32_t i = 0; i < g.order(); ++i)
        if (!in_c[i] && euler_phi(g.element_order(i)) > block_count)
            throw std::logic_error("decomposition: phi(o(b)) exceeds the block count");
}

ClassificationVerdict classify_power_free(const Group& g) {
    ClassificationVerdict verdict;
    verdict.has_1pfd = find_power_free_decomposition(g, 1).decomposition.has_value();

    const std::uint64_t n = g.order();
    std::uint32_t involutions = 0;
    std::uint32_t max_order = 1;
    for (std::uint32_t i = 0; i < g.order(); ++i) {
        const std::uint32_t o = g.element_order(i);
        if (o == 2) ++involutions;
        max_order = std::max(max_order, o);
    }

    auto two_power = prime_power_decompose(n);
    if (n >= 4 && g.is_abelian() && max_order == 2) {
        verdict.predicted = PowerFreeFamily::ElementaryAbelian2;
        return verdict;
    }
    if (two_power && two_power->first == 2 && two_power->second >= 3 && !g.is_abelian() &&
        max_order == n / 2 && involutions == n / 2 + 1) {
        verdict.predicted = PowerFreeFamily::Dihedral2Power;
        return verdict;
    }
    if (n % 2 == 0) {
        auto odd_part = prime_power_decompose(n / 2);
        if (odd_part && odd_part->first > 2 && max_order == n / 2 && involutions == n / 2) {
            verdict.predicted = PowerFreeFamily::DihedralFrobenius2pn;
            verdict.prime = odd_part->first;
            verdict.exponent = odd_part->second;
            return verdict;
        }
    }
    verdict.predicted = PowerFreeFamily::None;
    return verdict;
}

namespace {

void require_valid_subgroup(const Group& g, const std::vector<std::uint32_t>& h,
                            const char* what) {
    if (!is_subgroup(g, h)) throw std::invalid_argument(std::string(what) + ": not a subgroup");
}

}  // namespace

SubgroupProductReport check_subgroup_product_bound(
    const Group& g, const std::vector<std::vector<std::uint32_t>>& subgroups) {
    if (subgroups.empty()) throw std::invalid_argument("need at least one subgroup");
    for (const auto& h : subgroups) {
        require_valid_subgroup(g, h, "subgroup product bound");
        if (h.size() < 2) throw std::invalid_argument("subgroup product bound: trivial subgroup");
    }
    for (std::size_t a = 0; a < subgroups.size(); ++a)
        for (std::size_t b = a + 1; b < subgroups.size(); ++b) {
            std::vector<std::uint32_t> sa = subgroups[a], sb = subgroups[b], inter;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::back_inserter(inter));
            if (inter.size() != 1 || inter[0] != 0)
                throw std::invalid_argument(
                    "subgroup product bound: pairwise intersections must be {identity}");
        }

    SubgroupProductReport report;
    report.lhs = kappa_power(g);
    report.rhs = 1;
    for (const auto& h : subgroups) report.rhs *= kappa_power(subgroup_as_group(g, h));
    report.holds = report.lhs >= report.rhs;
    return report;
}

ExtensionBoundReport check_extension_bound(const Group& g,
                                           const std::vector<std::uint32_t>& subgroup,
                                           std::uint64_t element_order_outside) {
    require_valid_subgroup(g, subgroup, "extension bound");
    if (subgroup.size() >= g.order())
        throw std::invalid_argument("extension bound: subgroup must be proper");
    std::vector<bool> in_h(g.order(), false);
    for (std::uint32_t e : subgroup) in_h[e] = true;
    bool found = false;
    for (std::uint32_t i = 0; i < g.order() && !found; ++i)
        found = !in_h[i] && g.element_order(i) == element_order_outside;
    if (!found)
        throw std::invalid_argument("extension bound: no element of that order outside the subgroup");

    ExtensionBoundReport report;
    const std::uint64_t phi = euler_phi(element_order_outside);
    report.factor = big_pow(phi + 1, phi - 1);
    report.kappa_subgroup = kappa_power(subgroup_as_group(g, subgroup));
    report.lhs = kappa_power(g);
    report.rhs = report.factor * report.kappa_subgroup;
    report.holds = report.lhs >= report.rhs;
    report.equality_is_frobenius_case = report.lhs == report.kappa_subgroup;

    if (report.equality_is_frobenius_case) {
        // equality forces: everything outside H is an involution, no power
        // edges inside G\H and none between G\H and H\{1}
        for (std::uint32_t i = 1; i < g.order(); ++i) {
            if (in_h[i]) continue;
            if (g.element_order(i) != 2)
                throw std::logic_error("extension bound equality without involution structure");
            for (std::uint32_t j = 1; j < g.order(); ++j)
                if (j != i && g.is_power_related(i, j))
                    throw std::logic_error("extension bound equality with stray power edges");
        }
    }
    return report;
}

bool power_equals_commuting(const Group& g) {
    return power_graph(g, VertexSet::All) == commuting_graph(g, VertexSet::All);
}

}  // namespace kappagraph
