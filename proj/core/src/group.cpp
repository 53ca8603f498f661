#include "kappagraph/group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kappagraph/factored.hpp"

namespace kappagraph {

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

void Group::check_index(std::uint32_t i) const {
    if (i >= n_) throw std::out_of_range("element index out of range");
}

std::uint32_t Group::element_order(std::uint32_t i) const {
    check_index(i);
    return orders_[i];
}

ElementInfo Group::element_info(std::uint32_t i) const {
    check_index(i);
    ElementInfo info;
    info.index = i;
    info.order = orders_[i];
    info.cyclic_subgroup.reserve(info.order);
    const std::uint64_t* row = power_bits_.data() + static_cast<std::size_t>(i) * words_;
    for (std::uint32_t j = 0; j < n_; ++j)
        if (row[j >> 6] & (1ull << (j & 63))) info.cyclic_subgroup.push_back(j);
    return info;
}

bool Group::is_power_of(std::uint32_t j, std::uint32_t i) const {
    check_index(i);
    check_index(j);
    const std::uint64_t* row = power_bits_.data() + static_cast<std::size_t>(i) * words_;
    return (row[j >> 6] >> (j & 63)) & 1;
}

bool Group::is_power_related(std::uint32_t i, std::uint32_t j) const {
    if (i == j) throw std::invalid_argument("is_power_related: adjacency is only defined for distinct elements");
    return is_power_of(j, i) || is_power_of(i, j);
}

bool Group::commutes(std::uint32_t i, std::uint32_t j) const {
    if (i == j) throw std::invalid_argument("commutes: adjacency is only defined for distinct elements");
    check_index(i);
    check_index(j);
    return mult(i, j) == mult(j, i);
}

bool Group::is_abelian() const {
    for (std::uint32_t i = 1; i < n_; ++i)
        for (std::uint32_t j = i + 1; j < n_; ++j)
            if (mult(i, j) != mult(j, i)) return false;
    return true;
}

const std::vector<std::uint16_t>& Group::permutation(std::uint32_t i) const {
    check_index(i);
    if (!permutation_backed()) throw std::logic_error("group has no permutation backing");
    return perms_[i];
}

void Group::build_caches() {
    inverse_.assign(n_, 0);
    orders_.assign(n_, 0);
    words_ = (n_ + 63) / 64;
    power_bits_.assign(static_cast<std::size_t>(n_) * words_, 0);

    for (std::uint32_t i = 0; i < n_; ++i) {
        std::uint64_t* row = power_bits_.data() + static_cast<std::size_t>(i) * words_;
        std::uint32_t x = 0;  // identity
        std::uint32_t ord = 0;
        do {
            row[x >> 6] |= 1ull << (x & 63);
            x = mult(x, i);
            ++ord;
        } while (x != 0);
        orders_[i] = ord;
    }
    for (std::uint32_t i = 0; i < n_; ++i) {
        for (std::uint32_t j = 0; j < n_; ++j) {
            if (mult(i, j) == 0) {
                inverse_[i] = j;
                break;
            }
        }
    }
}

namespace {

void validate_table(const std::vector<std::uint16_t>& table, std::uint32_t n) {
    if (n == 0) throw std::runtime_error("group must have at least the identity element");
    if (table.size() != static_cast<std::size_t>(n) * n)
        throw std::runtime_error("Cayley table has wrong size");
    for (std::uint16_t v : table)
        if (v >= n) throw std::runtime_error("Cayley table entry out of range");

    auto at = [&](std::uint32_t i, std::uint32_t j) {
        return table[static_cast<std::size_t>(i) * n + j];
    };

    // index 0 must be a two-sided identity
    for (std::uint32_t i = 0; i < n; ++i) {
        if (at(0, i) != i || at(i, 0) != i)
            throw std::runtime_error("index 0 is not a two-sided identity");
    }

    // Latin property: rows and columns are permutations
    std::vector<bool> seen(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint16_t v = at(i, j);
            if (seen[v]) throw std::runtime_error("Cayley table row is not a permutation");
            seen[v] = true;
        }
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint16_t v = at(j, i);
            if (seen[v]) throw std::runtime_error("Cayley table column is not a permutation");
            seen[v] = true;
        }
    }

    // two-sided inverses
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t j = 0;
        while (at(i, j) != 0) ++j;
        if (at(j, i) != 0) throw std::runtime_error("element lacks a two-sided inverse");
    }

    // associativity: exhaustive at small orders, fixed-seed sampling above
    if (n <= 512) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                std::uint32_t ab = at(a, b);
                for (std::uint32_t c = 0; c < n; ++c)
                    if (at(ab, c) != at(a, at(b, c)))
                        throw std::runtime_error("multiplication is not associative");
            }
    } else {
        std::mt19937_64 rng(0x5eed5eedULL);
        std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
        for (int t = 0; t < 10000; ++t) {
            std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
            if (at(at(a, b), c) != at(a, at(b, c)))
                throw std::runtime_error("multiplication is not associative");
        }
    }
}

using Perm = std::vector<std::uint16_t>;

Perm compose(const Perm& f, const Perm& g) {
    // (f*g)(p) = f(g(p))
    Perm h(f.size());
    for (std::size_t p = 0; p < f.size(); ++p) h[p] = f[g[p]];
    return h;
}

// Closure of the generators under composition, identity first, then BFS
// discovery order.  Deterministic for a fixed generator list.
std::vector<Perm> bfs_closure(std::uint32_t degree, const std::vector<Perm>& gens,
                              std::uint32_t max_order) {
    Perm id(degree);
    for (std::uint32_t p = 0; p < degree; ++p) id[p] = static_cast<std::uint16_t>(p);

    std::vector<Perm> elems{id};
    std::map<Perm, std::uint32_t> index{{id, 0}};
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t cur = queue.front();
        queue.pop_front();
        for (const Perm& gen : gens) {
            Perm next = compose(elems[cur], gen);
            auto [it, fresh] = index.try_emplace(next, static_cast<std::uint32_t>(elems.size()));
            if (fresh) {
                elems.push_back(std::move(next));
                if (elems.size() > max_order)
                    throw std::invalid_argument("group order exceeds supported limit " +
                                                std::to_string(max_order));
                queue.push_back(it->second);
            }
        }
    }
    return elems;
}

Group group_from_perms(std::vector<Perm> elems, std::string label) {
    std::map<Perm, std::uint32_t> index;
    for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

    const std::uint32_t n = static_cast<std::uint32_t>(elems.size());
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            auto it = index.find(compose(elems[i], elems[j]));
            if (it == index.end()) throw std::logic_error("permutation set is not closed");
            table[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(it->second);
        }
    return make_group_from_table(std::move(table), n, std::move(label), std::move(elems));
}

Perm cycle_perm(std::uint32_t degree, const std::vector<std::uint16_t>& cycle) {
    Perm p(degree);
    for (std::uint32_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint16_t>(i);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        p[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return p;
}

Group build_cyclic(std::uint64_t n, const std::string& label) {
    if (n < 1) throw std::invalid_argument("Z:n requires n >= 1");
    if (n > Group::kMaxOrder)
        throw std::invalid_argument("group order exceeds supported limit");
    const std::uint32_t m = static_cast<std::uint32_t>(n);
    std::vector<std::uint16_t> table(static_cast<std::size_t>(m) * m);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            table[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint16_t>((i + j) % m);
    return make_group_from_table(std::move(table), m, label);
}

// Dihedral and generalized quaternion share the presentation
//   (r^a s^e)(r^b s^f),  s r s^-1 = r^-1,  s^2 = r^twist
// with twist = 0 for dihedral and twist = |r|/2 for quaternion.
Group build_rotation_reflection(std::uint32_t half, std::uint32_t twist, const std::string& label) {
    const std::uint32_t n = 2 * half;
    if (n > Group::kMaxOrder) throw std::invalid_argument("group order exceeds supported limit");
    auto enc = [&](std::uint32_t e, std::uint32_t a) { return e * half + a; };
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (std::uint32_t e1 = 0; e1 < 2; ++e1)
        for (std::uint32_t a1 = 0; a1 < half; ++a1)
            for (std::uint32_t e2 = 0; e2 < 2; ++e2)
                for (std::uint32_t a2 = 0; a2 < half; ++a2) {
                    std::uint32_t e = e1 ^ e2;
                    std::uint32_t a = e1 == 0 ? (a1 + a2) % half : (a1 + half - a2) % half;
                    if (e1 == 1 && e2 == 1) a = (a + twist) % half;
                    table[static_cast<std::size_t>(enc(e1, a1)) * n + enc(e2, a2)] =
                        static_cast<std::uint16_t>(enc(e, a));
                }
    return make_group_from_table(std::move(table), n, label);
}

Group build_dihedral(std::uint64_t m, const std::string& label) {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("D:m requires m even and >= 4");
    if (m > Group::kMaxOrder) throw std::invalid_argument("group order exceeds supported limit");
    return build_rotation_reflection(static_cast<std::uint32_t>(m / 2), 0, label);
}

Group build_quaternion(std::uint64_t m, const std::string& label) {
    if (m < 8 || (m & (m - 1)) != 0)
        throw std::invalid_argument("Q:m requires m a power of two and >= 8");
    if (m > Group::kMaxOrder) throw std::invalid_argument("group order exceeds supported limit");
    const std::uint32_t half = static_cast<std::uint32_t>(m / 2);
    return build_rotation_reflection(half, half / 2, label);
}

Group build_elementary_abelian(std::uint64_t q, const std::string& label) {
    auto pk = prime_power_decompose(q);
    if (!pk) throw std::invalid_argument("EA:q requires q a prime power");
    if (q > Group::kMaxOrder) throw std::invalid_argument("group order exceeds supported limit");
    const auto [p, k] = *pk;
    const std::uint32_t n = static_cast<std::uint32_t>(q);
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint32_t a = i, b = j, s = 0, place = 1;
            for (unsigned d = 0; d < k; ++d) {
                s += ((a + b) % p) * place;
                a /= p;
                b /= p;
                place *= static_cast<std::uint32_t>(p);
            }
            table[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(s);
        }
    return make_group_from_table(std::move(table), n, label);
}

Group build_symmetric(std::uint64_t n, const std::string& label) {
    if (n < 1) throw std::invalid_argument("S:n requires n >= 1");
    if (n == 1) return build_cyclic(1, label);
    const std::uint32_t deg = static_cast<std::uint32_t>(n);
    std::vector<Perm> gens;
    gens.push_back(cycle_perm(deg, {0, 1}));
    if (n > 2) {
        std::vector<std::uint16_t> cyc(deg);
        for (std::uint32_t i = 0; i < deg; ++i) cyc[i] = static_cast<std::uint16_t>(i);
        gens.push_back(cycle_perm(deg, cyc));
    }
    return group_from_perms(bfs_closure(deg, gens, Group::kMaxOrder), label);
}

Group build_alternating(std::uint64_t n, const std::string& label) {
    if (n < 1) throw std::invalid_argument("A:n requires n >= 1");
    if (n <= 2) return build_cyclic(1, label);
    const std::uint32_t deg = static_cast<std::uint32_t>(n);
    std::vector<Perm> gens;
    gens.push_back(cycle_perm(deg, {0, 1, 2}));
    if (n > 3) {
        std::vector<std::uint16_t> cyc;
        if (n % 2 == 1) {
            for (std::uint32_t i = 0; i < deg; ++i) cyc.push_back(static_cast<std::uint16_t>(i));
        } else {
            for (std::uint32_t i = 1; i < deg; ++i) cyc.push_back(static_cast<std::uint16_t>(i));
        }
        gens.push_back(cycle_perm(deg, cyc));
    }
    return group_from_perms(bfs_closure(deg, gens, Group::kMaxOrder), label);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// PSL(2,p) acting on the projective line {0..p-1, infinity}, generated by
// the translation x -> x+1 and the inversion x -> -1/x.  The point at
// infinity is the last index.
Group build_psl2(std::uint64_t p, const std::string& label) {
    if (p < 5 || !is_prime_u64(p)) throw std::invalid_argument("PSL2:p requires p prime and >= 5");
    const std::uint64_t expected = p * (p * p - 1) / 2;
    if (expected > Group::kMaxOrder)
        throw std::invalid_argument("group order exceeds supported limit");
    const std::uint32_t deg = static_cast<std::uint32_t>(p + 1);
    const std::uint32_t inf = deg - 1;

    Perm t(deg), s(deg);
    for (std::uint64_t x = 0; x < p; ++x) t[x] = static_cast<std::uint16_t>((x + 1) % p);
    t[inf] = static_cast<std::uint16_t>(inf);
    s[0] = static_cast<std::uint16_t>(inf);
    s[inf] = 0;
    for (std::uint64_t x = 1; x < p; ++x)
        s[x] = static_cast<std::uint16_t>((p - powmod(x, p - 2, p)) % p);

    auto elems = bfs_closure(deg, {t, s}, Group::kMaxOrder);
    if (elems.size() != expected)
        throw std::logic_error("PSL2 closure produced unexpected order");
    return group_from_perms(std::move(elems), label);
}

Group build_product(const Group& a, const Group& b, const std::string& label) {
    const std::uint64_t n64 = static_cast<std::uint64_t>(a.order()) * b.order();
    if (n64 > Group::kMaxOrder) throw std::invalid_argument("group order exceeds supported limit");
    const std::uint32_t n = static_cast<std::uint32_t>(n64);
    const std::uint32_t nb = b.order();
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    // lexicographic pairing: index = ia*|B| + ib
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint32_t ka = a.mult(i / nb, j / nb);
            std::uint32_t kb = b.mult(i % nb, j % nb);
            table[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(ka * nb + kb);
        }
    return make_group_from_table(std::move(table), n, label);
}

}  // namespace

Group make_group_from_table(std::vector<std::uint16_t> table, std::uint32_t n, std::string label,
                            std::vector<std::vector<std::uint16_t>> perms) {
    if (n > Group::kMaxOrder) throw std::invalid_argument("group order exceeds supported limit");
    validate_table(table, n);
    Group g;
    g.n_ = n;
    g.label_ = std::move(label);
    g.table_ = std::move(table);
    if (!perms.empty()) {
        if (perms.size() != n) throw std::logic_error("permutation backing has wrong size");
        g.perms_ = std::move(perms);
        g.degree_ = static_cast<std::uint32_t>(g.perms_[0].size());
    }
    g.build_caches();
    return g;
}

Group build_group(const GroupSpec& spec) {
    const std::string label = spec.to_string();
    switch (spec.family) {
        case GroupSpec::Family::Cyclic:
            return build_cyclic(spec.param, label);
        case GroupSpec::Family::Dihedral:
            return build_dihedral(spec.param, label);
        case GroupSpec::Family::Quaternion:
            return build_quaternion(spec.param, label);
        case GroupSpec::Family::ElementaryAbelian:
            return build_elementary_abelian(spec.param, label);
        case GroupSpec::Family::Symmetric:
            return build_symmetric(spec.param, label);
        case GroupSpec::Family::Alternating:
            return build_alternating(spec.param, label);
        case GroupSpec::Family::ProjectiveSL2:
            return build_psl2(spec.param, label);
        case GroupSpec::Family::CayleyFile:
            return read_cayley_file(spec.path);
        case GroupSpec::Family::Product: {
            Group acc = build_group(spec.factors[0]);
            for (std::size_t i = 1; i < spec.factors.size(); ++i) {
                Group next = build_group(spec.factors[i]);
                std::string l = i + 1 == spec.factors.size() ? label : std::string("partial");
                acc = build_product(acc, next, l);
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

Group build_group(const std::string& spec_text) { return build_group(parse_group_spec(spec_text)); }

Group read_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open Cayley file: " + path);
    std::uint64_t n = 0;
    if (!(in >> n) || n == 0) throw std::runtime_error("Cayley file: invalid element count");
    if (n > Group::kMaxOrder) throw std::runtime_error("Cayley file: order exceeds supported limit");
    std::vector<std::uint16_t> table;
    table.reserve(n * n);
    for (std::uint64_t k = 0; k < n * n; ++k) {
        std::int64_t v;
        if (!(in >> v)) throw std::runtime_error("Cayley file: truncated or non-numeric table");
        if (v < 0 || static_cast<std::uint64_t>(v) >= n)
            throw std::runtime_error("Cayley file: entry out of range");
        table.push_back(static_cast<std::uint16_t>(v));
    }
    return make_group_from_table(std::move(table), static_cast<std::uint32_t>(n),
                                 "file:" + path);
}

bool is_subgroup(const Group& g, const std::vector<std::uint32_t>& elements) {
    if (elements.empty()) return false;
    std::vector<bool> in(g.order(), false);
    for (std::uint32_t e : elements) {
        if (e >= g.order()) return false;
        in[e] = true;
    }
    if (!in[0]) return false;
    for (std::uint32_t a : elements)
        for (std::uint32_t b : elements)
            if (!in[g.mult(a, b)]) return false;
    return true;
}

Group subgroup_as_group(const Group& g, const std::vector<std::uint32_t>& elements) {
    std::vector<std::uint32_t> sorted(elements);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!is_subgroup(g, sorted)) throw std::invalid_argument("element set is not a subgroup");

    const std::uint32_t m = static_cast<std::uint32_t>(sorted.size());
    std::vector<std::uint32_t> pos(g.order(), 0);
    for (std::uint32_t i = 0; i < m; ++i) pos[sorted[i]] = i;
    std::vector<std::uint16_t> table(static_cast<std::size_t>(m) * m);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            table[static_cast<std::size_t>(i) * m + j] =
                static_cast<std::uint16_t>(pos[g.mult(sorted[i], sorted[j])]);
    return make_group_from_table(std::move(table), m, "sub[" + g.label() + "]");
}

std::map<std::uint32_t, std::uint32_t> order_census(const Group& g) {
    std::map<std::uint32_t, std::uint32_t> census;
    for (std::uint32_t i = 0; i < g.order(); ++i) ++census[g.element_order(i)];
    return census;
}

}  // namespace kappagraph
