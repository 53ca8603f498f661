#include "kappagraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

#include "kappagraph/group.hpp"

namespace kappagraph {

Graph::Graph(std::uint32_t n) : n_(n), words_((n + 63) / 64) {
    if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

std::uint32_t Graph::degree(std::uint32_t u) const {
    if (u >= n_) throw std::out_of_range("vertex index out of range");
    std::uint32_t d = 0;
    const std::uint64_t* r = row(u);
    for (std::uint32_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::uint64_t Graph::edge_count() const {
    std::uint64_t twice = 0;
    for (std::uint32_t u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
}

std::vector<std::uint32_t> Graph::component_ids() const {
    std::vector<std::uint32_t> comp(n_, n_);
    std::vector<std::uint32_t> stack;
    std::uint32_t next_id = 0;
    for (std::uint32_t s = 0; s < n_; ++s) {
        if (comp[s] != n_) continue;
        comp[s] = next_id;
        stack.push_back(s);
        while (!stack.empty()) {
            std::uint32_t u = stack.back();
            stack.pop_back();
            const std::uint64_t* r = row(u);
            for (std::uint32_t w = 0; w < words_; ++w) {
                std::uint64_t word = r[w];
                while (word) {
                    std::uint32_t v = (w << 6) + std::countr_zero(word);
                    word &= word - 1;
                    if (comp[v] == n_) {
                        comp[v] = next_id;
                        stack.push_back(v);
                    }
                }
            }
        }
        ++next_id;
    }
    return comp;
}

std::uint32_t Graph::component_count() const {
    auto comp = component_ids();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool Graph::connected() const { return component_count() <= 1; }

void Graph::set_vertex_labels(std::vector<std::uint32_t> labels) {
    if (!labels.empty() && labels.size() != n_)
        throw std::invalid_argument("label count must match vertex count");
    labels_ = std::move(labels);
}

void Graph::write_adjacency(std::ostream& out) const {
    out << n_ << '\n';
    for (std::uint32_t u = 0; u < n_; ++u) {
        for (std::uint32_t v = 0; v < n_; ++v) out << (adjacent(u, v) ? '1' : '0');
        out << '\n';
    }
}

namespace {

std::vector<std::uint32_t> resolve_subset(const Group& g, VertexSet which) {
    std::vector<std::uint32_t> subset;
    const std::uint32_t start = which == VertexSet::NonIdentity ? 1u : 0u;
    if (g.order() <= start) throw std::invalid_argument("vertex subset is empty");
    subset.reserve(g.order() - start);
    for (std::uint32_t i = start; i < g.order(); ++i) subset.push_back(i);
    return subset;
}

std::vector<std::uint32_t> normalize_subset(const Group& g, std::vector<std::uint32_t> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) throw std::invalid_argument("vertex subset is empty");
    if (subset.back() >= g.order()) throw std::out_of_range("subset element out of range");
    return subset;
}

template <typename Related>
Graph build_relation_graph(std::vector<std::uint32_t> subset, Related related) {
    Graph graph(static_cast<std::uint32_t>(subset.size()));
    for (std::uint32_t a = 0; a < subset.size(); ++a)
        for (std::uint32_t b = a + 1; b < subset.size(); ++b)
            if (related(subset[a], subset[b])) graph.add_edge(a, b);
    graph.set_vertex_labels(std::move(subset));
    return graph;
}

}  // namespace

Graph power_graph(const Group& g, VertexSet subset) {
    return power_graph(g, resolve_subset(g, subset));
}

Graph power_graph(const Group& g, const std::vector<std::uint32_t>& subset) {
    return build_relation_graph(normalize_subset(g, subset),
                                [&](std::uint32_t i, std::uint32_t j) {
                                    return g.is_power_related(i, j);
                                });
}

Graph commuting_graph(const Group& g, VertexSet subset) {
    return commuting_graph(g, resolve_subset(g, subset));
}

Graph commuting_graph(const Group& g, const std::vector<std::uint32_t>& subset) {
    return build_relation_graph(normalize_subset(g, subset),
                                [&](std::uint32_t i, std::uint32_t j) {
                                    return g.commutes(i, j);
                                });
}

}  // namespace kappagraph
