#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace kappagraph {

class Group;

// Finite simple undirected graph with dense bit-packed adjacency.
// Immutable in practice once built; queries are pure.
class Graph {
public:
    explicit Graph(std::uint32_t n);

    std::uint32_t vertex_count() const { return n_; }

    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1;
    }
    void add_edge(std::uint32_t u, std::uint32_t v);

    std::uint32_t degree(std::uint32_t u) const;
    std::uint64_t edge_count() const;

    bool connected() const;
    std::uint32_t component_count() const;
    // vertex -> component id (components numbered by smallest contained vertex)
    std::vector<std::uint32_t> component_ids() const;

    // Optional mapping from vertex to underlying group element index.
    const std::vector<std::uint32_t>& vertex_labels() const { return labels_; }
    void set_vertex_labels(std::vector<std::uint32_t> labels);

    const std::uint64_t* row(std::uint32_t u) const {
        return bits_.data() + static_cast<std::size_t>(u) * words_;
    }
    std::uint32_t words_per_row() const { return words_; }

    // Dump format: first line n, then one row of '0'/'1' characters per vertex.
    void write_adjacency(std::ostream& out) const;

    // Same vertex count and same edge set (labels are ignored).
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    std::uint32_t n_;
    std::uint32_t words_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> labels_;
};

enum class VertexSet { All, NonIdentity };

// Power graph on the chosen vertices: edge iff one endpoint is a power of
// the other.  Vertices keep the group's element order; explicit subsets are
// deduplicated and sorted.
Graph power_graph(const Group& g, VertexSet subset = VertexSet::All);
Graph power_graph(const Group& g, const std::vector<std::uint32_t>& subset);

// Commuting graph on the chosen vertices: edge iff the elements commute.
Graph commuting_graph(const Group& g, VertexSet subset = VertexSet::All);
Graph commuting_graph(const Group& g, const std::vector<std::uint32_t>& subset);

inline std::uint64_t edge_count(const Graph& g) { return g.edge_count(); }

}  // namespace kappagraph
