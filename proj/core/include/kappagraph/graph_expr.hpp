#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace kappagraph {

class Graph;

// Symbolic graph built from complete graphs and cocliques with joins,
// disjoint unions and k-fold repetition.  This is exactly the class whose
// Laplacian spectra compose by closed rules, so spectra of these expressions
// never require an eigensolver.  Immutable; copies share structure.
class GraphExpr {
public:
    enum class Kind { Complete, Coclique, Join, Union, Repeat };

    static GraphExpr complete(std::uint64_t n);
    static GraphExpr coclique(std::uint64_t n);
    static GraphExpr join(GraphExpr a, GraphExpr b);
    static GraphExpr disjoint_union(GraphExpr a, GraphExpr b);
    static GraphExpr repeat(std::uint64_t count, GraphExpr body);

    Kind kind() const;
    std::uint64_t leaf_size() const;     // Complete/Coclique
    std::uint64_t repeat_count() const;  // Repeat
    GraphExpr left() const;              // Join/Union left, Repeat body
    GraphExpr right() const;             // Join/Union right

    std::uint64_t vertex_count() const;

    // Text form in the CLI grammar: K(n), E(n), +, *, k x e.
    std::string to_string() const;

private:
    struct Node;
    explicit GraphExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// CLI grammar, whitespace-insensitive:
//   union  := join ('+' join)*
//   join   := rep ('*' rep)*
//   rep    := INT 'x' rep | atom
//   atom   := 'K' '(' INT ')' | 'E' '(' INT ')' | '(' union ')'
GraphExpr parse_graph_expr(const std::string& text);

// Materializes the expression as a concrete dense graph.  Expressions with
// at least max_vertices vertices are refused (spectra have no such limit).
Graph realize(const GraphExpr& expr, std::uint64_t max_vertices = 100000);

}  // namespace kappagraph
