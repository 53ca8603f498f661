#include "kappagraph/graph_expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "kappagraph/graph.hpp"

namespace kappagraph {

struct GraphExpr::Node {
    Kind kind;
    std::uint64_t n = 0;  // leaf size or repeat count
    std::shared_ptr<const Node> left, right;
    std::uint64_t vertices = 0;
};

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw std::overflow_error("graph expression vertex count overflow");
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("graph expression vertex count overflow");
    return static_cast<std::uint64_t>(p);
}

}  // namespace

GraphExpr GraphExpr::complete(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("K(n) requires n >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Complete;
    node->n = n;
    node->vertices = n;
    return GraphExpr(std::move(node));
}

GraphExpr GraphExpr::coclique(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("E(n) requires n >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Coclique;
    node->n = n;
    node->vertices = n;
    return GraphExpr(std::move(node));
}

GraphExpr GraphExpr::join(GraphExpr a, GraphExpr b) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Join;
    node->vertices = checked_add(a.vertex_count(), b.vertex_count());
    node->left = std::move(a.node_);
    node->right = std::move(b.node_);
    return GraphExpr(std::move(node));
}

GraphExpr GraphExpr::disjoint_union(GraphExpr a, GraphExpr b) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Union;
    node->vertices = checked_add(a.vertex_count(), b.vertex_count());
    node->left = std::move(a.node_);
    node->right = std::move(b.node_);
    return GraphExpr(std::move(node));
}

GraphExpr GraphExpr::repeat(std::uint64_t count, GraphExpr body) {
    if (count < 1) throw std::invalid_argument("repeat count must be >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Repeat;
    node->n = count;
    node->vertices = checked_mul(count, body.vertex_count());
    node->left = std::move(body.node_);
    return GraphExpr(std::move(node));
}

GraphExpr::Kind GraphExpr::kind() const { return node_->kind; }

std::uint64_t GraphExpr::leaf_size() const {
    if (node_->kind != Kind::Complete && node_->kind != Kind::Coclique)
        throw std::logic_error("leaf_size on a non-leaf expression");
    return node_->n;
}

std::uint64_t GraphExpr::repeat_count() const {
    if (node_->kind != Kind::Repeat) throw std::logic_error("repeat_count on a non-repeat expression");
    return node_->n;
}

GraphExpr GraphExpr::left() const {
    if (!node_->left) throw std::logic_error("expression has no left child");
    return GraphExpr(node_->left);
}

GraphExpr GraphExpr::right() const {
    if (!node_->right) throw std::logic_error("expression has no right child");
    return GraphExpr(node_->right);
}

std::uint64_t GraphExpr::vertex_count() const { return node_->vertices; }

std::string GraphExpr::to_string() const {
    switch (node_->kind) {
        case Kind::Complete:
            return "K(" + std::to_string(node_->n) + ")";
        case Kind::Coclique:
            return "E(" + std::to_string(node_->n) + ")";
        case Kind::Join:
            return "(" + GraphExpr(node_->left).to_string() + " * " +
                   GraphExpr(node_->right).to_string() + ")";
        case Kind::Union:
            return "(" + GraphExpr(node_->left).to_string() + " + " +
                   GraphExpr(node_->right).to_string() + ")";
        case Kind::Repeat:
            return std::to_string(node_->n) + " x " + GraphExpr(node_->left).to_string();
    }
    return {};
}

// --------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("graph expression: " + what + " at position " +
                                    std::to_string(pos));
    }

    std::uint64_t number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        std::uint64_t value = 0;
        auto [p, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc{} || p != text.data() + pos) fail("bad number");
        return value;
    }

    GraphExpr parse_union() {
        GraphExpr e = parse_join();
        while (true) {
            skip_ws();
            if (!eat('+')) return e;
            e = GraphExpr::disjoint_union(std::move(e), parse_join());
        }
    }

    GraphExpr parse_join() {
        GraphExpr e = parse_rep();
        while (true) {
            skip_ws();
            if (!eat('*')) return e;
            e = GraphExpr::join(std::move(e), parse_rep());
        }
    }

    GraphExpr parse_rep() {
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::uint64_t k = number();
            skip_ws();
            if (pos >= text.size() || text[pos] != 'x') fail("expected 'x' after repeat count");
            ++pos;
            return GraphExpr::repeat(k, parse_rep());
        }
        return parse_atom();
    }

    GraphExpr parse_atom() {
        skip_ws();
        if (eat('(')) {
            GraphExpr e = parse_union();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == 'K' || c == 'E') {
            ++pos;
            if (!eat('(')) fail("expected '('");
            std::uint64_t n = number();
            if (!eat(')')) fail("expected ')'");
            return c == 'K' ? GraphExpr::complete(n) : GraphExpr::coclique(n);
        }
        fail("expected K(n), E(n), '(' or a repeat count");
    }
};

void emit(const GraphExpr& e, std::uint32_t base, Graph& g) {
    switch (e.kind()) {
        case GraphExpr::Kind::Complete: {
            const std::uint32_t n = static_cast<std::uint32_t>(e.leaf_size());
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(base + i, base + j);
            break;
        }
        case GraphExpr::Kind::Coclique:
            break;
        case GraphExpr::Kind::Union: {
            emit(e.left(), base, g);
            emit(e.right(), base + static_cast<std::uint32_t>(e.left().vertex_count()), g);
            break;
        }
        case GraphExpr::Kind::Join: {
            const std::uint32_t la = static_cast<std::uint32_t>(e.left().vertex_count());
            const std::uint32_t lb = static_cast<std::uint32_t>(e.right().vertex_count());
            emit(e.left(), base, g);
            emit(e.right(), base + la, g);
            for (std::uint32_t i = 0; i < la; ++i)
                for (std::uint32_t j = 0; j < lb; ++j) g.add_edge(base + i, base + la + j);
            break;
        }
        case GraphExpr::Kind::Repeat: {
            const std::uint32_t step = static_cast<std::uint32_t>(e.left().vertex_count());
            for (std::uint64_t copy = 0; copy < e.repeat_count(); ++copy)
                emit(e.left(), base + static_cast<std::uint32_t>(copy) * step, g);
            break;
        }
    }
}

}  // namespace

GraphExpr parse_graph_expr(const std::string& text) {
    Parser p{text};
    GraphExpr e = p.parse_union();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

Graph realize(const GraphExpr& expr, std::uint64_t max_vertices) {
    if (expr.vertex_count() >= max_vertices)
        throw std::invalid_argument("realize: expression has " +
                                    std::to_string(expr.vertex_count()) +
                                    " vertices, limit is " + std::to_string(max_vertices));
    Graph g(static_cast<std::uint32_t>(expr.vertex_count()));
    emit(expr, 0, g);
    return g;
}

}  // namespace kappagraph
