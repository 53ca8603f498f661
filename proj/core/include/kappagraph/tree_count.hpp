#pragma once

#include "kappagraph/bigint.hpp"

namespace kappagraph {

class Graph;

enum class DetMethod {
    Auto,          // Bareiss for small reduced dimension, multimodular above
    Bareiss,       // fraction-free elimination over exact integers
    Multimodular,  // word-size prime residues + CRT, Hadamard-bound certified
};

// Number of spanning trees, computed exactly as the determinant of the
// reduced Laplacian (vertex 0 deleted).  Returns 0 for disconnected graphs
// and 1 for the one-vertex graph.  Both methods produce identical integers.
BigCount tree_number(const Graph& g, DetMethod method = DetMethod::Auto);

}  // namespace kappagraph
