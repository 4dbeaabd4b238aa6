// Graphviz export of the weighted double star digraph.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "starinv/doublestar.hpp"

namespace starinv {

struct DotEdge {
    std::string from;
    std::string to;
    std::string label;
};

/// u, u1..um, v, v1..vn in canonical matrix order.
std::vector<std::string> vertex_names(Index m, Index n);

std::string render_dot(const std::vector<DotEdge>& edges, std::string_view graph_name = "double_star");

/// One edge i -> j per nonzero entry (i, j) of the canonical matrix, row-major.
template <typename S>
std::vector<DotEdge> dot_edges(const DoubleStarSpec<S>& spec) {
    const Matrix<S> M = build(spec);
    const auto names = vertex_names(spec.m(), spec.n());
    std::vector<DotEdge> edges;
    for (Index i = 0; i < M.rows(); ++i)
        for (Index j = 0; j < M.cols(); ++j)
            if (!is_zero(M(i, j)))
                edges.push_back({names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)], to_string(M(i, j))});
    return edges;
}

template <typename S>
std::string to_dot(const DoubleStarSpec<S>& spec) {
    return render_dot(dot_edges(spec));
}

}  // namespace starinv
