#include "starinv/dot.hpp"

#include <sstream>

namespace starinv {

std::vector<std::string> vertex_names(Index m, Index n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(m + n + 2));
    names.emplace_back("u");
    for (Index i = 1; i <= m; ++i) names.push_back("u" + std::to_string(i));
    names.emplace_back("v");
    for (Index j = 1; j <= n; ++j) names.push_back("v" + std::to_string(j));
    return names;
}

std::string render_dot(const std::vector<DotEdge>& edges, std::string_view graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    for (const auto& e : edges) os << "  " << e.from << " -> " << e.to << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace starinv
