#include "tknot/diagram.hpp"

#include <algorithm>

namespace tknot {

DiagramGraph diagram_graph(const BraidWord& b) {
    const int n = b.strands();
    const int c = b.length();
    if (c == 0) throw parse_error("diagram graph needs at least one crossing");
    auto counts = generator_counts(b);
    for (int g = 1; g < n; ++g)
        if (counts[g - 1] == 0)
            throw parse_error("disconnected diagram: generator " +
                              std::to_string(g) + " never occurs");

    DiagramGraph graph;
    graph.vertices = c;
    // Walk each strand position top to bottom; consecutive crossings met by
    // that position bound one arc each, plus the closure arc wrapping from
    // the last crossing back to the first.
    for (int pos = 1; pos <= n; ++pos) {
        std::vector<int> met;
        for (int j = 0; j < c; ++j) {
            int l = b.letters()[j];
            if (l == pos || l + 1 == pos) met.push_back(j);
        }
        TKNOT_CHECK(!met.empty());
        for (size_t i = 0; i < met.size(); ++i)
            graph.edges.emplace_back(met[i], met[(i + 1) % met.size()]);
    }
    TKNOT_CHECK(static_cast<int>(graph.edges.size()) == 2 * graph.vertices);
    return graph;
}

namespace {

// Number of connected pieces of the curve after deleting the point v:
// components of the graph minus v (counting isolated vertices), plus one
// free arc per loop at v.
int pieces_without(const DiagramGraph& g, int v) {
    std::vector<std::vector<int>> adj(g.vertices);
    int loops_at_v = 0;
    for (auto [a, b] : g.edges) {
        if (a == v && b == v) {
            ++loops_at_v;
            continue;
        }
        if (a == v || b == v) continue;  // dangling arc, stays attached to the other end
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(g.vertices, 0);
    seen[v] = 1;
    int components = 0;
    for (int s = 0; s < g.vertices; ++s) {
        if (seen[s]) continue;
        ++components;
        std::vector<int> stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return components + loops_at_v;
}

}  // namespace

bool is_reducible_diagram(const BraidWord& b) {
    DiagramGraph g = diagram_graph(b);
    for (int v = 0; v < g.vertices; ++v)
        if (pieces_without(g, v) >= 2) return true;
    return false;
}

}  // namespace tknot
