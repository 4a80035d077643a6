#pragma once

#include "tknot/braid.hpp"

namespace tknot {

// The 4-valent projection graph of a closed-braid diagram: one vertex per
// crossing, one edge per arc between consecutive crossings along the closure
// (including wrap-around arcs). Edges incident to a single crossing twice
// are stored as loops.
struct DiagramGraph {
    int vertices = 0;
    // Undirected edges as vertex pairs; loops have first == second.
    std::vector<std::pair<int, int>> edges;
};

// Builds the projection graph of the closure of b. Requires at least one
// crossing and every strand position met by some crossing (i.e. every
// generator occurs at least once); otherwise throws parse_error.
DiagramGraph diagram_graph(const BraidWord& b);

// True iff the projection curve has a cut point: some crossing whose removal
// (as a point of the curve) disconnects it. Loops at a crossing become free
// arcs when the crossing is deleted, so a single-crossing diagram is
// reducible. Requires the diagram to be connected (throws parse_error when a
// generator is absent).
bool is_reducible_diagram(const BraidWord& b);

}  // namespace tknot
