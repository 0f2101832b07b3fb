#pragma once

#include <vector>

#include "admg/graph.hpp"

namespace admg {

// Heads at the surface of a set: for each district of within, the barren part
// of that district.  Ordered like districts_of (by the district's minimum
// vertex id).  Every returned set is a head of the graph.
std::vector<VertexSet> district_heads(const Admg& g, VertexSet within);

// within minus the union of district_heads(g, within).
VertexSet strip_heads(const Admg& g, VertexSet within);

struct DecompositionBlock {
    VertexSet head;
    // Number of stripping rounds before this head surfaced.
    int depth = 0;
    bool operator==(const DecompositionBlock&) const = default;
};

struct Decomposition {
    VertexSet source;
    // Partition of source into heads, ordered by (depth, min vertex id).
    std::vector<DecompositionBlock> blocks;
};

// Recursive head partition of any subset: peel district_heads, recurse on the
// stripped remainder, tagging each head with its stripping depth.  Terminates
// in at most |within| rounds.
Decomposition decompose(const Admg& g, VertexSet within);

// The unique block of decompose(g, within) containing x.
// Throws VertexNotInSet when x is outside within.
DecompositionBlock head_of(const Admg& g, VertexSet within, int x);

// A total order on a | {x} (ancestral a, x outside a with a | {x} ancestral)
// consistent with the head depths of both a and a | {x}: w precedes u
// whenever w's depth is smaller in either decomposition.  Returned ascending
// (earliest first).
// Sorting by the sum of the two depths always satisfies both (the two depths
// of a vertex differ by at most one between a and a | {x}); the result is
// re-verified and NoConsistentOrder is thrown if a violation survives.
std::vector<int> depth_consistent_order(const Admg& g, VertexSet a, int x);

}  // namespace admg
