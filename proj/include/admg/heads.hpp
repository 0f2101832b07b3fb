#pragma once

#include <vector>

#include "admg/graph.hpp"

namespace admg {

// A head with its tail, split into the two parts the tail is built from:
// dis_tail = (district of the head inside its ancestral closure) minus the
// head, pa_tail = parents of that district.  The two parts may overlap.
struct HeadTail {
    VertexSet head;
    VertexSet dis_tail;
    VertexSet pa_tail;

    VertexSet tail() const { return dis_tail | pa_tail; }
    bool operator==(const HeadTail&) const = default;
};

// h is a head iff it is nonempty, equals the barren part of its ancestral
// closure, and lies inside a single district of that closure.  Throws
// EmptyHead on the empty set.
bool is_head(const Admg& g, VertexSet h);

// Tail of a head (NotAHead if h is not one).
HeadTail tail_of(const Admg& g, VertexSet h);

// All heads of the graph with their tails, ordered by (head size, head bit
// pattern).  Scans the ancestral sets: every head is the barren part of
// exactly one ancestral set, so this enumeration is complete and
// duplicate-free.  Throws BoundExceeded if n > bound.
std::vector<HeadTail> all_heads(const Admg& g, int bound = 20);

}  // namespace admg
