#pragma once

#include <vector>

#include "admg/graph.hpp"

namespace admg {

// A path is a sequence of edges joining a sequence of distinct vertices.
// Stored as edge indices into g.all_edges() plus the vertex sequence, which
// fixes the traversal direction of each edge (a pair joined by both a -> b
// and a <-> b yields distinct paths through the same vertices).
struct Path {
    std::vector<int> edges;     // indices into Admg::all_edges()
    std::vector<int> vertices;  // edges.size() + 1 entries

    int length() const { return static_cast<int>(edges.size()); }
};

// True when the i-th interior vertex (vertices[i], 1 <= i < length) has
// arrowheads on both flanking edges.
bool is_collider_on(const Admg& g, const Path& p, int i);

// A path is m-connecting given z when every interior collider is an ancestor
// of z (reflexively) and every interior non-collider is outside z.
bool is_m_connecting(const Admg& g, const Path& p, VertexSet z);

// True when no m-connecting path given z joins x and y.  x, y, z must be
// pairwise disjoint (DisjointnessError); empty x or y is vacuously separated.
// Runs a reachability sweep over (vertex, arrival-mark) states, linear in the
// edge count, and is exact for multi-edges.
bool is_m_separated(const Admg& g, VertexSet x, VertexSet y, VertexSet z);

// Markov blanket of x inside an ancestral set a whose barren part contains x:
// the district of x in a, minus x, plus that district's parents.  Separates x
// from the rest of a.  Throws NotAncestral / NotBarren.
VertexSet markov_blanket(const Admg& g, int x, VertexSet a);

// Smallest b inside t \ s with s m-separated from t \ (b | s) given b, found
// by greedy single-vertex removal.  Greedy shrinking is order-dependent in
// general; the ascending and descending sweeps must agree, otherwise
// NonUniqueBlanket is thrown.  s must be a subset of t.
VertexSet blanket_in_set(const Admg& g, VertexSet s, VertexSet t);

}  // namespace admg
