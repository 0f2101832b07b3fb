#pragma once

#include <string>
#include <utility>
#include <vector>

#include "admg/vertex_set.hpp"

namespace admg {

enum class EdgeKind { directed, bidirected };

// One edge of the graph.  For a directed edge, a -> b.  For a bidirected
// edge, a <-> b with a < b.  Edges are kept individually because separation
// queries walk paths as *edge* sequences: a pair joined by both a -> b and
// a <-> b contributes two distinct edges.
struct Edge {
    int a = 0;
    int b = 0;
    EdgeKind kind = EdgeKind::directed;

    int other(int v) const { return v == a ? b : a; }
    // True when the edge has an arrowhead at v (v must be an endpoint).
    bool arrowhead_at(int v) const { return kind == EdgeKind::bidirected || v == b; }
    bool operator==(const Edge&) const = default;
};

struct InducedSubgraph;

// An acyclic directed mixed graph: directed and bidirected edges over
// vertices 0..n-1, with no self-loops, no duplicate edges, no pair carrying
// both x -> y and y -> x, and no directed cycle.  A pair may carry a directed
// and a bidirected edge at once.  Immutable after construction; all vertex
// relations below are precomputed bit masks, so queries are O(1) or O(|S|).
class Admg {
public:
    // Throws SelfLoopError, DuplicateEdgeError, OpposingDirectedError,
    // CycleError, BoundExceeded (n > 31).  Labels default to x1..xn.
    Admg(int n,
         std::vector<std::pair<int, int>> directed,
         std::vector<std::pair<int, int>> bidirected,
         std::vector<std::string> labels = {});

    int size() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }

    // Canonically sorted edge lists: directed by (tail, head), bidirected by
    // (min, max); all_edges() lists directed first.
    const std::vector<std::pair<int, int>>& directed_edges() const { return directed_; }
    const std::vector<std::pair<int, int>>& bidirected_edges() const { return bidirected_; }
    const std::vector<Edge>& all_edges() const { return edges_; }
    // Indices into all_edges() of the edges incident to v.
    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

    bool has_directed(int a, int b) const;
    bool has_bidirected(int a, int b) const;

    // One-step relations.
    VertexSet parents(int v) const { return pa_[v]; }
    VertexSet children(int v) const { return ch_[v]; }
    VertexSet spouses(int v) const { return sp_[v]; }
    VertexSet parents(VertexSet s) const;
    VertexSet children(VertexSet s) const;
    VertexSet spouses(VertexSet s) const;

    // Reflexive transitive closures: v is an ancestor and a descendant of
    // itself.
    VertexSet ancestors(int v) const { return an_[v]; }
    VertexSet descendants(int v) const { return de_[v]; }
    VertexSet ancestors(VertexSet s) const;
    VertexSet descendants(VertexSet s) const;

    bool is_ancestral(VertexSet s) const { return ancestors(s) == s; }
    // Smallest ancestral superset of s (= ancestors(s)).
    VertexSet ancestral_closure(VertexSet s) const { return ancestors(s); }

    // Vertices of s with no proper descendant inside s.
    VertexSet barren(VertexSet s) const;

    // Every ancestral subset of the vertex set, the empty set included,
    // ordered by (size, bit pattern).  Throws BoundExceeded if n > bound.
    std::vector<VertexSet> ancestral_sets(int bound = 20) const;

    // A topological order of the directed part (ancestors first).
    const std::vector<int>& topological_order() const { return topo_; }

    // Subgraph induced by keep: both edge sets restricted to keep, vertices
    // relabeled to 0..|keep|-1 in ascending original id order, labels kept.
    InducedSubgraph induced_subgraph(VertexSet keep) const;

private:
    int n_;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> directed_;
    std::vector<std::pair<int, int>> bidirected_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<VertexSet> pa_, ch_, sp_, an_, de_;
    std::vector<int> topo_;
};

struct InducedSubgraph {
    Admg graph;
    // original_ids[new_id] = id in the parent graph.
    std::vector<int> original_ids;
};

}  // namespace admg
