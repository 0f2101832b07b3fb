#include "admg/mseparation.hpp"

#include <string>

#include "admg/districts.hpp"
#include "admg/errors.hpp"

namespace admg {

bool is_collider_on(const Admg& g, const Path& p, int i) {
    const Edge& prev = g.all_edges()[p.edges[i - 1]];
    const Edge& next = g.all_edges()[p.edges[i]];
    int v = p.vertices[i];
    return prev.arrowhead_at(v) && next.arrowhead_at(v);
}

bool is_m_connecting(const Admg& g, const Path& p, VertexSet z) {
    VertexSet an_z = g.ancestors(z);
    for (int i = 1; i < p.length(); ++i) {
        int v = p.vertices[i];
        if (is_collider_on(g, p, i)) {
            if (!an_z.contains(v)) return false;
        } else {
            if (z.contains(v)) return false;
        }
    }
    return true;
}

bool is_m_separated(const Admg& g, VertexSet x, VertexSet y, VertexSet z) {
    if (x.intersects(y) || x.intersects(z) || y.intersects(z)) {
        throw DisjointnessError("m-separation query requires pairwise disjoint sets");
    }
    if (x.empty() || y.empty()) return true;

    // Reachability over states (vertex, mark of the edge it was entered by).
    // A walk may leave v along an edge with a tail at v when v is not in z
    // (v acts as a non-collider), and along an edge with an arrowhead at v
    // when either it arrived with an arrowhead and v is an ancestor of z
    // (collider) or it arrived with a tail and v is not in z.  Walk
    // reachability coincides with path reachability for m-connection.
    VertexSet an_z = g.ancestors(z);
    VertexSet reached_arrow, reached_tail;
    // Source vertices have no arrival constraint: leave along any edge.
    VertexSet depart_tail_edges = x;   // may leave along tail-at-v edges
    VertexSet depart_arrow_edges = x;  // may leave along arrowhead-at-v edges

    while (true) {
        VertexSet new_arrow, new_tail;
        for (int v : depart_arrow_edges) {
            new_arrow |= g.spouses(v);  // v <-> w arrives at w with an arrowhead
            new_tail |= g.parents(v);   // w -> v traversed v-to-w arrives with a tail
        }
        for (int v : depart_tail_edges) {
            new_arrow |= g.children(v);  // v -> w arrives at w with an arrowhead
        }
        new_arrow -= reached_arrow;
        new_tail -= reached_tail;
        if (new_arrow.empty() && new_tail.empty()) break;
        if (new_arrow.intersects(y) || new_tail.intersects(y)) return false;
        reached_arrow |= new_arrow;
        reached_tail |= new_tail;
        depart_arrow_edges = (reached_arrow & an_z) | (reached_tail - z);
        depart_tail_edges = (reached_arrow | reached_tail) - z;
    }
    return true;
}

VertexSet markov_blanket(const Admg& g, int x, VertexSet a) {
    if (!g.is_ancestral(a)) {
        throw NotAncestral("markov_blanket requires an ancestral set");
    }
    if (!g.barren(a).contains(x)) {
        throw NotBarren("vertex " + g.label(x) + " is not barren in the given set");
    }
    VertexSet d = district(g, a, x);
    return (d - VertexSet::single(x)) | g.parents(d);
}

namespace {

bool separates(const Admg& g, VertexSet s, VertexSet t, VertexSet b) {
    return is_m_separated(g, s, t - (b | s), b);
}

VertexSet shrink(const Admg& g, VertexSet s, VertexSet t, bool ascending) {
    VertexSet b = t - s;
    std::vector<int> order = b.to_vector();
    if (!ascending) {
        std::vector<int> rev(order.rbegin(), order.rend());
        order = rev;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : order) {
            if (!b.contains(v)) continue;
            VertexSet candidate = b - VertexSet::single(v);
            if (separates(g, s, t, candidate)) {
                b = candidate;
                changed = true;
            }
        }
    }
    return b;
}

}  // namespace

VertexSet blanket_in_set(const Admg& g, VertexSet s, VertexSet t) {
    if (!s.is_subset_of(t)) {
        throw Error("blanket_in_set requires s to be a subset of t");
    }
    VertexSet up = shrink(g, s, t, true);
    VertexSet down = shrink(g, s, t, false);
    if (up != down) {
        throw NonUniqueBlanket("greedy blanket shrinking is order-dependent for this query");
    }
    return up;
}

}  // namespace admg
