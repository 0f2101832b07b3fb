#include "admg/partition.hpp"

#include <algorithm>
#include <string>

#include "admg/districts.hpp"
#include "admg/errors.hpp"

namespace admg {

std::vector<VertexSet> district_heads(const Admg& g, VertexSet within) {
    // One head per district: the vertices of the district with no proper
    // descendant inside it.  (Equivalently barren of the district's ancestral
    // closure: a descendant z outside the district that is an ancestor of a
    // district vertex w puts w itself among the in-district descendants.)
    std::vector<VertexSet> out;
    for (const VertexSet& d : districts_of(g, within).blocks) {
        out.push_back(g.barren(d));
    }
    return out;
}

VertexSet strip_heads(const Admg& g, VertexSet within) {
    VertexSet rest = within;
    for (const VertexSet& h : district_heads(g, within)) rest -= h;
    return rest;
}

Decomposition decompose(const Admg& g, VertexSet within) {
    Decomposition out;
    out.source = within;
    VertexSet rest = within;
    for (int depth = 0; !rest.empty(); ++depth) {
        VertexSet stripped = rest;
        for (const VertexSet& h : district_heads(g, rest)) {
            out.blocks.push_back({h, depth});
            stripped -= h;
        }
        // Every nonempty set sheds at least its barren vertices each round.
        if (stripped == rest) {
            throw Error("head stripping failed to shrink a nonempty set");
        }
        rest = stripped;
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const DecompositionBlock& a, const DecompositionBlock& b) {
                  return a.depth != b.depth ? a.depth < b.depth : a.head.min() < b.head.min();
              });
    return out;
}

DecompositionBlock head_of(const Admg& g, VertexSet within, int x) {
    if (!within.contains(x)) {
        throw VertexNotInSet("vertex " + g.label(x) + " is not in the decomposed set");
    }
    for (const DecompositionBlock& b : decompose(g, within).blocks) {
        if (b.head.contains(x)) return b;
    }
    throw Error("decomposition did not cover a member vertex");  // unreachable
}

std::vector<int> depth_consistent_order(const Admg& g, VertexSet a, int x) {
    if (a.contains(x)) {
        throw Error("vertex " + g.label(x) + " must lie outside the given set");
    }
    VertexSet ax = a | VertexSet::single(x);
    if (!g.is_ancestral(a) || !g.is_ancestral(ax)) {
        throw NotAncestral("depth_consistent_order requires both sets to be ancestral");
    }

    int n = g.size();
    std::vector<int> dep_a(n, -1), dep_ax(n, -1);
    for (const DecompositionBlock& b : decompose(g, a).blocks) {
        for (int v : b.head) dep_a[v] = b.depth;
    }
    for (const DecompositionBlock& b : decompose(g, ax).blocks) {
        for (int v : b.head) dep_ax[v] = b.depth;
    }
    dep_a[x] = dep_ax[x];  // x has no depth in a; its key counts the other twice

    // The two depths of a vertex differ by at most one, so whenever one depth
    // ordering separates b and c strictly, the sum does too.
    std::vector<int> order = ax.to_vector();
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        int ku = dep_a[u] + dep_ax[u], kv = dep_a[v] + dep_ax[v];
        return ku != kv ? ku < kv : u < v;
    });

    for (size_t i = 0; i < order.size(); ++i) {
        for (size_t j = i + 1; j < order.size(); ++j) {
            int u = order[i], v = order[j];
            bool bad_a = a.contains(u) && a.contains(v) && dep_a[v] < dep_a[u];
            bool bad_ax = dep_ax[v] < dep_ax[u];
            if (bad_a || bad_ax) {
                throw NoConsistentOrder("no order satisfies both depth orderings for " +
                                        g.label(u) + " and " + g.label(v));
            }
        }
    }
    return order;
}

}  // namespace admg
