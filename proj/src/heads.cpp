#include "admg/heads.hpp"

#include <algorithm>

#include "admg/districts.hpp"
#include "admg/errors.hpp"

namespace admg {

bool is_head(const Admg& g, VertexSet h) {
    if (h.empty()) throw EmptyHead("the empty set cannot be a head");
    if (!h.is_subset_of(g.vertices())) {
        throw Error("head candidate contains vertices outside the graph");
    }
    VertexSet closure = g.ancestral_closure(h);
    if (g.barren(closure) != h) return false;
    return h.is_subset_of(district(g, closure, h.min()));
}

HeadTail tail_of(const Admg& g, VertexSet h) {
    if (!is_head(g, h)) {
        throw NotAHead("the given set is not a head of the graph");
    }
    VertexSet closure = g.ancestral_closure(h);
    VertexSet d = district(g, closure, h.min());
    return {h, d - h, g.parents(d)};
}

std::vector<HeadTail> all_heads(const Admg& g, int bound) {
    std::vector<HeadTail> out;
    for (VertexSet a : g.ancestral_sets(bound)) {
        if (a.empty()) continue;
        VertexSet h = g.barren(a);
        // h is a head iff its closure is all of a and it sits in one district
        // of a; barren sets of distinct ancestral sets are distinct, so no
        // duplicates arise.
        if (g.ancestral_closure(h) != a) continue;
        VertexSet d = district(g, a, h.min());
        if (!h.is_subset_of(d)) continue;
        out.push_back({h, d - h, g.parents(d)});
    }
    std::sort(out.begin(), out.end(), [](const HeadTail& x, const HeadTail& y) {
        return x.head.size() != y.head.size() ? x.head.size() < y.head.size()
                                              : x.head.bits() < y.head.bits();
    });
    return out;
}

}  // namespace admg
