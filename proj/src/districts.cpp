#include "admg/districts.hpp"

namespace admg {

VertexSet district(const Admg& g, VertexSet within, int x) {
    if (!within.contains(x)) return {};
    VertexSet comp = VertexSet::single(x);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next = (g.spouses(frontier) & within) - comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

VertexSet district_of_set(const Admg& g, VertexSet within, VertexSet s) {
    VertexSet out;
    for (int v : s) {
        if (!out.contains(v)) out |= district(g, within, v);
    }
    return out;
}

DistrictPartition districts_of(const Admg& g, VertexSet within) {
    DistrictPartition part;
    part.block_of.assign(g.size(), -1);
    for (int v : within) {
        if (part.block_of[v] != -1) continue;
        VertexSet d = district(g, within, v);
        for (int u : d) part.block_of[u] = static_cast<int>(part.blocks.size());
        part.blocks.push_back(d);
    }
    return part;
}

bool has_ancestrally_closed_districts(const Admg& g, VertexSet within) {
    for (const VertexSet& d : districts_of(g, within).blocks) {
        if (district(g, g.ancestral_closure(d), d.min()) != d) return false;
    }
    return true;
}

}  // namespace admg
