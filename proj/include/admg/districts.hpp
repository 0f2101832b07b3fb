#pragma once

#include <vector>

#include "admg/graph.hpp"

namespace admg {

// Connected component of x in the bidirected part of the subgraph induced by
// within.  Empty when x is not in within.
VertexSet district(const Admg& g, VertexSet within, int x);

// Union of district(g, within, b) over b in s.
VertexSet district_of_set(const Admg& g, VertexSet within, VertexSet s);

struct DistrictPartition {
    // Blocks ordered by minimum vertex id.
    std::vector<VertexSet> blocks;
    // block_of[v] = index into blocks, or -1 when v is outside the set.
    std::vector<int> block_of;
};

// Partition of within into its districts.
DistrictPartition districts_of(const Admg& g, VertexSet within);

// True when every district of within equals the district, taken inside the
// ancestral closure of that district, of any of its members.  Ancestral sets
// always qualify; some non-ancestral sets do too.
bool has_ancestrally_closed_districts(const Admg& g, VertexSet within);

}  // namespace admg
