#include "admg/graph.hpp"

#include <algorithm>

#include "admg/errors.hpp"

namespace admg {

namespace {

std::string edge_str(const std::vector<std::string>& labels, int a, int b, EdgeKind kind) {
    return labels[a] + (kind == EdgeKind::directed ? " -> " : " <-> ") + labels[b];
}

}  // namespace

Admg::Admg(int n,
           std::vector<std::pair<int, int>> directed,
           std::vector<std::pair<int, int>> bidirected,
           std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0 || n > 31) {
        throw BoundExceeded("vertex count " + std::to_string(n) + " outside supported range [0, 31]");
    }
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int v = 0; v < n_; ++v) labels_.push_back("x" + std::to_string(v + 1));
    }
    if (static_cast<int>(labels_.size()) != n_) {
        throw DimensionMismatch("expected " + std::to_string(n_) + " labels, got " +
                                std::to_string(labels_.size()));
    }

    auto check_range = [&](int v) {
        if (v < 0 || v >= n_) {
            throw Error("vertex id " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
        }
    };

    pa_.assign(n_, {});
    ch_.assign(n_, {});
    sp_.assign(n_, {});

    for (auto& [a, b] : directed) {
        check_range(a);
        check_range(b);
        if (a == b) throw SelfLoopError("self-loop " + edge_str(labels_, a, b, EdgeKind::directed));
        if (ch_[a].contains(b)) {
            throw DuplicateEdgeError("duplicate edge " + edge_str(labels_, a, b, EdgeKind::directed));
        }
        if (ch_[b].contains(a)) {
            throw OpposingDirectedError("both " + edge_str(labels_, a, b, EdgeKind::directed) +
                                        " and " + edge_str(labels_, b, a, EdgeKind::directed) +
                                        " supplied");
        }
        ch_[a].add(b);
        pa_[b].add(a);
    }
    for (auto& [a, b] : bidirected) {
        check_range(a);
        check_range(b);
        if (a == b) throw SelfLoopError("self-loop " + edge_str(labels_, a, b, EdgeKind::bidirected));
        if (a > b) std::swap(a, b);
        if (sp_[a].contains(b)) {
            throw DuplicateEdgeError("duplicate edge " + edge_str(labels_, a, b, EdgeKind::bidirected));
        }
        sp_[a].add(b);
        sp_[b].add(a);
    }

    // Kahn's algorithm: establishes acyclicity and a topological order.
    {
        std::vector<int> indeg(n_);
        for (int v = 0; v < n_; ++v) indeg[v] = pa_[v].size();
        std::vector<int> stack;
        for (int v = n_ - 1; v >= 0; --v) {
            if (indeg[v] == 0) stack.push_back(v);
        }
        topo_.reserve(n_);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            topo_.push_back(v);
            for (int c : ch_[v]) {
                if (--indeg[c] == 0) stack.push_back(c);
            }
        }
        if (static_cast<int>(topo_.size()) != n_) {
            throw CycleError("directed part of the graph contains a cycle");
        }
    }

    // Reflexive closures, in topological order for ancestors and in reverse
    // for descendants.
    an_.assign(n_, {});
    de_.assign(n_, {});
    for (int v : topo_) {
        VertexSet an = VertexSet::single(v);
        for (int p : pa_[v]) an |= an_[p];
        an_[v] = an;
    }
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
        VertexSet de = VertexSet::single(*it);
        for (int c : ch_[*it]) de |= de_[c];
        de_[*it] = de;
    }

    // Canonical edge lists and incidence index.
    directed_ = std::move(directed);
    bidirected_ = std::move(bidirected);
    std::sort(directed_.begin(), directed_.end());
    std::sort(bidirected_.begin(), bidirected_.end());
    edges_.reserve(directed_.size() + bidirected_.size());
    for (auto& [a, b] : directed_) edges_.push_back({a, b, EdgeKind::directed});
    for (auto& [a, b] : bidirected_) edges_.push_back({a, b, EdgeKind::bidirected});
    incident_.assign(n_, {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        incident_[edges_[i].a].push_back(i);
        incident_[edges_[i].b].push_back(i);
    }
}

bool Admg::has_directed(int a, int b) const {
    return a >= 0 && a < n_ && b >= 0 && b < n_ && ch_[a].contains(b);
}

bool Admg::has_bidirected(int a, int b) const {
    return a >= 0 && a < n_ && b >= 0 && b < n_ && sp_[a].contains(b);
}

VertexSet Admg::parents(VertexSet s) const {
    VertexSet out;
    for (int v : s) out |= pa_[v];
    return out;
}

VertexSet Admg::children(VertexSet s) const {
    VertexSet out;
    for (int v : s) out |= ch_[v];
    return out;
}

VertexSet Admg::spouses(VertexSet s) const {
    VertexSet out;
    for (int v : s) out |= sp_[v];
    return out;
}

VertexSet Admg::ancestors(VertexSet s) const {
    VertexSet out;
    for (int v : s) out |= an_[v];
    return out;
}

VertexSet Admg::descendants(VertexSet s) const {
    VertexSet out;
    for (int v : s) out |= de_[v];
    return out;
}

VertexSet Admg::barren(VertexSet s) const {
    VertexSet out;
    for (int v : s) {
        if ((de_[v] & s) == VertexSet::single(v)) out.add(v);
    }
    return out;
}

std::vector<VertexSet> Admg::ancestral_sets(int bound) const {
    if (n_ > bound) {
        throw BoundExceeded("ancestral-set enumeration over n=" + std::to_string(n_) +
                            " exceeds bound " + std::to_string(bound));
    }
    std::vector<VertexSet> out;
    std::uint32_t all = vertices().bits();
    for (std::uint32_t m = 0; m <= all; ++m) {
        VertexSet s(m);
        if (is_ancestral(s)) out.push_back(s);
        if (all == 0) break;
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    });
    return out;
}

InducedSubgraph Admg::induced_subgraph(VertexSet keep) const {
    std::vector<int> original_ids = keep.to_vector();
    std::vector<int> new_id(n_, -1);
    for (int i = 0; i < static_cast<int>(original_ids.size()); ++i) new_id[original_ids[i]] = i;

    std::vector<std::pair<int, int>> directed, bidirected;
    std::vector<std::string> labels;
    for (int v : original_ids) labels.push_back(labels_[v]);
    for (auto& [a, b] : directed_) {
        if (keep.contains(a) && keep.contains(b)) directed.emplace_back(new_id[a], new_id[b]);
    }
    for (auto& [a, b] : bidirected_) {
        if (keep.contains(a) && keep.contains(b)) bidirected.emplace_back(new_id[a], new_id[b]);
    }
    return {Admg(static_cast<int>(original_ids.size()), std::move(directed), std::move(bidirected),
                 std::move(labels)),
            std::move(original_ids)};
}

}  // namespace admg
