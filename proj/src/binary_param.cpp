#include "admg/binary_param.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "admg/districts.hpp"
#include "admg/errors.hpp"
#include "admg/partition.hpp"

namespace admg {

namespace {

// Head partition of w for the inclusion-exclusion expansion.  The working
// set is split along the districts of its own ancestral closure until it
// lies inside a single one; then its barren subset comes off as a head and
// the remainder continues one level deeper.  Tracing districts through the
// closure (instead of through the subset alone, as decompose() does) is
// what makes reconstruction invert extraction; the two partitions agree on
// ancestral sets but can differ elsewhere, even on subsets whose districts
// are individually ancestrally closed, because the joint closure may link
// districts that are closed on their own.  Every emitted block is a genuine
// head: each vertex of a set has a descendant in the set's barren subset,
// so the barren subset has the same ancestral closure as the whole set and
// inherits its single enclosing district.  Blocks are ordered by
// (strip depth, minimum vertex).
std::vector<std::pair<VertexSet, int>> closure_partition(const Admg& g, VertexSet w) {
    std::vector<std::pair<VertexSet, int>> blocks;
    std::vector<std::pair<VertexSet, int>> queue;
    if (!w.empty()) queue.emplace_back(w, 0);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto [s, depth] = queue[i];
        VertexSet closure = g.ancestors(s);
        std::vector<VertexSet> traces;
        for (const VertexSet& d : districts_of(g, closure).blocks) {
            VertexSet t = d & s;
            if (!t.empty()) traces.push_back(t);
        }
        if (traces.size() == 1) {
            VertexSet h = g.barren(s);
            blocks.emplace_back(h, depth);
            if (s != h) queue.emplace_back(s - h, depth + 1);
        } else {
            for (const VertexSet& t : traces) queue.emplace_back(t, depth);
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first.min() < b.first.min();
    });
    return blocks;
}

}  // namespace

MobiusContext::MobiusContext(const Admg& g, int bound) : g_(g) {
    if (g.size() > bound || g.size() > 20) {
        throw BoundExceeded("binary parametrization enumerates all 2^n subsets; n=" +
                            std::to_string(g.size()) + " exceeds the bound");
    }
    heads_ = all_heads(g, bound);
    index_by_mask_.assign(std::size_t{1} << g.size(), -1);
    for (int i = 0; i < static_cast<int>(heads_.size()); ++i) {
        index_by_mask_[heads_[i].head.bits()] = i;
    }

    std::uint32_t subsets = std::uint32_t{1} << g.size();
    partition_.resize(subsets);
    bool missing_head = false;
#pragma omp parallel for schedule(dynamic, 64) reduction(||: missing_head)
    for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(subsets); ++mask) {
        std::vector<int> blocks;
        for (const auto& [head, depth] :
             closure_partition(g_, VertexSet(static_cast<std::uint32_t>(mask)))) {
            int idx = index_by_mask_[head.bits()];
            if (idx < 0) missing_head = true;
            blocks.push_back(idx);
        }
        partition_[mask] = std::move(blocks);
    }
    if (missing_head) {
        // Every partition block is a head of the graph; a miss means the
        // head enumeration and the partition disagree.
        throw Error("subset partition produced a set that is not a head");
    }
}

long long MobiusContext::param_dimension() const {
    long long dim = 0;
    for (const HeadTail& h : heads_) dim += 1LL << h.tail().size();
    return dim;
}

MobiusParams MobiusContext::independence_point() const {
    MobiusParams p;
    p.q.reserve(heads_.size());
    for (const HeadTail& h : heads_) {
        p.q.emplace_back(std::size_t{1} << h.tail().size(),
                         1.0 / static_cast<double>(std::uint64_t{1} << h.head.size()));
    }
    return p;
}

void MobiusContext::check_complete(const MobiusParams& params) const {
    if (params.q.size() != heads_.size()) {
        throw IncompleteParams("expected " + std::to_string(heads_.size()) + " head tables, got " +
                               std::to_string(params.q.size()));
    }
    for (std::size_t i = 0; i < heads_.size(); ++i) {
        std::size_t want = std::size_t{1} << heads_[i].tail().size();
        if (params.q[i].size() != want) {
            throw IncompleteParams("head table " + std::to_string(i) + " needs " +
                                   std::to_string(want) + " entries, got " +
                                   std::to_string(params.q[i].size()));
        }
    }
}

std::vector<MobiusContext::ExpansionTerm> MobiusContext::expansion(std::uint32_t assignment) const {
    std::uint32_t all = g_.vertices().bits();
    std::uint32_t zeros = ~assignment & all;
    std::vector<ExpansionTerm> out;
    // Supersets of zeros: zeros | extra for every subset extra of the ones.
    std::uint32_t ones = assignment & all;
    std::vector<std::uint32_t> supersets;
    for_each_subset(VertexSet(ones), [&](VertexSet extra) {
        supersets.push_back(zeros | extra.bits());
    });
    std::sort(supersets.begin(), supersets.end());
    for (std::uint32_t c : supersets) {
        ExpansionTerm term;
        term.superset = VertexSet(c);
        term.sign = (std::popcount(c & ~zeros) % 2 == 0) ? 1 : -1;
        for (int idx : partition_[c]) {
            term.factors.push_back({idx, JointTable::pack(assignment, heads_[idx].tail())});
        }
        out.push_back(std::move(term));
    }
    return out;
}

double MobiusContext::reconstruct_entry(const MobiusParams& params, std::uint32_t assignment) const {
    std::uint32_t all = g_.vertices().bits();
    std::uint32_t zeros = ~assignment & all;
    std::uint32_t ones = assignment & all;
    double total = 0.0;
    for_each_subset(VertexSet(ones), [&](VertexSet extra) {
        std::uint32_t c = zeros | extra.bits();
        double prod = extra.size() % 2 == 0 ? 1.0 : -1.0;
        for (int idx : partition_[c]) {
            prod *= params.q[idx][JointTable::pack(assignment, heads_[idx].tail())];
        }
        total += prod;
    });
    return total;
}

ParamExtraction params_from_joint(const MobiusContext& ctx, const JointTable& table, double tol) {
    if (table.variable_count() != ctx.graph().size()) {
        throw DimensionMismatch("joint table does not match the graph's vertex count");
    }
    ParamExtraction out;
    const auto& heads = ctx.heads();
    out.params.q.resize(heads.size());
    for (int i = 0; i < static_cast<int>(heads.size()); ++i) {
        VertexSet head = heads[i].head;
        VertexSet tail = heads[i].tail();
        std::vector<double> p_ht = table.marginal(head | tail);
        std::vector<double> p_t = table.marginal(tail);
        std::vector<int> tail_members = tail.to_vector();
        auto& q = out.params.q[i];
        q.assign(std::size_t{1} << tail.size(), 0.0);
        for (std::uint32_t t = 0; t < q.size(); ++t) {
            if (p_t[t] <= tol) {
                out.degenerate.push_back({i, t});
                continue;  // flagged and left at 0
            }
            // Aligned assignment: head vertices all 0, tail at its values.
            std::uint32_t aligned = 0;
            for (std::size_t j = 0; j < tail_members.size(); ++j) {
                aligned |= ((t >> j) & 1u) << tail_members[j];
            }
            q[t] = p_ht[JointTable::pack(aligned, head | tail)] / p_t[t];
        }
    }
    return out;
}

JointTable joint_from_params_serial(const MobiusContext& ctx, const MobiusParams& params) {
    ctx.check_complete(params);
    JointTable table(ctx.graph().size());
    for (std::uint32_t a = 0; a < table.assignment_count(); ++a) {
        table[a] = ctx.reconstruct_entry(params, a);
    }
    return table;
}

JointTable joint_from_params(const MobiusContext& ctx, const MobiusParams& params) {
    ctx.check_complete(params);
    JointTable table(ctx.graph().size());
    std::int64_t count = table.assignment_count();
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t a = 0; a < count; ++a) {
        table[static_cast<std::uint32_t>(a)] =
            ctx.reconstruct_entry(params, static_cast<std::uint32_t>(a));
    }
    return table;
}

ParamValidity validate_params(const MobiusContext& ctx, const MobiusParams& params) {
    JointTable table = joint_from_params(ctx, params);
    ParamValidity v;
    v.min_entry = table[0];
    for (std::uint32_t a = 0; a < table.assignment_count(); ++a) {
        if (table[a] < v.min_entry) v.min_entry = table[a];
        v.sum += table[a];
    }
    v.valid = v.min_entry >= -1e-12 && std::abs(v.sum - 1.0) <= 1e-9;
    return v;
}

}  // namespace admg
