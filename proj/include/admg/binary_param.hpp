#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "admg/graph.hpp"
#include "admg/heads.hpp"
#include "admg/joint_table.hpp"

namespace admg {

// The binary parametrization of a graph: one table per head, holding
// q[i][t] = P(X_{head_i} = 0 | X_{tail_i} = t) for every packed tail
// assignment t (bit j = value of the j-th smallest tail vertex).  Heads are
// indexed as in MobiusContext::heads().  Values live in [0,1]; whether they
// define a distribution is variation-dependent and checked separately.
struct MobiusParams {
    std::vector<std::vector<double>> q;
};

// Precomputed head list plus the head partition of every vertex subset.
// Reconstruction sums over many subsets per assignment and every subset's
// partition is reused across assignments, so the memo is built once up
// front (read-only afterwards, safe to share across threads).
class MobiusContext {
public:
    explicit MobiusContext(const Admg& g, int bound = 20);

    const Admg& graph() const { return g_; }
    const std::vector<HeadTail>& heads() const { return heads_; }
    int head_index(VertexSet h) const { return index_by_mask_[h.bits()]; }
    long long param_dimension() const;

    // Head indices of the partition of the subset with the given bit mask.
    // District connectivity is traced through the ancestral closure of the
    // remaining set, so two vertices may share a block even when every
    // bidirected path between them leaves the subset.  On ancestral sets
    // this coincides with the blocks of decompose(); on other subsets it can
    // differ, and it is this closure-traced partition that makes the
    // inclusion-exclusion reconstruction invert parameter extraction.
    const std::vector<int>& partition_of(std::uint32_t mask) const { return partition_[mask]; }

    // One factor of one inclusion-exclusion term.
    struct ExpansionFactor {
        int head;                      // index into heads()
        std::uint32_t tail_assignment; // packed
        bool operator==(const ExpansionFactor&) const = default;
    };
    struct ExpansionTerm {
        int sign;            // +1 / -1
        VertexSet superset;  // the subset C the term sums over
        std::vector<ExpansionFactor> factors;
    };
    // Symbolic inclusion-exclusion expansion of p(assignment): one term per
    // superset C of the assignment's zero set, ordered by ascending C mask.
    std::vector<ExpansionTerm> expansion(std::uint32_t assignment) const;

    // p(assignment) for the given parameters (sum of the expansion).
    double reconstruct_entry(const MobiusParams& params, std::uint32_t assignment) const;

    // An all-independent reference point: q[i][t] = 2^{-|head_i|}, which
    // reconstructs the uniform table.
    MobiusParams independence_point() const;

private:
    void check_complete(const MobiusParams& params) const;

    Admg g_;
    std::vector<HeadTail> heads_;
    std::vector<int> index_by_mask_;
    std::vector<std::vector<int>> partition_;

    friend JointTable joint_from_params(const MobiusContext&, const MobiusParams&);
    friend JointTable joint_from_params_serial(const MobiusContext&, const MobiusParams&);
};

struct DegenerateEntry {
    int head;                      // index into ctx.heads()
    std::uint32_t tail_assignment; // packed
    bool operator==(const DegenerateEntry&) const = default;
};

struct ParamExtraction {
    MobiusParams params;
    // Entries whose tail event has probability <= tol: flagged and set to 0,
    // never imputed.
    std::vector<DegenerateEntry> degenerate;
};

// Extracts q[H][t] from a joint table by exact marginalization (tol flags
// degenerate conditioning events).  Throws DimensionMismatch.
ParamExtraction params_from_joint(const MobiusContext& ctx, const JointTable& table,
                                  double tol = 1e-12);

// Inclusion-exclusion reconstruction of the joint over all assignments.
// Entries may be negative for invalid parameters — returned as-is; use
// validate_params.  Throws IncompleteParams.  The plain version fans the
// independent assignments out across OpenMP threads; the _serial version is
// the reference implementation and computes identical bits.
JointTable joint_from_params(const MobiusContext& ctx, const MobiusParams& params);
JointTable joint_from_params_serial(const MobiusContext& ctx, const MobiusParams& params);

struct ParamValidity {
    bool valid = false;
    double min_entry = 0.0;
    double sum = 0.0;
};

// Reconstructs and reports: valid iff every entry >= -1e-12 and the total is
// within 1e-9 of 1.
ParamValidity validate_params(const MobiusContext& ctx, const MobiusParams& params);

}  // namespace admg
