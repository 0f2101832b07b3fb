#pragma once

#include <cstdint>
#include <vector>

#include "admg/vertex_set.hpp"

namespace admg {

// A joint table over n binary variables: 2^n reals indexed by assignment.
// Bit v of an index holds the value of variable v.  Entries are not
// constrained to be a distribution (reconstruction from invalid parameters
// may go negative); is_normalized() reports the usual sanity check.
class JointTable {
public:
    explicit JointTable(int n) : n_(n), p_(std::size_t{1} << n, 0.0) {}
    JointTable(int n, std::vector<double> p);

    int variable_count() const { return n_; }
    std::uint32_t assignment_count() const { return std::uint32_t{1} << n_; }

    double operator[](std::uint32_t assignment) const { return p_[assignment]; }
    double& operator[](std::uint32_t assignment) { return p_[assignment]; }

    double sum() const;
    bool is_normalized(double tol = 1e-12) const;

    static JointTable uniform(int n);

    // Packs the bits of an aligned assignment at the positions of s into a
    // dense index (bit j = value of the j-th smallest member of s).
    static std::uint32_t pack(std::uint32_t aligned_assignment, VertexSet s);

    // Marginal table over s, indexed by packed assignments of s.
    std::vector<double> marginal(VertexSet s) const;

    // P(X_s = aligned assignment restricted to s).
    double marginal_prob(VertexSet s, std::uint32_t aligned_assignment) const;

private:
    int n_;
    std::vector<double> p_;
};

// Exact conditional-independence test X independent of Y given Z: for every
// assignment z with P(Z=z) > tol and all x, y, requires
// |P(x,y|z) - P(x|z)P(y|z)| <= tol.  Vacuously true when X or Y is empty.
bool ci_holds(const JointTable& table, VertexSet x, VertexSet y, VertexSet z, double tol = 1e-9);

}  // namespace admg
