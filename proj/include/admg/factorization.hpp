#pragma once

#include <string>
#include <vector>

#include "admg/graph.hpp"
#include "admg/joint_table.hpp"
#include "admg/partition.hpp"

namespace admg {

struct FactorTerm {
    VertexSet head;
    VertexSet tail;
    int depth = 0;
    bool operator==(const FactorTerm&) const = default;
};

// The margin factorization p(X_margin) = prod p(X_head | X_tail): heads are
// the recursive head partition of the margin, each conditioned on its tail.
struct Factorization {
    VertexSet margin;
    // Ordered by (depth, min head id).
    std::vector<FactorTerm> terms;
};

// Factorization of an ancestral margin (NotAncestral otherwise).
Factorization factorize(const Admg& g, VertexSet a);

// Factorizations of every nonempty ancestral set, ordered by (size, bit
// pattern) of the margin.  Throws BoundExceeded if n > bound.
std::vector<Factorization> factorize_all(const Admg& g, int bound = 20);

// "p(a,c|b,d,e) p(b,e|d) p(d)" — vertices comma-separated in id order,
// terms separated by single spaces.
std::string render_terms(const Admg& g, const Factorization& f);

// "p(a,b,c,d,e) = p(a,c|b,d,e) p(b,e|d) p(d)"
std::string render_equation(const Admg& g, const Factorization& f);

// Checks p(X_a) = prod p(X_head | X_tail) entrywise within tol.  Assignments
// where some term's tail event has probability <= tol carry no constraint
// (the conditionals are undefined); the margin probability must then be
// <= tol as well.  Throws NotAncestral / DimensionMismatch.
bool check_factorization(const Admg& g, const JointTable& table, VertexSet a, double tol = 1e-9);

// Ordered local Markov property: order lists ancestors before descendants
// ("x before y implies y is not an ancestor of x" fails for no pair);
// for every vertex x and every ancestral a with x in a and a within x's
// (inclusive) predecessors, x must be independent of a minus its blanket
// given markov_blanket(x, a), within tol.  Throws InconsistentOrder when the
// order is not a permutation respecting the ancestor relation.
bool check_ordered_local_markov(const Admg& g, const JointTable& table,
                                const std::vector<int>& order, double tol = 1e-9);

}  // namespace admg
