#include "admg/factorization.hpp"

#include <cmath>

#include "admg/districts.hpp"
#include "admg/errors.hpp"
#include "admg/mseparation.hpp"

namespace admg {

namespace {

FactorTerm term_for(const Admg& g, const DecompositionBlock& block) {
    VertexSet closure = g.ancestral_closure(block.head);
    VertexSet d = district(g, closure, block.head.min());
    return {block.head, (d - block.head) | g.parents(d), block.depth};
}

std::string label_list(const Admg& g, VertexSet s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ",";
        out += g.label(v);
    }
    return out;
}

}  // namespace

Factorization factorize(const Admg& g, VertexSet a) {
    if (!g.is_ancestral(a)) {
        throw NotAncestral("factorization is defined for ancestral margins only");
    }
    Factorization f;
    f.margin = a;
    for (const DecompositionBlock& block : decompose(g, a).blocks) {
        f.terms.push_back(term_for(g, block));
    }
    return f;
}

std::vector<Factorization> factorize_all(const Admg& g, int bound) {
    std::vector<Factorization> out;
    for (VertexSet a : g.ancestral_sets(bound)) {
        if (!a.empty()) out.push_back(factorize(g, a));
    }
    return out;
}

std::string render_terms(const Admg& g, const Factorization& f) {
    std::string out;
    for (const FactorTerm& t : f.terms) {
        if (!out.empty()) out += " ";
        out += "p(" + label_list(g, t.head);
        if (!t.tail.empty()) out += "|" + label_list(g, t.tail);
        out += ")";
    }
    return out;
}

std::string render_equation(const Admg& g, const Factorization& f) {
    return "p(" + label_list(g, f.margin) + ") = " + render_terms(g, f);
}

bool check_factorization(const Admg& g, const JointTable& table, VertexSet a, double tol) {
    if (table.variable_count() != g.size()) {
        throw DimensionMismatch("joint table does not match the graph's vertex count");
    }
    Factorization f = factorize(g, a);

    // Marginal tables for the margin and for each term's head|tail pieces;
    // every involved set is inside a, so all lookups use packed indices.
    std::vector<double> pa_marg = table.marginal(a);
    struct TermTables {
        VertexSet ht, t;
        std::vector<double> p_ht, p_t;
    };
    std::vector<TermTables> tt;
    tt.reserve(f.terms.size());
    for (const FactorTerm& term : f.terms) {
        TermTables t;
        t.ht = term.head | term.tail;
        t.t = term.tail;
        t.p_ht = table.marginal(t.ht);
        t.p_t = table.marginal(t.t);
        tt.push_back(std::move(t));
    }

    bool ok = true;
    for_each_subset(a, [&](VertexSet ones) {
        if (!ok) return;
        std::uint32_t aligned = ones.bits();
        double lhs = pa_marg[JointTable::pack(aligned, a)];
        double rhs = 1.0;
        for (const TermTables& t : tt) {
            double tail_prob = t.p_t[JointTable::pack(aligned, t.t)];
            if (tail_prob <= tol) {
                // Conditional undefined; the margin can carry no more mass
                // than the tail event itself.
                if (lhs > tol) ok = false;
                return;
            }
            rhs *= t.p_ht[JointTable::pack(aligned, t.ht)] / tail_prob;
        }
        if (std::abs(lhs - rhs) > tol) ok = false;
    });
    return ok;
}

bool check_ordered_local_markov(const Admg& g, const JointTable& table,
                                const std::vector<int>& order, double tol) {
    if (table.variable_count() != g.size()) {
        throw DimensionMismatch("joint table does not match the graph's vertex count");
    }
    int n = g.size();
    if (static_cast<int>(order.size()) != n) {
        throw InconsistentOrder("order must list every vertex exactly once");
    }
    VertexSet seen;
    for (int v : order) {
        if (v < 0 || v >= n || seen.contains(v)) {
            throw InconsistentOrder("order must list every vertex exactly once");
        }
        // Everything before v must not have v as a proper ancestor... i.e.
        // all of v's proper ancestors must already be listed.
        if (!(g.ancestors(v) - VertexSet::single(v)).is_subset_of(seen)) {
            throw InconsistentOrder("vertex " + g.label(v) + " is listed before one of its ancestors");
        }
        seen.add(v);
    }
    if (n > 20) {
        throw BoundExceeded("ordered local Markov check enumerates predecessor subsets; n > 20");
    }

    VertexSet pre;
    for (int x : order) {
        pre.add(x);
        bool ok = true;
        for_each_subset(pre - VertexSet::single(x), [&](VertexSet s) {
            if (!ok) return;
            VertexSet a = s | VertexSet::single(x);
            if (!g.is_ancestral(a)) return;
            VertexSet mb = markov_blanket(g, x, a);
            VertexSet rest = a - mb - VertexSet::single(x);
            if (rest.empty()) return;
            if (!ci_holds(table, VertexSet::single(x), rest, mb, tol)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace admg
