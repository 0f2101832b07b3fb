#include "admg/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "admg/errors.hpp"
#include "admg/factorization.hpp"
#include "admg/mseparation.hpp"

namespace admg {

namespace {

// Depth-first enumeration of simple paths, testing every path whose endpoint
// lands in y.  Paths may pass through x- or y-vertices as interior points.
struct PathSearch {
    const Admg& g;
    VertexSet y;
    VertexSet an_z;
    VertexSet z;
    Path path;
    VertexSet on_path;

    bool connecting_found(int v) {
        for (int ei : g.incident_edges(v)) {
            const Edge& e = g.all_edges()[ei];
            int w = e.other(v);
            if (on_path.contains(w)) continue;
            path.edges.push_back(ei);
            path.vertices.push_back(w);
            bool hit = y.contains(w) && is_m_connecting(g, path, z);
            if (!hit) {
                on_path.add(w);
                hit = connecting_found(w);
                on_path.remove(w);
            }
            path.edges.pop_back();
            path.vertices.pop_back();
            if (hit) return true;
        }
        return false;
    }
};

}  // namespace

bool brute_force_m_separated(const Admg& g, VertexSet x, VertexSet y, VertexSet z) {
    if (x.intersects(y) || x.intersects(z) || y.intersects(z)) {
        throw DisjointnessError("m-separation query requires pairwise disjoint sets");
    }
    if (g.size() > 10) {
        throw BoundExceeded("path enumeration is exponential; n > 10 refused");
    }
    if (x.empty() || y.empty()) return true;
    PathSearch search{g, y, g.ancestors(z), z, {}, {}};
    for (int s : x) {
        search.path.vertices.assign(1, s);
        search.path.edges.clear();
        search.on_path = VertexSet::single(s);
        if (search.connecting_found(s)) return false;
    }
    return true;
}

CanonicalDag canonical_dag(const Admg& g) {
    int n = g.size();
    int m = static_cast<int>(g.bidirected_edges().size());
    std::vector<std::pair<int, int>> directed = g.directed_edges();
    std::vector<std::string> labels = g.labels();
    std::vector<std::pair<int, int>> latent_edge;
    for (int i = 0; i < m; ++i) {
        auto [a, b] = g.bidirected_edges()[i];
        directed.emplace_back(n + i, a);
        directed.emplace_back(n + i, b);
        labels.push_back("u_" + g.label(a) + "_" + g.label(b));
        latent_edge.emplace_back(a, b);
    }
    return {Admg(n + m, std::move(directed), {}, std::move(labels)), n, std::move(latent_edge)};
}

bool d_separated(const Admg& dag, VertexSet x, VertexSet y, VertexSet z) {
    if (!dag.bidirected_edges().empty()) {
        throw Error("d-separation is defined here for digraphs only");
    }
    if (x.intersects(y) || x.intersects(z) || y.intersects(z)) {
        throw DisjointnessError("d-separation query requires pairwise disjoint sets");
    }
    if (x.empty() || y.empty()) return true;

    // Moralize the subgraph induced by ancestors of the query, drop z, and
    // test undirected reachability.
    VertexSet keep = dag.ancestors(x | y | z);
    std::vector<VertexSet> adj(dag.size());
    for (int v : keep) {
        VertexSet pa = dag.parents(v) & keep;
        for (int p : pa) {
            adj[p].add(v);
            adj[v].add(p);
            adj[p] |= pa - VertexSet::single(p);  // marry parents
        }
    }
    VertexSet allowed = keep - z;
    VertexSet reached = x & allowed;
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= adj[v];
        next = (next & allowed) - reached;
        if (next.intersects(y)) return false;
        reached |= next;
        frontier = next;
    }
    return true;
}

JointTable sample_markov_table(const Admg& g, std::uint64_t seed) {
    CanonicalDag cd = canonical_dag(g);
    int total = cd.dag.size();
    if (total > 16) {
        throw BoundExceeded("joint over " + std::to_string(total) +
                            " observed+latent variables exceeds the 2^16 bound");
    }
    // One conditional table per vertex: P(v=1 | packed parent assignment).
    Rng rng(seed);
    std::vector<std::vector<double>> cpt(total);
    for (int v = 0; v < total; ++v) {
        cpt[v].resize(std::size_t{1} << cd.dag.parents(v).size());
        for (double& p : cpt[v]) p = rng.uniform(0.05, 0.95);
    }

    int n = cd.observed_count;
    int latents = total - n;
    JointTable table(n);
    for (std::uint32_t obs = 0; obs < table.assignment_count(); ++obs) {
        double sum = 0.0;
        for (std::uint32_t lat = 0; lat < (std::uint32_t{1} << latents); ++lat) {
            std::uint32_t full = obs | (lat << n);
            double p = 1.0;
            for (int v = 0; v < total; ++v) {
                double p1 = cpt[v][JointTable::pack(full, cd.dag.parents(v))];
                p *= ((full >> v) & 1u) ? p1 : 1.0 - p1;
            }
            sum += p;
        }
        table[obs] = sum;
    }
    return table;
}

Admg random_admg(const RandomSpec& spec) {
    if (spec.p_directed < 0 || spec.p_directed > 1 || spec.p_bidirected < 0 ||
        spec.p_bidirected > 1) {
        throw Error("edge probabilities must lie in [0,1]");
    }
    Rng rng(spec.seed);
    std::vector<int> order(spec.n);
    for (int i = 0; i < spec.n; ++i) order[i] = i;
    for (int i = spec.n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

    std::vector<std::pair<int, int>> directed, bidirected;
    for (int i = 0; i < spec.n; ++i) {
        for (int j = i + 1; j < spec.n; ++j) {
            int u = order[i], v = order[j];
            if (rng.uniform() < spec.p_directed) directed.emplace_back(u, v);
            if (rng.uniform() < spec.p_bidirected) bidirected.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return Admg(spec.n, std::move(directed), std::move(bidirected));
}

void for_each_admg(int n, const std::function<void(const Admg&)>& fn) {
    if (n < 1 || n > 4) {
        throw BoundExceeded("exhaustive ADMG enumeration is limited to 1 <= n <= 4");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<int> state(pairs.size(), 0);
    while (true) {
        std::vector<std::pair<int, int>> directed, bidirected;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            switch (state[k]) {
                case 0: break;
                case 1: directed.emplace_back(i, j); break;
                case 2: directed.emplace_back(j, i); break;
                case 3: bidirected.emplace_back(i, j); break;
                case 4: directed.emplace_back(i, j); bidirected.emplace_back(i, j); break;
                case 5: directed.emplace_back(j, i); bidirected.emplace_back(i, j); break;
            }
        }
        try {
            fn(Admg(n, std::move(directed), std::move(bidirected)));
        } catch (const CycleError&) {
            // skip cyclic directed parts
        }
        // Mixed-radix increment, least-significant pair first.
        std::size_t k = 0;
        while (k < state.size() && ++state[k] == 6) state[k++] = 0;
        if (k == state.size()) break;
        if (state.empty()) break;
    }
}

std::vector<Admg> enumerate_admgs(int n) {
    std::vector<Admg> out;
    for_each_admg(n, [&](const Admg& g) { out.push_back(g); });
    return out;
}

MobiusParams sample_valid_params(const MobiusContext& ctx, std::uint64_t seed, double lambda) {
    Rng rng(seed);
    MobiusParams center = ctx.independence_point();
    MobiusParams sample = center;
    int rejections = 0;
    while (true) {
        for (std::size_t i = 0; i < center.q.size(); ++i) {
            for (std::size_t t = 0; t < center.q[i].size(); ++t) {
                sample.q[i][t] = center.q[i][t] + lambda * (rng.uniform() - center.q[i][t]);
            }
        }
        if (validate_params(ctx, sample).valid) return sample;
        if (++rejections % 64 == 0) lambda *= 0.5;
    }
}

VerifyReport verify_markov_equivalence(const Admg& g, int trials, std::uint64_t seed, double tol) {
    if (g.size() > 8) {
        throw BoundExceeded("equivalence verification is limited to n <= 8");
    }
    VerifyReport report;
    report.trials = trials;
    constexpr std::size_t kMaxCounterexamples = 10;

    std::vector<VertexSet> margins;
    for (VertexSet a : g.ancestral_sets()) {
        if (!a.empty()) margins.push_back(a);
    }

    for (int t = 0; t < trials; ++t) {
        JointTable table = sample_markov_table(g, seed + static_cast<std::uint64_t>(t));
        bool pass = true;
        for (VertexSet a : margins) {
            if (!check_factorization(g, table, a, tol)) {
                pass = false;
                if (report.counterexamples.size() < kMaxCounterexamples) {
                    report.counterexamples.push_back({"forward", t, a, {}, {}, {}});
                }
            }
        }
        if (pass) ++report.forward_pass;
    }

    MobiusContext ctx(g);
    for (int t = 0; t < trials; ++t) {
        MobiusParams params = sample_valid_params(ctx, seed + static_cast<std::uint64_t>(t));
        JointTable table = joint_from_params(ctx, params);
        bool pass = true;
        for (int a = 0; a < g.size(); ++a) {
            for (int b = a + 1; b < g.size(); ++b) {
                VertexSet x = VertexSet::single(a), y = VertexSet::single(b);
                VertexSet rest = g.vertices() - x - y;
                for_each_subset(rest, [&](VertexSet cond) {
                    if (!is_m_separated(g, x, y, cond)) return;
                    if (ci_holds(table, x, y, cond, tol)) return;
                    pass = false;
                    if (report.counterexamples.size() < kMaxCounterexamples) {
                        report.counterexamples.push_back({"reverse", t, {}, x, y, cond});
                    }
                });
            }
        }
        if (pass) ++report.reverse_pass;
    }
    return report;
}

}  // namespace admg
