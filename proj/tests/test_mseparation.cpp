#include "doctest.h"

#include <cstdint>
#include <vector>

#include "admg/districts.hpp"
#include "admg/errors.hpp"
#include "admg/heads.hpp"
#include "admg/mseparation.hpp"
#include "admg/oracle.hpp"
#include "admg/partition.hpp"
#include "test_graphs.hpp"

using admg::Admg;
using admg::Path;
using admg::VertexSet;

namespace {

VertexSet vs(std::initializer_list<int> xs) { return VertexSet(xs); }

// Edge index lookup by endpoints and kind.
int edge_index(const Admg& g, int a, int b, admg::EdgeKind kind) {
  const auto& edges = g.all_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const admg::Edge& e = edges[i];
    if (e.kind != kind) continue;
    if (kind == admg::EdgeKind::directed && e.a == a && e.b == b) return static_cast<int>(i);
    if (kind == admg::EdgeKind::bidirected && ((e.a == a && e.b == b) || (e.a == b && e.b == a)))
      return static_cast<int>(i);
  }
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("collider status is read off the flanking arrowheads") {
  Admg g = testg::twin_forks();
  // x1 -> x3 <-> x4: arrowheads on both sides of x3.
  Path into_fork{{edge_index(g, 0, 2, admg::EdgeKind::directed),
                  edge_index(g, 2, 3, admg::EdgeKind::bidirected)},
                 {0, 2, 3}};
  CHECK(admg::is_collider_on(g, into_fork, 1));

  Admg chain(3, {{0, 1}, {1, 2}}, {});
  Path through{{edge_index(chain, 0, 1, admg::EdgeKind::directed),
                edge_index(chain, 1, 2, admg::EdgeKind::directed)},
               {0, 1, 2}};
  CHECK_FALSE(admg::is_collider_on(chain, through, 1));

  // x3 <- x1 <-> x4: tail at x1 on the first edge, head on the second.
  Admg f = testg::crossing();
  Path mixed{{edge_index(f, 0, 2, admg::EdgeKind::directed),
              edge_index(f, 0, 3, admg::EdgeKind::bidirected)},
             {2, 0, 3}};
  CHECK_FALSE(admg::is_collider_on(f, mixed, 1));
}

TEST_CASE("m-connecting paths require open colliders and untouched non-colliders") {
  Admg g = testg::twin_forks();
  Path path{{edge_index(g, 0, 2, admg::EdgeKind::directed),
             edge_index(g, 2, 3, admg::EdgeKind::bidirected)},
            {0, 2, 3}};
  CHECK_FALSE(admg::is_m_connecting(g, path, VertexSet{}));     // collider x3 blocked
  CHECK(admg::is_m_connecting(g, path, vs({2})));               // collider conditioned on
  CHECK_FALSE(admg::is_m_connecting(g, path, vs({3})));         // x3 not an ancestor of x4

  Path single{{edge_index(g, 2, 3, admg::EdgeKind::bidirected)}, {2, 3}};
  CHECK(admg::is_m_connecting(g, single, vs({0, 1})));  // no interior vertices
}

TEST_CASE("m-separation on the reference graphs") {
  Admg g = testg::twin_forks();
  CHECK(admg::is_m_separated(g, vs({0}), vs({1, 3}), VertexSet{}));
  CHECK(admg::is_m_separated(g, vs({1}), vs({0, 2}), VertexSet{}));
  CHECK_FALSE(admg::is_m_separated(g, vs({0}), vs({3}), vs({2})));  // collider opened
  CHECK(admg::is_m_separated(g, VertexSet{}, vs({1}), VertexSet{}));

  CHECK(admg::is_m_separated(testg::crossing(), vs({2}), vs({3}), vs({0, 1})));
  CHECK_THROWS_AS(admg::is_m_separated(g, vs({0, 2}), vs({2}), VertexSet{}),
                  admg::DisjointnessError);
  CHECK_THROWS_AS(admg::is_m_separated(g, vs({0}), vs({2}), vs({2})),
                  admg::DisjointnessError);
}

TEST_CASE("m-separation is symmetric and decomposes") {
  admg::Rng rng(11);
  admg::for_each_admg(3, [&](const Admg& g) {
    admg::for_each_subset(g.vertices(), [&](VertexSet x) {
      admg::for_each_subset(g.vertices() - x, [&](VertexSet yw) {
        admg::for_each_subset(g.vertices() - x - yw, [&](VertexSet z) {
          bool joint = admg::is_m_separated(g, x, yw, z);
          CHECK(admg::is_m_separated(g, yw, x, z) == joint);
          if (joint) {
            admg::for_each_subset(yw, [&](VertexSet y) {
              CHECK(admg::is_m_separated(g, x, y, z));
            });
          }
        });
      });
    });
  });
}

TEST_CASE("markov blanket of a barren vertex") {
  Admg g = testg::twin_forks();
  CHECK(admg::markov_blanket(g, 3, VertexSet::full(4)) == vs({0, 1, 2}));
  CHECK_THROWS_AS(admg::markov_blanket(g, 2, vs({2, 3})), admg::NotAncestral);
  CHECK_THROWS_AS(admg::markov_blanket(g, 0, VertexSet::full(4)), admg::NotBarren);

  Admg lone(1, {}, {});
  CHECK(admg::markov_blanket(lone, 0, vs({0})) == VertexSet{});

  CHECK(admg::markov_blanket(testg::pentagon(), 0, vs({0, 1, 3})) == vs({1}));
}

TEST_CASE("the blanket separates the vertex from the rest of the ancestral set") {
  auto run = [](const Admg& g) {
    for (VertexSet a : g.ancestral_sets())
      for (int x : g.barren(a)) {
        VertexSet mb = admg::markov_blanket(g, x, a);
        CHECK(mb.is_subset_of(a - VertexSet::single(x)));
        CHECK(admg::is_m_separated(g, VertexSet::single(x), a - mb - VertexSet::single(x), mb));
      }
  };
  admg::for_each_admg(3, run);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    admg::RandomSpec spec;
    spec.n = 7;
    spec.seed = 900 + seed;
    run(admg::random_admg(spec));
  }
}

TEST_CASE("blanket inside an enclosing set") {
  Admg g = testg::twin_forks();
  CHECK(admg::blanket_in_set(g, vs({2, 3}), VertexSet::full(4)) == vs({0, 1}));
  CHECK(admg::blanket_in_set(g, vs({0, 1}), vs({0, 1})) == VertexSet{});
  CHECK(admg::blanket_in_set(testg::crossing(), vs({0, 3}), vs({0, 1, 3})) == vs({1}));
  CHECK_THROWS_AS(admg::blanket_in_set(g, vs({0, 2}), vs({0})), admg::Error);
}

TEST_CASE("every head is screened off by its tail inside its closure") {
  auto run = [](const Admg& g) {
    for (const admg::HeadTail& ht : admg::all_heads(g)) {
      VertexSet w = g.ancestral_closure(ht.head);
      VertexSet tail = ht.tail();
      CHECK(admg::is_m_separated(g, ht.head, w - ht.head - tail, tail));
      // The tail is also recoverable as the blanket of the head in w.
      CHECK(admg::blanket_in_set(g, ht.head, w) == tail);
    }
  };
  run(testg::twin_forks());
  run(testg::crossing());
  run(testg::pentagon());
  admg::for_each_admg(3, run);
}

namespace {

// Vertices of a, ordered by (depth in decompose(a), id).  Any order sorted
// this way is consistent with the depth ordering of a.
std::vector<int> depth_order(const Admg& g, VertexSet a) {
  admg::Decomposition dec = admg::decompose(g, a);
  std::vector<int> depth(g.size(), 0);
  for (const admg::DecompositionBlock& b : dec.blocks)
    for (int v : b.head) depth[v] = b.depth;
  std::vector<int> order = a.to_vector();
  std::stable_sort(order.begin(), order.end(),
                   [&](int u, int v) { return depth[u] < depth[v]; });
  return order;
}

// For every head H in [a] and every member h (by order position), the set
// B = (dis_suc(h) \ {h}) ∪ pa(dis_suc(h)) over the at-or-after-h suffix must
// be the unique minimal blanket of h inside {members of H from h on} ∪
// tail(H).
void check_suffix_blankets(const Admg& g, VertexSet a, bool exhaustive_minimality) {
  std::vector<int> order = depth_order(g, a);
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

  for (const admg::DecompositionBlock& block : admg::decompose(g, a).blocks) {
    admg::HeadTail ht = admg::tail_of(g, block.head);
    for (int h : block.head) {
      VertexSet suc;
      for (int v : a)
        if (pos[v] >= pos[h]) suc.add(v);
      VertexSet dis = admg::district(g, suc, h);
      VertexSet b = (dis - VertexSet::single(h)) | g.parents(dis);

      VertexSet rest_of_head;
      for (int v : block.head)
        if (pos[v] >= pos[h]) rest_of_head.add(v);
      VertexSet t = rest_of_head | ht.tail();

      VertexSet hs = VertexSet::single(h);
      CHECK(b.is_subset_of(t - hs));
      CHECK(admg::is_m_separated(g, hs, t - b - hs, b));
      if (exhaustive_minimality) {
        admg::for_each_subset(b, [&](VertexSet smaller) {
          if (smaller == b) return;
          CHECK_FALSE(admg::is_m_separated(g, hs, t - smaller - hs, smaller));
        });
      } else {
        for (int drop : b) {
          VertexSet smaller = b - VertexSet::single(drop);
          CHECK_FALSE(admg::is_m_separated(g, hs, t - smaller - hs, smaller));
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("suffix blankets inside ordered heads") {
  admg::for_each_admg(3, [](const Admg& g) {
    for (VertexSet a : g.ancestral_sets()) check_suffix_blankets(g, a, true);
  });
  for (const Admg& g : {testg::twin_forks(), testg::crossing(), testg::pentagon()})
    for (VertexSet a : g.ancestral_sets()) check_suffix_blankets(g, a, true);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    admg::RandomSpec spec;
    spec.n = 6;
    spec.seed = 4400 + seed;
    Admg g = admg::random_admg(spec);
    for (VertexSet a : g.ancestral_sets()) check_suffix_blankets(g, a, false);
  }
}
