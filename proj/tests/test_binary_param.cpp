#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "admg/binary_param.hpp"
#include "admg/districts.hpp"
#include "admg/errors.hpp"
#include "admg/factorization.hpp"
#include "admg/oracle.hpp"
#include "test_graphs.hpp"

using admg::Admg;
using admg::JointTable;
using admg::MobiusContext;
using admg::MobiusParams;
using admg::VertexSet;

namespace {

VertexSet vs(std::initializer_list<int> xs) { return VertexSet(xs); }

MobiusParams random_unit_params(const MobiusContext& ctx, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  MobiusParams p;
  for (const admg::HeadTail& ht : ctx.heads())
    p.q.push_back(std::vector<double>(std::size_t{1} << ht.tail().size()));
  for (auto& row : p.q)
    for (double& v : row) v = u(gen);
  return p;
}

}  // namespace

TEST_CASE("parameter dimension counts one value per head and tail assignment") {
  CHECK(MobiusContext(testg::twin_forks()).param_dimension() == 10);
  CHECK(MobiusContext(testg::crossing()).param_dimension() == 10);
  CHECK(MobiusContext(Admg(6, {}, {})).param_dimension() == 6);

  auto run = [](const Admg& g) {
    MobiusContext ctx(g);
    long long expect = 0;
    for (const admg::HeadTail& ht : ctx.heads()) expect += 1LL << ht.tail().size();
    CHECK(ctx.param_dimension() == expect);
  };
  run(testg::pentagon());
  admg::for_each_admg(3, run);
}

TEST_CASE("head indexing and subset partitions line up with the decomposition") {
  auto run = [](const Admg& g) {
    MobiusContext ctx(g);
    for (std::size_t i = 0; i < ctx.heads().size(); ++i)
      CHECK(ctx.head_index(ctx.heads()[i].head) == static_cast<int>(i));
    admg::for_each_subset(g.vertices(), [&](VertexSet w) {
      // Every subset's blocks are disjoint heads covering the subset.
      VertexSet covered;
      for (int idx : ctx.partition_of(w.bits())) {
        REQUIRE(idx >= 0);
        VertexSet h = ctx.heads()[idx].head;
        CHECK((covered & h).empty());
        covered = covered | h;
      }
      CHECK(covered == w);
      // On ancestral sets the partition matches the decomposition exactly,
      // block order included.
      if (g.is_ancestral(w)) {
        std::vector<int> expect;
        for (const admg::DecompositionBlock& b : admg::decompose(g, w).blocks)
          expect.push_back(ctx.head_index(b.head));
        CHECK(ctx.partition_of(w.bits()) == expect);
      }
    });
  };
  run(testg::twin_forks());
  run(testg::crossing());
  run(testg::pentagon());
  admg::for_each_admg(3, run);
}

TEST_CASE("partition blocks trace districts through the ancestral closure") {
  // In the pentagon, {b, c, e} has districts {b, e} and {c} on its own, but
  // b and c are linked by the bidirected path b - e - d - c whose middle
  // vertex d is an ancestor of the set.  The partition follows that closure
  // connectivity: the barren head {b, c} comes off first and leaves {e}.
  Admg g = testg::pentagon();
  MobiusContext ctx(g);
  VertexSet w = vs({1, 2, 4});
  CHECK_FALSE(admg::has_ancestrally_closed_districts(g, w));
  CHECK(ctx.partition_of(w.bits()) ==
        std::vector<int>{ctx.head_index(vs({1, 2})), ctx.head_index(vs({4}))});
  // The decomposition of the same subset keeps districts inside the subset.
  auto blocks = admg::decompose(g, w).blocks;
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].head == vs({1, 4}));
  CHECK(blocks[1].head == vs({2}));

  // Individually closed districts are not enough for the two partitions to
  // agree: {b, c} splits into districts {b} and {c}, each of which stays put
  // in its own ancestral closure, yet the joint closure pulls in d and e and
  // links them, so the partition is the single head {b, c}.
  VertexSet bc = vs({1, 2});
  CHECK(admg::has_ancestrally_closed_districts(g, bc));
  CHECK(ctx.partition_of(bc.bits()) == std::vector<int>{ctx.head_index(vs({1, 2}))});
  CHECK(admg::decompose(g, bc).blocks.size() == 2);
}

TEST_CASE("symbolic expansion of the all-zero assignment in the crossing graph") {
  MobiusContext ctx(testg::crossing());
  int q03 = ctx.head_index(vs({0, 3})), q12 = ctx.head_index(vs({1, 2}));

  auto terms = ctx.expansion(0b0000);
  REQUIRE(terms.size() == 1);  // the zero set is everything: only C = V
  CHECK(terms[0].sign == 1);
  CHECK(terms[0].superset == VertexSet::full(4));
  CHECK(terms[0].factors ==
        std::vector<MobiusContext::ExpansionFactor>{{q03, 0}, {q12, 0}});
}

TEST_CASE("symbolic expansion with the second fork pair set to one") {
  MobiusContext ctx(testg::crossing());
  int q0 = ctx.head_index(vs({0})), q1 = ctx.head_index(vs({1}));
  int q03 = ctx.head_index(vs({0, 3})), q12 = ctx.head_index(vs({1, 2}));

  // x1 = x2 = 0, x3 = x4 = 1: the zero set is {x1,x2}; four supersets.
  auto terms = ctx.expansion(0b1100);
  REQUIRE(terms.size() == 4);

  CHECK(terms[0].sign == 1);
  CHECK(terms[0].superset == vs({0, 1}));
  CHECK(terms[0].factors ==
        std::vector<MobiusContext::ExpansionFactor>{{q0, 0}, {q1, 0}});

  CHECK(terms[1].sign == -1);
  CHECK(terms[1].superset == vs({0, 1, 2}));
  CHECK(terms[1].factors ==
        std::vector<MobiusContext::ExpansionFactor>{{q0, 0}, {q12, 0}});

  CHECK(terms[2].sign == -1);
  CHECK(terms[2].superset == vs({0, 1, 3}));
  CHECK(terms[2].factors ==
        std::vector<MobiusContext::ExpansionFactor>{{q03, 0}, {q1, 0}});

  CHECK(terms[3].sign == 1);
  CHECK(terms[3].superset == VertexSet::full(4));
  CHECK(terms[3].factors ==
        std::vector<MobiusContext::ExpansionFactor>{{q03, 0}, {q12, 0}});
}

TEST_CASE("symbolic expansion with the first fork pair set to one") {
  MobiusContext ctx(testg::crossing());
  int q2 = ctx.head_index(vs({2})), q3 = ctx.head_index(vs({3}));
  int q03 = ctx.head_index(vs({0, 3})), q12 = ctx.head_index(vs({1, 2}));

  // x1 = x2 = 1, x3 = x4 = 0: zero set {x3,x4}; both tails are set to one.
  auto terms = ctx.expansion(0b0011);
  REQUIRE(terms.size() == 4);

  CHECK(terms[0].sign == 1);
  CHECK(terms[0].superset == vs({2, 3}));
  CHECK(terms[0].factors ==
        std::vector<MobiusContext::ExpansionFactor>{{q2, 1}, {q3, 1}});

  CHECK(terms[1].sign == -1);
  CHECK(terms[1].superset == vs({0, 2, 3}));
  CHECK(terms[1].factors ==
        std::vector<MobiusContext::ExpansionFactor>{{q03, 1}, {q2, 1}});

  CHECK(terms[2].sign == -1);
  CHECK(terms[2].superset == vs({1, 2, 3}));
  CHECK(terms[2].factors ==
        std::vector<MobiusContext::ExpansionFactor>{{q12, 1}, {q3, 1}});

  CHECK(terms[3].sign == 1);
  CHECK(terms[3].superset == VertexSet::full(4));
  CHECK(terms[3].factors ==
        std::vector<MobiusContext::ExpansionFactor>{{q03, 1}, {q12, 1}});
}

TEST_CASE("reconstruction equals the symbolic expansion evaluated numerically") {
  auto run = [](const Admg& g, std::uint64_t seed) {
    MobiusContext ctx(g);
    MobiusParams p = random_unit_params(ctx, seed);
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << g.size()); ++a) {
      double by_hand = 0.0;
      for (const auto& term : ctx.expansion(a)) {
        double prod = term.sign;
        for (const auto& f : term.factors) prod *= p.q[f.head][f.tail_assignment];
        by_hand += prod;
      }
      CHECK(std::abs(ctx.reconstruct_entry(p, a) - by_hand) <= 1e-12);
    }
  };
  run(testg::twin_forks(), 1);
  run(testg::crossing(), 2);
  run(testg::pentagon(), 3);
}

TEST_CASE("the independence point reconstructs the uniform table") {
  auto run = [](const Admg& g) {
    MobiusContext ctx(g);
    MobiusParams p = ctx.independence_point();
    for (std::size_t i = 0; i < ctx.heads().size(); ++i)
      for (double v : p.q[i])
        CHECK(v == std::pow(0.5, ctx.heads()[i].head.size()));
    JointTable t = admg::joint_from_params(ctx, p);
    double expect = std::pow(0.5, g.size());
    for (std::uint32_t a = 0; a < t.assignment_count(); ++a)
      CHECK(std::abs(t[a] - expect) <= 1e-12);
  };
  run(testg::twin_forks());
  run(testg::crossing());
  run(testg::pentagon());
}

TEST_CASE("an edgeless graph reconstructs a product of Bernoullis") {
  Admg g(3, {}, {});
  MobiusContext ctx(g);
  MobiusParams p;
  p.q = {{0.2}, {0.5}, {0.9}};  // P(X_i = 0)
  JointTable t = admg::joint_from_params(ctx, p);
  for (std::uint32_t a = 0; a < 8; ++a) {
    double expect = ((a & 1) ? 0.8 : 0.2) * ((a & 2) ? 0.5 : 0.5) * ((a & 4) ? 0.1 : 0.9);
    CHECK(std::abs(t[a] - expect) <= 1e-12);
  }
}

TEST_CASE("parameters extracted from simple tables") {
  Admg g = testg::twin_forks();
  MobiusContext ctx(g);

  admg::ParamExtraction fair = admg::params_from_joint(ctx, JointTable::uniform(4));
  CHECK(fair.degenerate.empty());
  for (std::size_t i = 0; i < ctx.heads().size(); ++i)
    for (double v : fair.params.q[i])
      CHECK(std::abs(v - std::pow(0.5, ctx.heads()[i].head.size())) <= 1e-12);

  JointTable point(4);
  point[0b0000] = 1.0;
  admg::ParamExtraction ext = admg::params_from_joint(ctx, point);
  // Every head with all variables at zero has conditional one given the
  // all-zero tail; tails that never occur are flagged and zeroed.
  int q2 = ctx.head_index(vs({2}));
  CHECK(ext.params.q[q2][0] == 1.0);
  CHECK(ext.params.q[q2][1] == 0.0);
  CHECK(std::find(ext.degenerate.begin(), ext.degenerate.end(),
                  admg::DegenerateEntry{q2, 1}) != ext.degenerate.end());

  CHECK_THROWS_AS(admg::params_from_joint(ctx, JointTable(3)), admg::DimensionMismatch);
}

TEST_CASE("valid parameters round-trip through the joint table") {
  auto run = [](const Admg& g, std::uint64_t seed) {
    MobiusContext ctx(g);
    MobiusParams p = admg::sample_valid_params(ctx, seed);
    JointTable t = admg::joint_from_params(ctx, p);
    CHECK(t.is_normalized(1e-9));
    admg::ParamExtraction back = admg::params_from_joint(ctx, t);
    CHECK(back.degenerate.empty());
    REQUIRE(back.params.q.size() == p.q.size());
    for (std::size_t i = 0; i < p.q.size(); ++i)
      for (std::size_t t2 = 0; t2 < p.q[i].size(); ++t2)
        CHECK(std::abs(back.params.q[i][t2] - p.q[i][t2]) <= 1e-9);
  };
  run(testg::twin_forks(), 21);
  run(testg::crossing(), 22);
  run(testg::pentagon(), 23);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    admg::RandomSpec spec;
    spec.n = 5;
    spec.seed = 5500 + seed;
    run(admg::random_admg(spec), seed);
  }
}

TEST_CASE("Markov tables round-trip through the parameters") {
  auto run = [](const Admg& g, std::uint64_t seed) {
    MobiusContext ctx(g);
    JointTable t = admg::sample_markov_table(g, seed);
    admg::ParamExtraction ext = admg::params_from_joint(ctx, t);
    REQUIRE(ext.degenerate.empty());
    JointTable back = admg::joint_from_params(ctx, ext.params);
    for (std::uint32_t a = 0; a < t.assignment_count(); ++a)
      CHECK(std::abs(back[a] - t[a]) <= 1e-9);
  };
  run(testg::twin_forks(), 31);
  run(testg::crossing(), 32);
  run(testg::pentagon(), 33);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    admg::RandomSpec spec;
    spec.n = 5;
    spec.seed = 5600 + seed;
    run(admg::random_admg(spec), seed);
  }
}

TEST_CASE("reconstruction always sums to one, even for arbitrary parameters") {
  auto run = [](const Admg& g, std::uint64_t seed) {
    MobiusContext ctx(g);
    JointTable t = admg::joint_from_params(ctx, random_unit_params(ctx, seed));
    CHECK(std::abs(t.sum() - 1.0) <= 1e-9);
  };
  run(testg::twin_forks(), 41);
  run(testg::crossing(), 42);
  run(testg::pentagon(), 43);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    admg::RandomSpec spec;
    spec.n = 6;
    spec.seed = 5700 + seed;
    run(admg::random_admg(spec), seed);
  }
}

TEST_CASE("validity check accepts distributions and rejects inconsistent conditionals") {
  Admg g = testg::twin_forks();
  MobiusContext ctx(g);

  admg::ParamValidity fair = admg::validate_params(ctx, ctx.independence_point());
  CHECK(fair.valid);
  CHECK(std::abs(fair.sum - 1.0) <= 1e-9);
  CHECK(fair.min_entry >= -1e-12);

  // P(x3=0, x4=0 | tails) = 0.9 contradicts P(x3=0|x1) = P(x4=0|x2) = 0.1:
  // the joint conditional cannot exceed either margin.
  MobiusParams bad;
  int q0 = ctx.head_index(vs({0})), q1 = ctx.head_index(vs({1}));
  int q2 = ctx.head_index(vs({2})), q3 = ctx.head_index(vs({3}));
  int q23 = ctx.head_index(vs({2, 3}));
  bad.q.resize(5);
  bad.q[q0] = {0.5};
  bad.q[q1] = {0.5};
  bad.q[q2] = {0.1, 0.1};
  bad.q[q3] = {0.1, 0.1};
  bad.q[q23] = {0.9, 0.9, 0.9, 0.9};
  admg::ParamValidity v = admg::validate_params(ctx, bad);
  CHECK_FALSE(v.valid);
  CHECK(v.min_entry < -1e-12);
  CHECK(std::abs(v.sum - 1.0) <= 1e-9);  // normalization holds regardless

  for (std::uint64_t seed = 51; seed < 54; ++seed) {
    admg::ParamValidity mk =
        admg::validate_params(ctx, admg::params_from_joint(ctx, admg::sample_markov_table(g, seed)).params);
    CHECK(mk.valid);
  }
}

TEST_CASE("parallel and serial reconstruction produce identical bits") {
  auto run = [](const Admg& g, std::uint64_t seed) {
    MobiusContext ctx(g);
    MobiusParams p = random_unit_params(ctx, seed);
    JointTable a = admg::joint_from_params(ctx, p);
    JointTable b = admg::joint_from_params_serial(ctx, p);
    REQUIRE(a.assignment_count() == b.assignment_count());
    for (std::uint32_t i = 0; i < a.assignment_count(); ++i) CHECK(a[i] == b[i]);
  };
  run(testg::twin_forks(), 61);
  run(testg::pentagon(), 62);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    admg::RandomSpec spec;
    spec.n = 7;
    spec.seed = 5800 + seed;
    run(admg::random_admg(spec), seed);
  }
}

TEST_CASE("missing or misshapen parameter tables are rejected") {
  MobiusContext ctx(testg::twin_forks());
  MobiusParams p = ctx.independence_point();
  p.q.pop_back();
  CHECK_THROWS_AS(admg::joint_from_params(ctx, p), admg::IncompleteParams);

  MobiusParams q = ctx.independence_point();
  q.q[ctx.head_index(vs({2, 3}))].pop_back();
  CHECK_THROWS_AS(admg::joint_from_params(ctx, q), admg::IncompleteParams);
  CHECK_THROWS_AS(admg::validate_params(ctx, q), admg::IncompleteParams);
}
