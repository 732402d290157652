#include <gtest/gtest.h>

#include "hos/hos.hpp"
#include "support/oracles.hpp"

using namespace hos;

namespace {

using F = FieldElement;
using H = Quaternion;

ProjectivePoint<F> pt(std::initializer_list<long> xs) {
  std::vector<F> c;
  for (long x : xs) c.emplace_back(x);
  return ProjectivePoint<F>(Vector<F>(std::move(c)));
}

ProjectivePoint<F> basis_point(std::size_t n, std::size_t i) { return ProjectivePoint<F>(Vector<F>::unit(n, i)); }

std::set<std::size_t> as_set(PointSet a) {
  auto m = members(a);
  return {m.begin(), m.end()};
}

FiniteOrthoset random_orthoset(Rng& rng, std::size_t n, unsigned density) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (rng.chance(density)) {
        adj[x].push_back(y);
        adj[y].push_back(x);
      }
  return FiniteOrthoset(adj);
}

PointSet random_subset(Rng& rng, const FiniteOrthoset& x) {
  PointSet a = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (rng.chance(30)) a |= FiniteOrthoset::bit(i);
  return a;
}

}  // namespace

TEST(Points, CanonicalRepresentative) {
  Vector<F> v{F(0), F(Rational(3, 5)), F(Rational(4, 5))};
  ProjectivePoint<F> p(v);
  EXPECT_EQ(p.rep(), (Vector<F>{F(0), F(1), F(Rational(4, 3))}));
  EXPECT_EQ(p, pt({0, 3, 4}));
  EXPECT_EQ(pt({0, -6, -8}), p);
  EXPECT_THROW(ProjectivePoint<F>(Vector<F>(3)), DomainError);
}

TEST(Points, QuaternionPointsUseLeftScaling) {
  Vector<H> v{H(1, 1, 0, 0), H::j()};
  ProjectivePoint<H> p(v);
  EXPECT_EQ(p.rep()[0], H(1));
  EXPECT_EQ(ProjectivePoint<H>(H(0, 2, 3, 0) * v), p);
}

TEST(Perp, Examples) {
  EXPECT_TRUE(perp(basis_point(4, 0), basis_point(4, 1)));
  EXPECT_FALSE(perp(basis_point(4, 0), basis_point(4, 0)));
  EXPECT_TRUE(perp(pt({1, 1, 0, 0}), pt({1, -1, 0, 0})));
  EXPECT_THROW(perp(pt({1, 0}), pt({1, 0, 0})), DomainError);
}

template <class S>
void perp_is_an_orthogonality(Rng& rng, const ScalarSampler<S>& sample) {
  for (int trial = 0; trial < 50; ++trial) {
    auto [e, f] = random_point_pair(rng, sample, 4);
    EXPECT_EQ(perp(e, f), perp(f, e));
    EXPECT_FALSE(perp(e, e));
  }
}

TEST(Perp, SymmetricAndIrreflexive) {
  Rng rng(41);
  perp_is_an_orthogonality(rng, ScalarSampler<F>{random_hilbert_tower(rng, 2)});
  perp_is_an_orthogonality(rng, ScalarSampler<H>{});
}

TEST(Orthoclosure, Examples) {
  Subspace<F> c = orthoclosure(std::vector{basis_point(4, 0)});
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(contains(c, basis_point(4, i)), i == 0);
  Subspace<F> c2 = orthoclosure(std::vector{pt({1, 1, 1, 1}), pt({1, -1, 0, 0})});
  EXPECT_TRUE(contains(c2, pt({2, 0, 1, 1})));
  std::vector<ProjectivePoint<F>> all;
  for (std::size_t i = 0; i < 4; ++i) all.push_back(basis_point(4, i));
  EXPECT_EQ(orthoclosure(all), Subspace<F>::full(4));
  EXPECT_THROW(orthoclosure(std::vector<ProjectivePoint<F>>{}), DomainError);
}

TEST(Orthoclosure, ClosureLawsOnRandomSets) {
  Rng rng(42);
  ScalarSampler<F> s{random_hilbert_tower(rng, 2)};
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ProjectivePoint<F>> a;
    std::size_t k = 1 + rng.below(3);
    for (std::size_t i = 0; i < k; ++i) a.push_back(random_point(rng, s, 4));
    std::vector<ProjectivePoint<F>> b = a;
    b.push_back(random_point(rng, s, 4));
    Subspace<F> ca = orthoclosure(a), cb = orthoclosure(b);
    for (const auto& p : a) EXPECT_TRUE(contains(ca, p));
    EXPECT_TRUE(cb.contains(ca));
    std::vector<ProjectivePoint<F>> pts;
    for (const auto& v : ca.basis()) pts.emplace_back(v);
    EXPECT_EQ(orthoclosure(pts), ca);
    // A-perp-perp computed through the complement twice
    EXPECT_EQ(orthocomplement(perp_set<F>(a, 4)), ca);
    std::vector<Vector<F>> reps;
    for (const auto& p : a) reps.push_back(p.rep());
    EXPECT_EQ(Subspace<F>::span(oracle::null_space(oracle::null_space(reps, 4), 4), 4), ca);
  }
}

TEST(Orthoclosure, RankEqualsDimension) {
  Rng rng(43);
  ScalarSampler<F> s{random_hilbert_tower(rng, 1)};
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Vector<F>> vs;
    for (int i = 0; i < 4; ++i) vs.push_back(random_vector(rng, s, 4));
    if (Subspace<F>::span(vs, 4).dimension() < 4) continue;
    auto es = gram_schmidt(vs);
    std::vector<ProjectivePoint<F>> pts;
    for (const auto& e : es) pts.emplace_back(e);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j) EXPECT_TRUE(perp(pts[i], pts[j]));
    // no fifth point is orthogonal to all four
    EXPECT_EQ(perp_set<F>(pts, 4).dimension(), 0u);
  }
}

TEST(Lines, Examples) {
  auto l = line(basis_point(4, 0), basis_point(4, 1));
  EXPECT_EQ(l.subspace, Subspace<F>::span(std::vector{Vector<F>::unit(4, 0), Vector<F>::unit(4, 1)}, 4));
  EXPECT_EQ(line(basis_point(4, 0), pt({1, 1, 0, 0})).subspace, l.subspace);
  EXPECT_THROW(line(basis_point(4, 0), basis_point(4, 0)), DomainError);
  EXPECT_TRUE(l.contains(pt({3, -7, 0, 0})));
  EXPECT_FALSE(l.contains(basis_point(4, 2)));
}

TEST(Lines, LinesAreOrthoclosed) {
  Rng rng(44);
  ScalarSampler<F> s{random_hilbert_tower(rng, 2)};
  for (int trial = 0; trial < 25; ++trial) {
    auto [e, f] = random_point_pair(rng, s, 4);
    Subspace<F> pair = Subspace<F>::span(std::vector{e.rep(), f.rep()}, 4);
    EXPECT_EQ(line(e, f).subspace, orthocomplement(orthocomplement(pair)));
    EXPECT_EQ(line(e, f).subspace.dimension(), 2u);
  }
}

TEST(LineOf, RequiresDimensionTwo) {
  EXPECT_THROW(line_of(Subspace<F>::full(3)), DomainError);
  auto l = line_of(Subspace<F>::span(std::vector{Vector<F>::unit(3, 0), Vector<F>::unit(3, 2)}, 3));
  EXPECT_TRUE(l.contains(l.e));
  EXPECT_TRUE(l.contains(l.f));
  EXPECT_FALSE(l.e == l.f);
}

TEST(L1, Examples) {
  EXPECT_EQ(witness_L1(pt({1, 0, 0, 0}), pt({1, 1, 0, 0})), pt({0, 1, 0, 0}));
  EXPECT_EQ(witness_L1(basis_point(4, 0), basis_point(4, 1)), basis_point(4, 1));
  ProjectivePoint<F> g = witness_L1(pt({1, 1}), pt({1, 0}));
  EXPECT_EQ(g, pt({1, -1}));
  EXPECT_TRUE(perp(g, pt({1, 1})));
  EXPECT_EQ(oracle::rank(std::vector{pt({1, 1}).rep(), pt({1, 0}).rep(), g.rep()}), 2u);
  EXPECT_THROW(witness_L1(pt({1, 2}), pt({2, 4})), DomainError);
}

TEST(L2, Examples) {
  EXPECT_EQ(witness_L2(basis_point(4, 0), basis_point(4, 1)), pt({1, 1, 0, 0}));
  EXPECT_EQ(witness_L2(pt({1, 0}), pt({1, 1})), pt({2, 1}));
  EXPECT_THROW(witness_L2(pt({1, 0}), pt({1, 0})), DomainError);
}

template <class S>
void linearity_witnesses(Rng& rng, const ScalarSampler<S>& sample, int pairs) {
  for (int trial = 0; trial < pairs; ++trial) {
    auto [e, f] = random_point_pair(rng, sample, 4);
    ProjectivePoint<S> g = witness_L1(e, f);
    EXPECT_TRUE(perp(g, e));
    Subspace<S> ef = Subspace<S>::span(std::vector{e.rep(), f.rep()}, 4);
    Subspace<S> eg = Subspace<S>::span(std::vector{e.rep(), g.rep()}, 4);
    EXPECT_EQ(orthocomplement(ef), orthocomplement(eg));
    ProjectivePoint<S> h = witness_L2(e, f);
    EXPECT_FALSE(h == e);
    EXPECT_FALSE(h == f);
    EXPECT_TRUE(ef.contains(h.rep()));
  }
}

TEST(Linearity, WitnessesOverTowers) {
  Rng rng(45);
  linearity_witnesses(rng, ScalarSampler<F>{random_hilbert_tower(rng, 2)}, 30);
}

TEST(Linearity, WitnessesOverQuaternions) {
  Rng rng(46);
  linearity_witnesses(rng, ScalarSampler<H>{}, 30);
}

TEST(Finite, Validation) {
  using Adj = std::vector<std::vector<std::size_t>>;
  EXPECT_THROW(FiniteOrthoset(Adj{{0}}), DomainError);
  EXPECT_THROW(FiniteOrthoset(Adj{{1}, {}}), DomainError);
  EXPECT_THROW(FiniteOrthoset(Adj{{2}, {}}), DomainError);
  EXPECT_THROW(FiniteOrthoset(Adj(65)), DomainError);
  EXPECT_NO_THROW(FiniteOrthoset(Adj{{1}, {0}}));
}

TEST(Finite, ClosureExamples) {
  FiniteOrthoset b = FiniteOrthoset::boolean(5);
  EXPECT_EQ(finite_closure(b, FiniteOrthoset::bit(2)), FiniteOrthoset::bit(2));
  FiniteOrthoset e = FiniteOrthoset::edgeless(5);
  EXPECT_EQ(finite_closure(e, point_set({1, 3})), e.all());
  // Boolean on three points: the empty set's complement is X and X's complement is empty
  FiniteOrthoset b3 = FiniteOrthoset::boolean(3);
  EXPECT_EQ(b3.perp_set(0), b3.all());
  EXPECT_EQ(b3.perp_set(b3.all()), PointSet{0});
  EXPECT_EQ(finite_closure(b3, 0), PointSet{0});
  EXPECT_EQ(oracle::two_sweep_closure(b3.adjacency_lists(), {}), std::set<std::size_t>{});
  EXPECT_THROW(finite_closure(b3, FiniteOrthoset::bit(4)), DomainError);
}

TEST(Finite, ClosureLawsAgainstTwoSweepOracle) {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    FiniteOrthoset x = random_orthoset(rng, 1 + rng.below(16), static_cast<unsigned>(rng.range(10, 90)));
    PointSet a = random_subset(rng, x), b = a | random_subset(rng, x);
    PointSet ca = finite_closure(x, a), cb = finite_closure(x, b);
    EXPECT_EQ(as_set(ca), oracle::two_sweep_closure(x.adjacency_lists(), as_set(a)));
    EXPECT_EQ(a & ~ca, PointSet{0});
    EXPECT_EQ(ca & ~cb, PointSet{0});
    EXPECT_EQ(finite_closure(x, ca), ca);
  }
}

TEST(Classify, Examples) {
  Classification b = classify(FiniteOrthoset::boolean(5));
  EXPECT_EQ(b.family, OrthosetFamily::boolean);
  EXPECT_EQ(b.rank, 5u);
  Classification e = classify(FiniteOrthoset::edgeless(5));
  EXPECT_EQ(e.family, OrthosetFamily::edgeless);
  EXPECT_EQ(e.rank, 1u);
  FiniteOrthoset c4(std::vector<std::vector<std::size_t>>{{1, 3}, {0, 2}, {1, 3}, {0, 2}});
  Classification c = classify(c4);
  EXPECT_EQ(c.family, OrthosetFamily::other);
  EXPECT_EQ(c.rank, 2u);
  EXPECT_EQ(oracle::clique_number(c4.adjacency_lists()), 2u);
}

TEST(Classify, RankMatchesCliqueEnumeration) {
  Rng rng(48);
  for (int trial = 0; trial < 40; ++trial) {
    FiniteOrthoset x = random_orthoset(rng, 1 + rng.below(14), static_cast<unsigned>(rng.range(10, 90)));
    EXPECT_EQ(rank(x), oracle::clique_number(x.adjacency_lists()));
  }
}

TEST(Classify, RefusesLargeRankSearch) {
  EXPECT_THROW(rank(FiniteOrthoset::edgeless(33)), DomainError);
  EXPECT_EQ(rank(FiniteOrthoset::boolean(32)), 32u);
}

TEST(Finite, JsonRoundTrip) {
  Rng rng(49);
  FiniteOrthoset x = random_orthoset(rng, 9, 50);
  FiniteOrthoset y = orthoset_from_json(Json::parse(orthoset_to_json(x).dump()));
  EXPECT_EQ(y.adjacency_lists(), x.adjacency_lists());
  FiniteOrthoset z = orthoset_from_json(Json::parse("[[1],[0]]"));
  EXPECT_TRUE(z.perp(0, 1));
  EXPECT_THROW(orthoset_from_json(Json::parse("{\"points\": 3}")), ParseError);
  EXPECT_THROW(orthoset_from_json(Json::parse("[[\"a\"]]")), ParseError);
}
