#include "doctest.h"

#include "weylarr/poset.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace weylarr;

namespace {

using PointSet = std::set<std::pair<int, int>>;

PointSet as_set(const std::vector<PosetPoint>& points) {
  PointSet out;
  for (const PosetPoint& p : points) out.insert({p.a, p.b});
  return out;
}

int distinct_levels(const PointSet& s) {
  std::set<int> levels;
  for (auto [a, b] : s) levels.insert(a + b);
  return static_cast<int>(levels.size());
}

// Every interval list allowed by the definition, realized and deduplicated
// as point sets. Unlike the enumerator this allows any finite end point, so
// non-canonical presentations are generated too.
void brute_force_unions(int n, bool pseudo, PosetPoint lo, int depth, PointSet acc,
                        std::set<PointSet>& out) {
  const Ambient ambient = pseudo ? Ambient::with_origin : Ambient::without_origin;
  std::vector<ExtendedPoint> ends;
  for (const PosetPoint& p : poset_points(n, Ambient::with_origin))
    if (leq(lo, p)) ends.push_back(p);
  ends.push_back(ExtendedPoint::infinity());
  for (const ExtendedPoint& hi : ends) {
    PointSet here = acc;
    for (const PosetPoint& p : interval_realize(Interval(lo, hi), n, ambient)) here.insert({p.a, p.b});
    if (hi.is_infinite() || hi.point().level() < n) out.insert(here);
    if (hi.is_infinite() || depth > n) continue;
    for (const PosetPoint& next : poset_points(n, Ambient::with_origin))
      if (leq(hi.point() + kDiagonalStep, next)) brute_force_unions(n, pseudo, next, depth + 1, here, out);
  }
}

std::map<int, std::set<PointSet>> brute_force_by_rank(int n, bool pseudo) {
  std::set<PointSet> all;
  if (pseudo) {
    for (const PosetPoint& start : poset_points(n, Ambient::with_origin))
      brute_force_unions(n, true, start, 0, {}, all);
  } else {
    brute_force_unions(n, false, kOrigin, 0, {}, all);
  }
  std::map<int, std::set<PointSet>> by_rank;
  for (const PointSet& s : all) by_rank[distinct_levels(s) - (pseudo ? 1 : 0)].insert(s);
  if (pseudo) by_rank[-1].insert(PointSet{});
  return by_rank;
}

}  // namespace

TEST_CASE("level sets") {
  CHECK(level_set(6, 0) == std::vector<PosetPoint>{{0, 0}});
  CHECK(level_set(6, 6).size() == 7);
  CHECK(level_set(4, 2) == std::vector<PosetPoint>{{0, 2}, {1, 1}, {2, 0}});
  CHECK_THROWS_AS(level_set(3, 4), std::out_of_range);
  CHECK_THROWS_AS(level_set(3, -1), std::out_of_range);
}

TEST_CASE("levels partition E_n and |E*_n| = n(n+3)/2") {
  for (int n = 0; n <= 12; ++n) {
    std::vector<PosetPoint> joined;
    for (int i = 0; i <= n; ++i) {
      auto level = level_set(n, i);
      joined.insert(joined.end(), level.begin(), level.end());
    }
    CHECK(as_set(joined) == as_set(poset_points(n, Ambient::with_origin)));
    CHECK(joined.size() == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
    CHECK(poset_points(n, Ambient::without_origin).size() == punctured_size(n));
    CHECK(punctured_size(n) == static_cast<std::size_t>(n * (n + 3) / 2));
  }
}

TEST_CASE("cartesian order axioms on sampled triples") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coord(0, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    PosetPoint p{coord(rng), coord(rng)}, q{coord(rng), coord(rng)}, r{coord(rng), coord(rng)};
    CHECK(leq(p, p));
    if (leq(p, q) && leq(q, p)) CHECK(p == q);
    if (leq(p, q) && leq(q, r)) CHECK(leq(p, r));
    CHECK(leq(p, ExtendedPoint::infinity()));
    CHECK_FALSE(leq(ExtendedPoint::infinity(), ExtendedPoint(p)));
  }
}

TEST_CASE("interval realization") {
  CHECK(as_set(interval_realize(Interval({0, 0}, PosetPoint{1, 1}), 2, Ambient::without_origin)) ==
        PointSet{{1, 0}, {0, 1}, {1, 1}});
  auto upper = interval_realize(Interval({5, 5}, ExtendedPoint::infinity()), 12, Ambient::without_origin);
  CHECK(upper.size() == 6);  // levels 10, 11, 12 contribute 1, 2, 3 points
  for (const PosetPoint& p : upper) CHECK((leq({5, 5}, p) && p.level() <= 12));
  CHECK_THROWS_AS(Interval({2, 1}, PosetPoint{1, 3}), std::domain_error);
  CHECK(interval_realize(Interval({0, 0}, PosetPoint{0, 0}), 3, Ambient::without_origin).empty());
}

TEST_CASE("chains of E*_2") {

  CHECK(count_chains(2, 1) == 5);
  std::vector<Chain> twos;
  for (const Chain& c : enumerate_chains(2, 2)) twos.push_back(c);
  const std::vector<Chain> expected{Chain({{1, 0}, {2, 0}}), Chain({{1, 0}, {1, 1}}),
                                    Chain({{0, 1}, {1, 1}}), Chain({{0, 1}, {0, 2}})};
  CHECK(twos == expected);
  std::vector<Chain> zeros;
  for (const Chain& c : enumerate_chains(3, 0)) zeros.push_back(c);
  REQUIRE(zeros.size() == 1);
  CHECK(zeros.front().empty());
  CHECK(count_chains(3, -1) == 0);
  CHECK(count_chains(3, 4) == 0);
}

TEST_CASE("chain construction rejects non-chains") {
  CHECK_THROWS_AS(Chain({{1, 0}, {0, 1}}), std::domain_error);
  CHECK_THROWS_AS(Chain({{0, 0}, {1, 0}}), std::domain_error);
  CHECK_THROWS_AS(Chain({{1, 1}, {1, 1}}), std::domain_error);
  CHECK(Chain({{2, 1}, {1, 0}}).elements().front() == PosetPoint{1, 0});
}

TEST_CASE("chain enumeration matches exhaustive subset filtering") {
  for (int n = 0; n <= 4; ++n) {
    const auto points = poset_points(n, Ambient::without_origin);
    const std::size_t m = points.size();
    std::map<int, std::uint64_t> brute;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i)
        for (std::size_t j = i + 1; j < m && ok; ++j)
          if ((mask >> i & 1) && (mask >> j & 1) && !comparable(points[i], points[j])) ok = false;
      if (ok) ++brute[__builtin_popcountll(mask)];
    }
    for (int k = 0; k <= n; ++k) CHECK(count_chains(n, k) == brute[k]);
  }
}

TEST_CASE("chain enumeration is strictly lexicographic") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      std::vector<std::vector<PosetPoint>> lists;
      for (const Chain& c : enumerate_chains(n, k)) lists.push_back(c.elements());
      for (std::size_t i = 1; i < lists.size(); ++i)
        CHECK(std::lexicographical_compare(lists[i - 1].begin(), lists[i - 1].end(), lists[i].begin(),
                                           lists[i].end(), ListingLess{}));
    }
}

TEST_CASE("translation by P is an order isomorphism onto the upper set") {
  for (int n = 1; n <= 6; ++n)
    for (const PosetPoint& p : poset_points(n, Ambient::without_origin))
      for (int k = 0; k <= n - p.level(); ++k) {
        std::uint64_t above = 0;
        for (const Chain& c : enumerate_chains(n, k))
          if (std::all_of(c.elements().begin(), c.elements().end(),
                          [&](PosetPoint q) { return lt(p, q); }))
            ++above;
        CHECK(above == count_chains(n - p.level(), k));
      }
}

TEST_CASE("small ensembles") {
  std::vector<PointSet> ones;
  for (const Ensemble& e : enumerate_ensembles(2, 1)) ones.push_back(as_set(e.realize()));
  CHECK(std::set<PointSet>(ones.begin(), ones.end()) ==
        std::set<PointSet>{{{1, 0}}, {{0, 1}}, {{1, 1}}});
  std::vector<Ensemble> twos;
  for (const Ensemble& e : enumerate_ensembles(2, 2)) twos.push_back(e);
  REQUIRE(twos.size() == 1);
  CHECK(twos.front() == Ensemble::from_intervals(2, {Interval(kOrigin, ExtendedPoint::infinity())}));
  CHECK(as_set(twos.front().realize()) == as_set(poset_points(2, Ambient::without_origin)));
}

TEST_CASE("the 10-ensemble of E*_12") {
  const Ensemble e = Ensemble::from_intervals(
      12, {Interval({0, 0}, PosetPoint{2, 2}), Interval({3, 3}, PosetPoint{4, 4}),
           Interval({5, 5}, ExtendedPoint::infinity())});
  CHECK(ensemble_rank(e) == 10);
  CHECK(e.intervals().size() == 3);
  bool found = false;
  for (const Ensemble& candidate : enumerate_ensembles(12, 10))
    if (candidate == e) found = true;
  CHECK(found);
}

TEST_CASE("ensemble ranks") {
  for (int n = 0; n <= 6; ++n)
    CHECK(Ensemble::from_intervals(n, {Interval(kOrigin, ExtendedPoint::infinity())}).rank() == n);
  auto single = Ensemble::from_points(2, {{1, 1}});
  REQUIRE(single);
  CHECK(single->rank() == 1);
}

TEST_CASE("ensemble validation") {
  CHECK_THROWS_AS(Ensemble::from_intervals(3, {Interval({1, 0}, ExtendedPoint::infinity())}),
                  std::domain_error);
  CHECK_THROWS_AS(Ensemble::from_intervals(3, {Interval(kOrigin, PosetPoint{1, 0}),
                                               Interval({1, 1}, ExtendedPoint::infinity())}),
                  std::domain_error);
  CHECK_THROWS_AS(Ensemble::from_intervals(2, {Interval(kOrigin, PosetPoint{1, 1})}), std::domain_error);
  CHECK_FALSE(Ensemble::from_points(2, {{1, 0}, {0, 1}}).has_value());
  CHECK_FALSE(Ensemble::from_points(3, {{1, 0}, {0, 2}}).has_value());
}

TEST_CASE("non-canonical presentations collapse") {
  const Ensemble split = Ensemble::from_intervals(
      4, {Interval(kOrigin, PosetPoint{0, 0}), Interval({1, 1}, PosetPoint{1, 1})});
  CHECK(split.intervals().size() == 2);
  const Ensemble merged = Ensemble::from_intervals(
      5, {Interval(kOrigin, PosetPoint{1, 1}), Interval({2, 2}, ExtendedPoint::infinity())});
  CHECK(merged.intervals().size() == 2);
  CHECK(merged == *Ensemble::from_points(5, merged.realize()));
}

TEST_CASE("ensemble enumeration matches brute-force interval unions") {
  for (int n = 0; n <= 5; ++n) {
    const auto brute = brute_force_by_rank(n, false);
    for (int k = -1; k <= n + 1; ++k) {
      std::vector<PointSet> listed;
      for (const Ensemble& e : enumerate_ensembles(n, k)) {
        CHECK(e.rank() == k);
        listed.push_back(as_set(e.realize()));
      }
      const std::set<PointSet> unique(listed.begin(), listed.end());
      CHECK(unique.size() == listed.size());
      const auto it = brute.find(k);
      CHECK(unique == (it == brute.end() ? std::set<PointSet>{} : it->second));
    }
  }
}

TEST_CASE("pseudo-ensemble enumeration matches brute force") {
  CHECK(count_pseudo_ensembles(2, 1) == 5);
  for (int n = 0; n <= 4; ++n) {
    const auto brute = brute_force_by_rank(n, true);
    for (int k = -1; k <= n; ++k) {
      std::set<PointSet> listed;
      std::size_t total = 0;
      for (const PseudoEnsemble& e : enumerate_pseudo_ensembles(n, k)) {
        CHECK(e.rank() == k);
        listed.insert(as_set(e.realize()));
        ++total;
      }
      CHECK(total == listed.size());
      const auto it = brute.find(k);
      CHECK(listed == (it == brute.end() ? std::set<PointSet>{} : it->second));
    }
  }
}

TEST_CASE("adjoining the origin maps ensembles onto pseudo-ensembles starting at the origin") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      std::set<PointSet> from_ensembles, from_pseudo;
      for (const Ensemble& e : enumerate_ensembles(n, k)) {
        auto points = e.realize();
        points.push_back(kOrigin);
        from_ensembles.insert(as_set(points));
        auto pseudo = PseudoEnsemble::from_points(n, points);
        REQUIRE(pseudo);
        CHECK(pseudo->rank() == k);
        CHECK(pseudo->start() == kOrigin);
      }
      for (const PseudoEnsemble& p : enumerate_pseudo_ensembles(n, k, kOrigin))
        from_pseudo.insert(as_set(p.realize()));
      CHECK(from_ensembles == from_pseudo);
    }
}
