#include "doctest.h"

#include "weylarr/chamber.hpp"
#include "weylarr/linalg.hpp"

#include <random>
#include <set>

using namespace weylarr;

namespace {

IntVector ints(std::initializer_list<int> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (int x : values) v(i++) = x;
  return v;
}

RationalVector rationals(std::initializer_list<int> values) { return to_rational(ints(values)); }

}  // namespace

TEST_CASE("chambers from subsets") {
  const Chamber c2 = chamber_from_subset(2, {2});
  CHECK(tableau_of(c2).render() == "++\n -");
  CHECK(c2.characteristic() == ints({-1, 1}));

  const Chamber c3 = chamber_from_subset(3, {1, 3});
  CHECK(c3.subset() == std::vector<int>{3, 1});
  CHECK(tableau_of(c3).render() == "+++\n +-\n  -");
  CHECK(c3.characteristic() == ints({1, -1, 1}));
  CHECK(c3.label() == "+-+");

  CHECK(tableau_of(chamber_from_subset(3, {})).render() == "---\n --\n  -");
  CHECK_THROWS_AS(chamber_from_subset(3, {4}), std::domain_error);
  CHECK_THROWS_AS(chamber_from_subset(3, {0}), std::domain_error);
}

TEST_CASE("tableau validation") {
  auto accepted = tableau_validate(SignTableau::parse("+-\n -"));
  REQUIRE(accepted);
  CHECK(accepted.chamber->subset() == std::vector<int>{1});

  auto rejected = tableau_validate(SignTableau::parse("-+\n -"));
  CHECK_FALSE(rejected);
  REQUIRE(rejected.violation);
  CHECK(rejected.violation->first == Box{1, 2});
  CHECK(rejected.violation->second == Box{1, 1});

  auto below = tableau_validate(SignTableau::parse("+-\n +"));
  CHECK_FALSE(below);
  CHECK(below.violation->second == Box{1, 2});

  CHECK_THROWS_AS(SignTableau::parse("++\n--"), std::invalid_argument);
  CHECK_THROWS_AS(SignTableau::parse("+x\n -"), std::invalid_argument);
}

TEST_CASE("valid sign tableaux number 2^n") {
  for (int n = 1; n <= 6; ++n) {
    const int cells = weight_count(n);
    std::set<std::vector<int>> seen;
    std::uint64_t accepted = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      SignTableau t(n);
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) t.set(i, j, mask >> weight_slot(n, i, j) & 1);
      if (auto v = tableau_validate(t)) {
        ++accepted;
        seen.insert(v.chamber->subset());
        CHECK(tableau_of(*v.chamber) == t);
      }
    }
    CHECK(accepted == (std::uint64_t{1} << n));
    CHECK(seen.size() == accepted);
  }
}

TEST_CASE("render and validate invert chamber_from_subset") {
  for (int n = 0; n <= 12; ++n) {
    std::set<std::string> renders;
    for (const Chamber& c : all_chambers(n)) {
      const std::string text = tableau_of(c).render();
      renders.insert(text);
      auto back = tableau_validate(SignTableau::parse(text));
      REQUIRE(back);
      CHECK(*back.chamber == c);
      CHECK(chamber_from_code(n, c.code()) == c);
    }
    CHECK(renders.size() == (std::size_t{1} << n));
  }
}

TEST_CASE("extreme rays") {
  auto rays = extreme_rays(chamber_from_subset(3, {3, 1}));
  REQUIRE(rays.size() == 3);
  CHECK(rays[0].coordinates() == ints({1, 0, 0}));
  CHECK(rays[1].coordinates() == ints({1, 0, -1}));
  CHECK(rays[2].coordinates() == ints({1, 1, -1}));

  auto full = extreme_rays(chamber_from_subset(2, {1, 2}));
  CHECK(full[0].coordinates() == ints({1, 0}));
  CHECK(full[1].coordinates() == ints({1, 1}));

  for (int n = 1; n <= 6; ++n) {
    auto empty = extreme_rays(chamber_from_subset(n, {}));
    for (int l = 1; l <= n; ++l) CHECK(ray_index(empty[static_cast<std::size_t>(l - 1)]) == PosetPoint{0, l});
  }
}

TEST_CASE("interior point of the gl_3 table reproduces the rays") {
  // a_3 e_1 + a_2 e_2 + a_1 e_3 with a = (3, 2, 1) for S = {3, 1}
  auto rays = extreme_rays(chamber_from_subset(3, {3, 1}));
  const int a1 = 3, a2 = 2, a3 = 1;
  IntVector x = a3 * rays[0].coordinates() + a2 * rays[1].coordinates() + a1 * rays[2].coordinates();
  CHECK(x == ints({a1 + a2 + a3, a1, -a1 - a2}));
}

TEST_CASE("extreme rays are independent and form a maximal chain") {
  for (int n = 1; n <= 8; ++n)
    for (const Chamber& c : all_chambers(n)) {
      Matrix<int> m(n, n);
      auto rays = extreme_rays(c);
      for (int l = 0; l < n; ++l) m.row(l) = rays[static_cast<std::size_t>(l)].coordinates().transpose();
      CHECK(exact_rank(m.cast<BigInt>()) == n);
      const Chain chain = chain_of(c);
      for (int l = 1; l <= n; ++l) CHECK(chain.elements()[static_cast<std::size_t>(l - 1)].level() == l);
      CHECK(chamber_from_chain(n, chain) == c);
    }
}

TEST_CASE("positive combinations classify back and match the tableau") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(1, 50), den(1, 9);
  for (int n = 1; n <= 6; ++n) {
    const auto chambers = all_chambers(n);
    std::uniform_int_distribution<std::size_t> pick(0, chambers.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const Chamber& c = chambers[pick(rng)];
      RationalVector x = RationalVector::Zero(n);
      for (const RayVector& e : extreme_rays(c)) {
        const Rational coefficient(num(rng), den(rng));
        for (int i = 0; i < n; ++i) x(i) += coefficient * e.coordinates()(i);
      }
      const PointClass cls = classify_point(n, x);
      REQUIRE(cls.chamber);
      CHECK(*cls.chamber == c);
      CHECK(cls.signature == chamber_sign_condition(c));
    }
  }
}

TEST_CASE("point classification") {
  CHECK(classify_point(2, rationals({2, 1})).chamber->subset() == std::vector<int>{2, 1});
  const PointClass mixed = classify_point(2, rationals({1, -3}));
  REQUIRE(mixed.chamber);
  CHECK(mixed.chamber->subset() == std::vector<int>{1});
  CHECK(tableau_of(*mixed.chamber).render() == "+-\n -");

  const PointClass boundary = classify_point(2, rationals({1, 1}));
  CHECK_FALSE(boundary.chamber);
  CHECK(boundary.signature.roots == std::vector<std::int8_t>{0});
  CHECK(to_string(boundary.signature) == "++/+|0");

  CHECK_THROWS_AS(classify_point(2, rationals({1, 2})), std::domain_error);
  CHECK_THROWS_AS(classify_point(3, rationals({1, 2})), std::domain_error);
}

TEST_CASE("ray indices") {
  CHECK(ray_from_index(4, {1, 2}).coordinates() == ints({1, 0, -1, -1}));
  CHECK(ray_index(RayVector(ints({1, 1, -1}))) == PosetPoint{2, 1});
  CHECK_THROWS_AS(RayVector(ints({0, 0, 0})), std::domain_error);
  CHECK_THROWS_AS(RayVector(ints({1, -1, 0})), std::domain_error);
  CHECK_THROWS_AS(RayVector(ints({0, 1, 0})), std::domain_error);
  CHECK_THROWS_AS(ray_from_index(3, {2, 2}), std::domain_error);
  CHECK_THROWS_AS(ray_from_index(3, {0, 0}), std::domain_error);
  for (int n = 1; n <= 7; ++n)
    for (const PosetPoint& p : poset_points(n, Ambient::without_origin))
      CHECK(ray_index(ray_from_index(n, p)) == p);
}
