#include <doctest.h>

#include <set>

#include "eqv/congruence.hpp"

using namespace eqv;

namespace {

std::vector<GroupAction> collect(const SearchProfile& prof, std::optional<std::size_t> limit = std::nullopt) {
  std::vector<GroupAction> out;
  search_realizable(prof, [&](const GroupAction& x) {
    out.push_back(x);
    return true;
  }, limit);
  return out;
}

bool contains(const std::vector<GroupAction>& xs, const GroupAction& y) {
  const GroupAction s = sorted_action(y);
  return std::find(xs.begin(), xs.end(), s) != xs.end();
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("CP2 profile contains the linear models") {
  const SearchProfile prof{5, 3, {}, 1, 3, 1};
  const auto found = collect(prof);
  CHECK(contains(found, make_action(5, {{1, 2}, {1, -1}, {-1, -2}}, {}, 1, 3, 1)));
  for (std::int64_t a = 1; a < 5; ++a) {
    for (std::int64_t b = 1; b < 5; ++b) {
      if (a != b) CHECK(contains(found, linear_cp2(5, a, b)));
    }
  }
  for (const auto& x : found) CHECK(check_rotation_relations(x).passed());
}

TEST_CASE("S4 profile for p = 3") {
  const auto found = collect(SearchProfile{3, 2, {}, 0, 2, 0});
  CHECK(contains(found, linear_s4(3, 1, 1)));
  CHECK(contains(found, linear_s4(3, 1, 2)));
}

TEST_CASE("results are canonical, distinct and sorted") {
  // CP2 fixed-line model summed with a three-point CP2 at a matching point.
  const GroupAction line = linear_cp2(7, 1, 0);
  const GroupAction three = linear_cp2(7, 6, 1);
  std::size_t j = 0;
  while (three.points[j] != canonical_point({1, -1}, 7)) ++j;
  const GroupAction sum = connected_sum_points(line, 0, three, j);
  const SearchProfile prof{7, 2, {1}, 2, 4, 2};
  const auto found = collect(prof);
  CHECK(contains(found, sum));
  std::set<std::pair<std::vector<IsolatedPoint>, std::vector<FixedSphere>>> seen;
  for (std::size_t i = 0; i < found.size(); ++i) {
    CHECK(found[i] == sorted_action(found[i]));
    CHECK(seen.insert({found[i].points, found[i].spheres}).second);
    if (i > 0) {
      const auto& x = found[i - 1];
      const auto& y = found[i];
      CHECK((x.points < y.points || (x.points == y.points && x.spheres < y.spheres)));
    }
  }
}

TEST_CASE("pruned search matches an unpruned scan") {
  const SearchProfile prof{5, 2, {-1}, -1, 4, 2};
  std::set<std::pair<std::vector<IsolatedPoint>, std::vector<FixedSphere>>> brute;
  for (std::int64_t a1 = 1; a1 < 5; ++a1) {
    for (std::int64_t b1 = 1; b1 < 5; ++b1) {
      for (std::int64_t a2 = 1; a2 < 5; ++a2) {
        for (std::int64_t b2 = 1; b2 < 5; ++b2) {
          for (std::int64_t c = 1; c <= 2; ++c) {
            const GroupAction x = sorted_action(make_action(5, {{a1, b1}, {a2, b2}}, {{c, -1}}, -1, 4, 2));
            if (check_rotation_relations(x).passed()) brute.insert({x.points, x.spheres});
          }
        }
      }
    }
  }
  std::set<std::pair<std::vector<IsolatedPoint>, std::vector<FixedSphere>>> got;
  for (const auto& x : collect(prof)) got.insert({x.points, x.spheres});
  CHECK(got == brute);
}

TEST_CASE("limit and shards") {
  const SearchProfile prof{7, 3, {}, 1, 3, 1};
  const auto all = collect(prof);
  REQUIRE(all.size() > 3);
  const auto first = collect(prof, 3);
  CHECK(first == std::vector<GroupAction>(all.begin(), all.begin() + 3));
  CHECK(search_parallel(prof, 4) == all);
  std::size_t total = 0;
  for (std::size_t i = 0; i < 3; ++i) total += search_shard(prof, i, 3).size();
  CHECK(total == all.size());
}

TEST_CASE("inconsistent counts") {
  try {
    collect(SearchProfile{5, 3, {}, 1, 4, 1});
    FAIL("expected InconsistentCounts");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inconsistent_counts);
  }
  CHECK_THROWS_AS(collect(SearchProfile{5, 1, {}, 1, 3, 1}), Error);
}

}
