#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "eqv/congruence.hpp"

namespace eqv {

namespace {

struct Space {
  SearchProfile profile;
  std::vector<IsolatedPoint> classes;
  // 1/(ab) mod p -> class indices, ascending.
  std::map<std::int64_t, std::vector<std::size_t>> by_weight;
  std::vector<std::int64_t> weight;
  // Every admissible sphere assignment (sorted alphas, c in [1, (p-1)/2]).
  std::vector<std::vector<FixedSphere>> sphere_choices;
  std::vector<std::int64_t> sphere_weight;  // sum alpha/c^2 mod p per choice
};

Space build_space(const SearchProfile& profile) {
  const std::int64_t p = profile.p;
  if (p == 2 || !is_prime(p)) throw Error(Errc::invalid_modulus, "search needs an odd prime");
  const auto n_points = static_cast<std::int64_t>(profile.n_points);
  const auto n_spheres = static_cast<std::int64_t>(profile.sphere_alphas.size());
  if (n_points + 2 * n_spheres != profile.b2 + 2 || profile.euler != profile.b2 + 2) {
    throw Error(Errc::inconsistent_counts, std::to_string(n_points) + " points and " + std::to_string(n_spheres) +
                                               " spheres do not fit chi = " + std::to_string(profile.euler) +
                                               ", b2 = " + std::to_string(profile.b2));
  }

  Space space;
  space.profile = profile;
  std::set<IsolatedPoint> seen;
  for (std::int64_t a = 1; a < p; ++a) {
    for (std::int64_t b = 1; b < p; ++b) seen.insert(canonical_point({a, b}, p));
  }
  space.classes.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < space.classes.size(); ++i) {
    const auto& pt = space.classes[i];
    const std::int64_t w = mod_inverse(reduce_mod(pt.a * pt.b, p), p).value();
    space.weight.push_back(w);
    space.by_weight[w].push_back(i);
  }

  std::vector<std::int64_t> alphas = profile.sphere_alphas;
  std::sort(alphas.begin(), alphas.end());
  std::vector<FixedSphere> current;
  const std::int64_t c_max = (p - 1) / 2;
  auto recurse = [&](auto&& self, std::size_t j) -> void {
    if (j == alphas.size()) {
      space.sphere_choices.push_back(current);
      return;
    }
    std::int64_t c_min = 1;
    if (j > 0 && alphas[j] == alphas[j - 1]) c_min = current.back().c;
    for (std::int64_t c = c_min; c <= c_max; ++c) {
      current.push_back({c, alphas[j]});
      self(self, j + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  for (const auto& choice : space.sphere_choices) {
    std::int64_t w = 0;
    for (const auto& sp : choice) {
      w = reduce_mod(w + rational_mod(Rational(sp.alpha, sp.c * sp.c), p).value(), p);
    }
    space.sphere_weight.push_back(w);
  }
  return space;
}

bool key_less(const GroupAction& x, const GroupAction& y) {
  if (x.points != y.points) return x.points < y.points;
  return x.spheres < y.spheres;
}

// Candidates completing a fixed prefix of point classes, sorted.
std::vector<GroupAction> complete_prefix(const Space& space, const std::vector<std::size_t>& prefix) {
  const SearchProfile& prof = space.profile;
  const std::int64_t p = prof.p;
  std::int64_t prefix_weight = 0;
  for (auto i : prefix) prefix_weight = reduce_mod(prefix_weight + space.weight[i], p);

  std::vector<GroupAction> out;
  auto consider = [&](const std::vector<std::size_t>& idx, const std::vector<FixedSphere>& spheres) {
    std::vector<IsolatedPoint> points;
    for (auto i : idx) points.push_back(space.classes[i]);
    GroupAction action = sorted_action(make_action(p, points, spheres, prof.signature, prof.euler, prof.b2));
    if (check_rotation_relations(action).passed()) out.push_back(std::move(action));
  };

  for (std::size_t s = 0; s < space.sphere_choices.size(); ++s) {
    if (prof.n_points == 0) {
      if (space.sphere_weight[s] == 0) consider({}, space.sphere_choices[s]);
      continue;
    }
    // Relation (1) fixes 1/(ab) of the last point.
    const std::int64_t target = reduce_mod(space.sphere_weight[s] - prefix_weight, p);
    const auto it = space.by_weight.find(target);
    if (it == space.by_weight.end()) continue;
    const std::size_t lo = prefix.empty() ? 0 : prefix.back();
    for (auto last : it->second) {
      if (last < lo) continue;
      std::vector<std::size_t> idx = prefix;
      idx.push_back(last);
      consider(idx, space.sphere_choices[s]);
    }
  }
  std::sort(out.begin(), out.end(), key_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Visits non-decreasing prefixes of length n_points - 1 in lexicographic
// order; `first_filter` selects which first indices are visited.
template <typename Visit, typename Filter>
bool for_each_prefix(const Space& space, Filter first_filter, Visit visit) {
  const std::size_t len = space.profile.n_points == 0 ? 0 : space.profile.n_points - 1;
  std::vector<std::size_t> prefix;
  auto recurse = [&](auto&& self, std::size_t start) -> bool {
    if (prefix.size() == len) return visit(prefix);
    for (std::size_t i = start; i < space.classes.size(); ++i) {
      if (prefix.empty() && !first_filter(i)) continue;
      prefix.push_back(i);
      const bool go_on = self(self, i);
      prefix.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  if (len == 0) return visit(prefix);
  return recurse(recurse, 0);
}

}  // namespace

std::size_t search_realizable(const SearchProfile& profile, const SearchSink& sink, std::optional<std::size_t> limit) {
  const Space space = build_space(profile);
  std::size_t emitted = 0;
  if (limit && *limit == 0) return 0;
  for_each_prefix(
      space, [](std::size_t) { return true; },
      [&](const std::vector<std::size_t>& prefix) {
        for (const auto& action : complete_prefix(space, prefix)) {
          ++emitted;
          if (!sink(action)) return false;
          if (limit && emitted >= *limit) return false;
        }
        return true;
      });
  return emitted;
}

std::vector<GroupAction> search_shard(const SearchProfile& profile, std::size_t index, std::size_t count) {
  if (count == 0 || index >= count) throw Error(Errc::invalid_argument, "bad shard index");
  const Space space = build_space(profile);
  std::vector<GroupAction> out;
  // With fewer than two points there is no prefix to split on; shard 0 owns all.
  const bool splittable = profile.n_points >= 2;
  if (!splittable && index != 0) return out;
  for_each_prefix(
      space, [&](std::size_t first) { return !splittable || first % count == index; },
      [&](const std::vector<std::size_t>& prefix) {
        auto part = complete_prefix(space, prefix);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        return true;
      });
  return out;
}

std::vector<GroupAction> search_parallel(const SearchProfile& profile, std::size_t threads) {
  threads = std::max<std::size_t>(threads, 1);
  build_space(profile);  // validate before spawning
  std::vector<std::vector<GroupAction>> parts(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] { parts[t] = search_shard(profile, t, threads); });
  }
  for (auto& th : pool) th.join();
  std::vector<GroupAction> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end(), key_less);
  return out;
}

}  // namespace eqv
