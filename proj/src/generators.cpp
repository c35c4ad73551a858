#include "smg/generators.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace smg {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::below needs a positive bound");
  // Largest multiple of bound representable; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

SmgInstance generate_smg(std::size_t n, Rng& rng, const SmgGenOptions& opts) {
  std::vector<StrictOrder<Woman>> men;
  men.reserve(n);
  for (std::size_t b = 0; b < n; ++b) men.emplace_back(random_order<Woman>(n, rng));
  std::vector<PrefRelation> rels;
  rels.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    PrefRelation rel(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = opts.asymmetric ? i + 1 : 0; j < n; ++j) {
        if (i == j) continue;
        if (opts.asymmetric) {
          switch (rng.below(3)) {
            case 0:
              rel.insert(Man{i}, Man{j});
              break;
            case 1:
              rel.insert(Man{j}, Man{i});
              break;
            default:
              break;
          }
        } else if (rng.chance(opts.relation_density)) {
          rel.insert(Man{i}, Man{j});
        }
      }
    }
    rels.push_back(std::move(rel));
  }
  return SmgInstance(std::move(men), std::move(rels));
}

SmtiInstance generate_smti(std::size_t n, Rng& rng, const SmtiGenOptions& opts) {
  std::vector<std::vector<bool>> acceptable(n, std::vector<bool>(n, false));
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) acceptable[b][c] = rng.chance(opts.list_density);
  }
  std::vector<TiedList<Woman>> men;
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<Woman> order;
    for (Woman c : random_order<Woman>(n, rng)) {
      if (acceptable[b][c.index]) order.push_back(c);
    }
    men.push_back(TiedList<Woman>::strict(n, order));
  }
  std::vector<TiedList<Man>> women;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Man>> groups;
    for (Man b : random_order<Man>(n, rng)) {
      if (!acceptable[b.index][c]) continue;
      if (!groups.empty() && rng.chance(opts.tie_density)) {
        groups.back().push_back(b);
      } else {
        groups.push_back({b});
      }
    }
    women.emplace_back(n, std::move(groups));
  }
  return SmtiInstance(std::move(men), std::move(women));
}

CyclicInstance generate_cyclic(std::size_t n, Rng& rng) {
  std::vector<StrictOrder<Man>> dogs;
  std::vector<StrictOrder<Woman>> men;
  std::vector<StrictOrder<Dog>> women;
  for (std::size_t i = 0; i < n; ++i) dogs.emplace_back(random_order<Man>(n, rng));
  for (std::size_t i = 0; i < n; ++i) men.emplace_back(random_order<Woman>(n, rng));
  for (std::size_t i = 0; i < n; ++i) women.emplace_back(random_order<Dog>(n, rng));
  return CyclicInstance(std::move(dogs), std::move(men), std::move(women));
}

SeInstance generate_se(std::size_t n, Rng& rng) {
  CyclicInstance cyclic = generate_cyclic(n, rng);
  return SeInstance(std::move(cyclic), FixedMatching(random_order<Man>(n, rng)));
}

namespace {

/// All ordered partitions of items into non-empty groups.
template <class T>
void weak_orders(const std::vector<T>& items, std::vector<std::vector<T>>& prefix,
                 std::vector<std::vector<std::vector<T>>>& out) {
  if (items.empty()) {
    out.push_back(prefix);
    return;
  }
  const std::size_t k = items.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<T> group;
    std::vector<T> rest;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? group : rest).push_back(items[i]);
    prefix.push_back(std::move(group));
    weak_orders(rest, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SmtiInstance> all_smti_instances(std::size_t n, std::size_t max_total_positions) {
  if (n * n >= 8 * sizeof(std::size_t) - 1) throw BudgetExceeded("too many acceptability patterns to enumerate");
  std::vector<SmtiInstance> out;
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << (n * n)); ++pattern) {
    auto acceptable = [&](std::size_t b, std::size_t c) { return (pattern >> (b * n + c)) & 1; };

    std::vector<std::vector<TiedList<Woman>>> man_options(n);
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Woman> list;
      for (std::size_t c = 0; c < n; ++c) {
        if (acceptable(b, c)) list.emplace_back(c);
      }
      do {
        man_options[b].push_back(TiedList<Woman>::strict(n, list));
      } while (std::next_permutation(list.begin(), list.end()));
    }
    std::vector<std::vector<TiedList<Man>>> woman_options(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Man> members;
      for (std::size_t b = 0; b < n; ++b) {
        if (acceptable(b, c)) members.emplace_back(b);
      }
      std::vector<std::vector<std::vector<Man>>> orders;
      std::vector<std::vector<Man>> prefix;
      weak_orders(members, prefix, orders);
      for (auto& groups : orders) woman_options[c].emplace_back(n, std::move(groups));
    }

    std::vector<TiedList<Woman>> men(n);
    std::vector<TiedList<Man>> women(n);
    std::function<void(std::size_t, std::size_t)> pick_women = [&](std::size_t c, std::size_t positions) {
      if (positions > max_total_positions) return;
      if (c == n) {
        std::function<void(std::size_t)> pick_men = [&](std::size_t b) {
          if (b == n) {
            out.emplace_back(men, women);
            return;
          }
          for (const auto& opt : man_options[b]) {
            men[b] = opt;
            pick_men(b + 1);
          }
        };
        pick_men(0);
        return;
      }
      for (const auto& opt : woman_options[c]) {
        women[c] = opt;
        pick_women(c + 1, positions + opt.positions());
      }
    };
    pick_women(0, 0);
  }
  return out;
}

}  // namespace smg
