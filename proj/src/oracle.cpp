#include "smg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

namespace smg {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::size_t>::max() / i) return std::numeric_limits<std::size_t>::max();
    f *= i;
  }
  return f;
}

namespace {

void check_budget(std::size_t n, std::size_t candidates, const EnumerationBudget& budget) {
  if (n > budget.max_n) {
    throw BudgetExceeded("instance size " + std::to_string(n) + " exceeds enumeration budget max_n=" +
                         std::to_string(budget.max_n));
  }
  if (candidates > budget.max_candidates) {
    throw BudgetExceeded(std::to_string(candidates) + " candidates exceed enumeration budget max_candidates=" +
                         std::to_string(budget.max_candidates));
  }
}

/// Visits all permutations of [0, n) in lexicographic order, keeping those the
/// predicate accepts. Work is split by first entry; results are concatenated
/// in first-entry order, which preserves the lexicographic order.
std::vector<std::vector<std::size_t>> filter_permutations(
    std::size_t n, std::size_t threads, const std::function<bool(const std::vector<std::size_t>&)>& keep) {
  if (n == 0) {
    std::vector<std::size_t> empty;
    if (keep(empty)) return {empty};
    return {};
  }
  std::vector<std::vector<std::vector<std::size_t>>> by_first(n);
  auto work = [&](std::size_t first) {
    std::vector<std::size_t> perm(n);
    perm[0] = first;
    std::size_t next = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (next == first) ++next;
      perm[i] = next++;
    }
    do {
      if (keep(perm)) by_first[first].push_back(perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
  if (workers == 1) {
    for (std::size_t f = 0; f < n; ++f) work(f);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t f = w; f < n; f += workers) work(f);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<std::vector<std::size_t>> out;
  for (auto& bucket : by_first) {
    for (auto& p : bucket) out.push_back(std::move(p));
  }
  return out;
}

template <class To>
std::vector<To> as_ids(const std::vector<std::size_t>& perm) {
  std::vector<To> out;
  out.reserve(perm.size());
  for (std::size_t i : perm) out.emplace_back(i);
  return out;
}

}  // namespace

std::vector<Matching> enumerate_stable_smg(const SmgInstance& inst, const EnumerationBudget& budget) {
  const std::size_t n = inst.size();
  check_budget(n, factorial(n), budget);
  auto perms = filter_permutations(n, budget.threads, [&](const std::vector<std::size_t>& perm) {
    return !has_blocking_pair(inst, Matching(as_ids<Woman>(perm)));
  });
  std::vector<Matching> out;
  for (const auto& p : perms) out.emplace_back(as_ids<Woman>(p));
  return out;
}

std::vector<PartialMatching> enumerate_perfect_weakly_stable_smti(const SmtiInstance& inst,
                                                                  const EnumerationBudget& budget) {
  const std::size_t n = inst.size();
  check_budget(n, factorial(n), budget);
  auto to_pairs = [](const std::vector<std::size_t>& perm) {
    std::vector<ManWomanPair> pairs;
    for (std::size_t b = 0; b < perm.size(); ++b) pairs.emplace_back(Man{b}, Woman{perm[b]});
    return pairs;
  };
  auto perms = filter_permutations(n, budget.threads, [&](const std::vector<std::size_t>& perm) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!inst.acceptable(Man{b}, Woman{perm[b]})) return false;
    }
    return is_weakly_stable(inst, PartialMatching(n, to_pairs(perm))).stable;
  });
  std::vector<PartialMatching> out;
  for (const auto& p : perms) out.emplace_back(inst, to_pairs(p));
  return out;
}

std::vector<Matching> enumerate_stable_extensions(const SeInstance& se, const EnumerationBudget& budget) {
  const std::size_t n = se.size();
  check_budget(n, factorial(n), budget);
  auto perms = filter_permutations(n, budget.threads, [&](const std::vector<std::size_t>& perm) {
    return !find_blocking_triple(se.cyclic, compose(se.fixed, Matching(as_ids<Woman>(perm))));
  });
  std::vector<Matching> out;
  for (const auto& p : perms) out.emplace_back(as_ids<Woman>(p));
  return out;
}

std::vector<ThreeDMatching> enumerate_stable_3d(const CyclicInstance& inst, const EnumerationBudget& budget) {
  const std::size_t n = inst.size();
  const std::size_t f = factorial(n);
  const std::size_t candidates = f > std::numeric_limits<std::size_t>::max() / std::max<std::size_t>(f, 1)
                                     ? std::numeric_limits<std::size_t>::max()
                                     : f * f;
  check_budget(n, candidates, budget);

  std::vector<ThreeDMatching> out;
  std::vector<std::size_t> dog_to_man(n);
  std::iota(dog_to_man.begin(), dog_to_man.end(), 0);
  do {
    const FixedMatching fixed(as_ids<Man>(dog_to_man));
    for (const auto& p : filter_permutations(n, budget.threads, [&](const std::vector<std::size_t>& perm) {
           return !find_blocking_triple(inst, compose(fixed, Matching(as_ids<Woman>(perm))));
         })) {
      out.push_back(compose(fixed, Matching(as_ids<Woman>(p))));
    }
  } while (std::next_permutation(dog_to_man.begin(), dog_to_man.end()));
  return out;
}

}  // namespace smg
