#pragma once
// Brute-force reference checks written directly from the definitions.
// They read instance data only and never call the library's predicates.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "smg/cyclic3d.hpp"
#include "smg/smg_core.hpp"
#include "smg/smti.hpp"

namespace ref {

using smg::Dog;
using smg::Man;
using smg::Woman;

/// perm[i] = partner index of agent i.
using Perm = std::vector<std::size_t>;

inline std::vector<Perm> all_perms(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm inverse(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

template <class T>
std::vector<std::size_t> position_of(const smg::StrictOrder<T>& order) {
  std::vector<std::size_t> pos(order.ranked().size());
  for (std::size_t k = 0; k < order.ranked().size(); ++k) pos[order.ranked()[k].index] = k;
  return pos;
}

inline smg::Matching to_matching(const Perm& wife) {
  std::vector<Woman> f;
  for (auto c : wife) f.emplace_back(c);
  return smg::Matching(f);
}

inline Perm to_perm(const smg::Matching& m) {
  Perm p;
  for (auto c : m.forward()) p.push_back(c.index);
  return p;
}

// ---- two-sided, general preferences

inline bool blocks(const smg::SmgInstance& inst, const Perm& wife, std::size_t b, std::size_t c) {
  if (wife[b] == c) return false;
  const auto pos = position_of(inst.prefs(Man{b}));
  if (pos[c] >= pos[wife[b]]) return false;
  const std::size_t husband = inverse(wife)[c];
  return !inst.relation(Woman{c}).contains(Man{husband}, Man{b});
}

inline std::vector<std::pair<std::size_t, std::size_t>> blocking_pairs(const smg::SmgInstance& inst, const Perm& wife) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < wife.size(); ++b) {
    for (std::size_t c = 0; c < wife.size(); ++c) {
      if (blocks(inst, wife, b, c)) out.emplace_back(b, c);
    }
  }
  return out;
}

inline bool stable(const smg::SmgInstance& inst, const Perm& wife) { return blocking_pairs(inst, wife).empty(); }

inline std::vector<Perm> stable_matchings(const smg::SmgInstance& inst) {
  std::vector<Perm> out;
  for (const auto& p : all_perms(inst.size())) {
    if (stable(inst, p)) out.push_back(p);
  }
  return out;
}

/// Blocking under the alternative test: (b, N(c)) in R_c.
inline bool stable_dual(const smg::SmgInstance& inst, const Perm& wife) {
  const Perm husband = inverse(wife);
  for (std::size_t b = 0; b < wife.size(); ++b) {
    const auto pos = position_of(inst.prefs(Man{b}));
    for (std::size_t c = 0; c < wife.size(); ++c) {
      if (wife[b] == c || pos[c] >= pos[wife[b]]) continue;
      if (inst.relation(Woman{c}).contains(Man{b}, Man{husband[c]})) return false;
    }
  }
  return true;
}

// ---- ties and incomplete lists

/// Position of x in a tied list, or nullopt when absent.
template <class T>
std::optional<std::size_t> tied_position(const smg::TiedList<T>& list, T x) {
  for (std::size_t g = 0; g < list.groups().size(); ++g) {
    for (T y : list.groups()[g]) {
      if (y == x) return g;
    }
  }
  return std::nullopt;
}

/// Strictly better than the current partner; being alone is worst.
template <class T>
bool strictly_better(const smg::TiedList<T>& list, T x, std::optional<T> current) {
  const auto px = tied_position(list, x);
  if (!px) return false;
  if (!current) return true;
  const auto pc = tied_position(list, *current);
  return !pc || *px < *pc;
}

/// Partial matching as man -> optional woman.
using PartialPerm = std::vector<std::optional<std::size_t>>;

inline bool weakly_stable(const smg::SmtiInstance& inst, const PartialPerm& wife) {
  const std::size_t n = inst.size();
  std::vector<std::optional<std::size_t>> husband(n);
  for (std::size_t b = 0; b < n; ++b) {
    if (!wife[b]) continue;
    if (!tied_position(inst.list(Man{b}), Woman{*wife[b]})) return false;
    husband[*wife[b]] = b;
  }
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      if (wife[b] == c) continue;
      if (!tied_position(inst.list(Man{b}), Woman{c}) || !tied_position(inst.list(Woman{c}), Man{b})) continue;
      std::optional<Woman> mine;
      if (wife[b]) mine = Woman{*wife[b]};
      std::optional<Man> hers;
      if (husband[c]) hers = Man{*husband[c]};
      if (strictly_better(inst.list(Man{b}), Woman{c}, mine) && strictly_better(inst.list(Woman{c}), Man{b}, hers)) {
        return false;
      }
    }
  }
  return true;
}

inline PartialPerm as_partial(const Perm& p) {
  PartialPerm out;
  for (auto c : p) out.emplace_back(c);
  return out;
}

inline std::vector<Perm> perfect_weakly_stable(const smg::SmtiInstance& inst) {
  std::vector<Perm> out;
  for (const auto& p : all_perms(inst.size())) {
    if (weakly_stable(inst, as_partial(p))) out.push_back(p);
  }
  return out;
}

/// Every partial matching (not necessarily acceptable) on n men and n women.
inline std::vector<PartialPerm> all_partial(std::size_t n) {
  std::vector<PartialPerm> out;
  PartialPerm cur(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == n) {
      out.push_back(cur);
      return;
    }
    cur[b].reset();
    self(self, b + 1);
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      used[c] = true;
      cur[b] = c;
      self(self, b + 1);
      used[c] = false;
    }
    cur[b].reset();
  };
  rec(rec, 0);
  return out;
}

// ---- three-sided, cyclic

/// man_of[a] from the fixed matching; wife[b] from N.
inline bool stable_3d(const smg::CyclicInstance& inst, const Perm& man_of, const Perm& wife) {
  const std::size_t n = man_of.size();
  const Perm dog_of_man = inverse(man_of);
  const Perm husband = inverse(wife);
  for (std::size_t a = 0; a < n; ++a) {
    const auto pa = position_of(inst.prefs(Dog{a}));
    for (std::size_t b = 0; b < n; ++b) {
      if (pa[b] >= pa[man_of[a]]) continue;
      const auto pb = position_of(inst.prefs(Man{b}));
      for (std::size_t c = 0; c < n; ++c) {
        if (pb[c] >= pb[wife[b]]) continue;
        const auto pc = position_of(inst.prefs(Woman{c}));
        if (pc[a] < pc[dog_of_man[husband[c]]]) return false;
      }
    }
  }
  return true;
}

inline Perm fixed_perm(const smg::FixedMatching& m) {
  Perm p;
  for (auto b : m.forward()) p.push_back(b.index);
  return p;
}

/// Dogs that strictly prefer b to their fixed partner.
inline std::vector<std::size_t> dogs_preferring(const smg::SeInstance& se, std::size_t b) {
  const Perm man_of = fixed_perm(se.fixed);
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < se.size(); ++a) {
    const auto pa = position_of(se.cyclic.prefs(Dog{a}));
    if (pa[b] < pa[man_of[a]]) out.push_back(a);
  }
  return out;
}

inline std::size_t favourite_dog(const smg::SeInstance& se, std::size_t b, std::size_t c) {
  const auto& ranked = se.cyclic.prefs(Woman{c}).ranked();
  const auto pool = dogs_preferring(se, b);
  for (auto a : ranked) {
    if (std::find(pool.begin(), pool.end(), a.index) != pool.end()) return a.index;
  }
  return ranked.back().index;
}

}  // namespace ref
