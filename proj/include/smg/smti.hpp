#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "smg/smg_core.hpp"
#include "smg/types.hpp"

namespace smg {

/// Preference list with ties over a subset of the opposite side.
/// Position 0 is the most preferred group.
template <class Target>
class TiedList {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  TiedList() = default;

  TiedList(std::size_t universe, std::vector<std::vector<Target>> groups)
      : groups_(std::move(groups)), rank_(universe, npos) {
    for (std::size_t pos = 0; pos < groups_.size(); ++pos) {
      if (groups_[pos].empty()) throw InputError("tied list contains an empty position");
      for (Target t : groups_[pos]) {
        check_index(t.index, universe, "list entry");
        if (rank_[t.index] != npos) throw InputError("tied list repeats an agent");
        rank_[t.index] = pos;
      }
    }
  }

  /// Strict list: one agent per position.
  static TiedList strict(std::size_t universe, const std::vector<Target>& order) {
    std::vector<std::vector<Target>> groups;
    for (Target t : order) groups.push_back({t});
    return TiedList(universe, std::move(groups));
  }

  std::size_t universe() const { return rank_.size(); }
  std::size_t positions() const { return groups_.size(); }
  const std::vector<Target>& group(std::size_t pos) const { return groups_.at(pos); }
  const std::vector<std::vector<Target>>& groups() const { return groups_; }

  bool contains(Target t) const { return t.index < rank_.size() && rank_[t.index] != npos; }

  /// Position of t (0-based); t must be on the list.
  std::size_t rank(Target t) const {
    if (!contains(t)) throw InputError("agent is not on this preference list");
    return rank_[t.index];
  }

  bool has_ties() const {
    for (const auto& g : groups_) {
      if (g.size() > 1) return true;
    }
    return false;
  }

  /// Members in list order (ties in stored order).
  std::vector<Target> members() const {
    std::vector<Target> out;
    for (const auto& g : groups_) out.insert(out.end(), g.begin(), g.end());
    return out;
  }

  /// x strictly above y. An absent y counts as worse than any listed x.
  bool prefers(Target x, std::optional<Target> y) const {
    if (!contains(x)) return false;
    if (!y || !contains(*y)) return true;
    return rank_[x.index] < rank_[y->index];
  }

  friend bool operator==(const TiedList& a, const TiedList& b) { return a.groups_ == b.groups_ && a.rank_ == b.rank_; }

 private:
  std::vector<std::vector<Target>> groups_;
  std::vector<std::size_t> rank_;
};

/// Stable marriage with ties (women only) and incomplete lists.
class SmtiInstance {
 public:
  SmtiInstance() = default;
  /// Men's lists must be strict; acceptability must be symmetric.
  SmtiInstance(std::vector<TiedList<Woman>> men_lists, std::vector<TiedList<Man>> women_lists);

  std::size_t size() const { return men_lists_.size(); }
  const TiedList<Woman>& list(Man b) const { return men_lists_.at(b.index); }
  const TiedList<Man>& list(Woman c) const { return women_lists_.at(c.index); }
  const std::vector<TiedList<Woman>>& men_lists() const { return men_lists_; }
  const std::vector<TiedList<Man>>& women_lists() const { return women_lists_; }

  bool acceptable(Man b, Woman c) const { return list(b).contains(c); }

  friend bool operator==(const SmtiInstance&, const SmtiInstance&) = default;

 private:
  std::vector<TiedList<Woman>> men_lists_;
  std::vector<TiedList<Man>> women_lists_;
};

/// A set of disjoint man-woman pairs over n men and n women.
class PartialMatching {
 public:
  PartialMatching() = default;
  PartialMatching(std::size_t n, const std::vector<ManWomanPair>& pairs);
  /// Additionally requires every pair to be acceptable in inst.
  PartialMatching(const SmtiInstance& inst, const std::vector<ManWomanPair>& pairs);

  std::size_t universe() const { return man_to_.size(); }
  std::size_t size() const;
  std::optional<Woman> partner(Man b) const { return man_to_.at(b.index); }
  std::optional<Man> partner(Woman c) const { return woman_to_.at(c.index); }
  bool contains(Man b, Woman c) const { return partner(b) == c; }

  /// Pairs ordered by man.
  std::vector<ManWomanPair> pairs() const;

  friend bool operator==(const PartialMatching& a, const PartialMatching& b) { return a.man_to_ == b.man_to_; }
  friend auto operator<=>(const PartialMatching& a, const PartialMatching& b) { return a.man_to_ <=> b.man_to_; }

 private:
  std::vector<std::optional<Woman>> man_to_;
  std::vector<std::optional<Man>> woman_to_;
};

/// Weak stability: no acceptable pair outside m where both strictly prefer
/// each other to their current partners. Unmatched agents prefer any
/// acceptable partner to being alone.
StabilityReport is_weakly_stable(const SmtiInstance& inst, const PartialMatching& m);

bool is_perfect(const PartialMatching& m, std::size_t n);

/// Adds man n and woman n. Women's relations keep "at least as much" among
/// acceptable men; the new woman's relation is empty. Unlisted women are
/// appended in ascending index order.
SmgInstance reduce_smti_to_smg(const SmtiInstance& inst);

/// Completes a perfect matching on n agents with the pair (n, n).
Matching lift_matching(const PartialMatching& m, std::size_t n);

/// Drops every pair touching the last man or the last woman.
PartialMatching restrict_matching(const Matching& m);

}  // namespace smg
