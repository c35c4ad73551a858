#pragma once

#include <cstddef>
#include <vector>

#include "smg/types.hpp"

namespace smg {

/// A woman's preference relation: a set of ordered pairs of distinct men.
/// (b, b') in the relation reads "she likes b at least as much as b'".
/// Membership of (b, b') says nothing about (b', b).
class PrefRelation {
 public:
  PrefRelation() = default;
  explicit PrefRelation(std::size_t n) : n_(n), bits_(n * n, false) {}

  std::size_t size() const { return n_; }

  bool contains(Man b, Man b2) const {
    check_index(b.index, n_, "man");
    check_index(b2.index, n_, "man");
    return bits_[b.index * n_ + b2.index];
  }

  void insert(Man b, Man b2) {
    check_index(b.index, n_, "man");
    check_index(b2.index, n_, "man");
    if (b == b2) throw InputError("preference relation may not contain a self-pair");
    bits_[b.index * n_ + b2.index] = true;
  }

  void erase(Man b, Man b2) {
    check_index(b.index, n_, "man");
    check_index(b2.index, n_, "man");
    bits_[b.index * n_ + b2.index] = false;
  }

  /// All pairs in lexicographic order.
  std::vector<std::pair<Man, Man>> pairs() const;

  bool empty() const;

  friend bool operator==(const PrefRelation&, const PrefRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

/// Stable marriage with general preferences: men rank all women strictly,
/// each woman holds an arbitrary relation over pairs of men.
class SmgInstance {
 public:
  SmgInstance() = default;
  SmgInstance(std::vector<StrictOrder<Woman>> men_prefs, std::vector<PrefRelation> women_rels);

  std::size_t size() const { return men_prefs_.size(); }
  const StrictOrder<Woman>& prefs(Man b) const { return men_prefs_.at(b.index); }
  const PrefRelation& relation(Woman c) const { return women_rels_.at(c.index); }
  const std::vector<StrictOrder<Woman>>& men_prefs() const { return men_prefs_; }
  const std::vector<PrefRelation>& women_rels() const { return women_rels_; }

  friend bool operator==(const SmgInstance&, const SmgInstance&) = default;

 private:
  std::vector<StrictOrder<Woman>> men_prefs_;
  std::vector<PrefRelation> women_rels_;
};

struct StabilityReport {
  bool stable = true;
  std::vector<ManWomanPair> blocking;  // lexicographic by (man, woman)
};

/// (b, c) blocks m iff they are not matched together, b strictly prefers c to
/// his partner, and c's partner is not related to b in R_c.
bool is_blocking_pair(const SmgInstance& inst, const Matching& m, Man b, Woman c);

/// Blocking test of the dual model: (b, c) blocks iff (b, m(c)) is in R_c.
bool is_blocking_pair_dual(const SmgInstance& inst, const Matching& m, Man b, Woman c);

StabilityReport is_stable(const SmgInstance& inst, const Matching& m);

/// Same verdict as is_stable(...).stable, stopping at the first blocking pair.
bool has_blocking_pair(const SmgInstance& inst, const Matching& m);

/// Stability under the dual blocking test.
bool is_stable_dual(const SmgInstance& inst, const Matching& m);

/// No woman relates both orientations of any pair of men.
bool is_asymmetric(const SmgInstance& inst);

/// R'_c = {(b, b') : b != b', (b', b) not in R_c}. An involution.
SmgInstance dualize(const SmgInstance& inst);

}  // namespace smg
