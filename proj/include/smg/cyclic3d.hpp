#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "smg/smg_core.hpp"

namespace smg {

/// Three-sided instance with cyclic strict preferences:
/// dogs rank men, men rank women, women rank dogs.
class CyclicInstance {
 public:
  CyclicInstance() = default;
  CyclicInstance(std::vector<StrictOrder<Man>> dog_prefs, std::vector<StrictOrder<Woman>> man_prefs,
                 std::vector<StrictOrder<Dog>> woman_prefs);

  std::size_t size() const { return dog_prefs_.size(); }
  const StrictOrder<Man>& prefs(Dog a) const { return dog_prefs_.at(a.index); }
  const StrictOrder<Woman>& prefs(Man b) const { return man_prefs_.at(b.index); }
  const StrictOrder<Dog>& prefs(Woman c) const { return woman_prefs_.at(c.index); }
  const std::vector<StrictOrder<Man>>& dog_prefs() const { return dog_prefs_; }
  const std::vector<StrictOrder<Woman>>& man_prefs() const { return man_prefs_; }
  const std::vector<StrictOrder<Dog>>& woman_prefs() const { return woman_prefs_; }

  friend bool operator==(const CyclicInstance&, const CyclicInstance&) = default;

 private:
  std::vector<StrictOrder<Man>> dog_prefs_;
  std::vector<StrictOrder<Woman>> man_prefs_;
  std::vector<StrictOrder<Dog>> woman_prefs_;
};

/// Stable extension instance: a cyclic instance plus a fixed dogs-to-men matching.
struct SeInstance {
  CyclicInstance cyclic;
  FixedMatching fixed;

  SeInstance() = default;
  SeInstance(CyclicInstance inst, FixedMatching m);

  std::size_t size() const { return cyclic.size(); }
  friend bool operator==(const SeInstance&, const SeInstance&) = default;
};

struct Triple {
  Dog dog;
  Man man;
  Woman woman;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// n disjoint triples covering every agent exactly once.
class ThreeDMatching {
 public:
  ThreeDMatching() = default;
  ThreeDMatching(std::size_t n, std::vector<Triple> triples);

  std::size_t size() const { return triples_.size(); }
  /// Triples sorted by dog.
  const std::vector<Triple>& triples() const { return triples_; }

  Man man_of(Dog a) const { return triples_.at(a.index).man; }
  Woman woman_of(Man b) const { return triples_[dog_of_man_.at(b.index)].woman; }
  Dog dog_of(Woman c) const { return triples_[dog_of_woman_.at(c.index)].dog; }
  bool contains(const Triple& t) const;

  friend bool operator==(const ThreeDMatching& a, const ThreeDMatching& b) { return a.triples_ == b.triples_; }

 private:
  std::vector<Triple> triples_;
  std::vector<std::size_t> dog_of_man_;
  std::vector<std::size_t> dog_of_woman_;
};

struct ThreeDStabilityReport {
  bool stable = true;
  std::vector<Triple> blocking;  // lexicographic by (dog, man, woman)
};

/// (a, b, c) in M∘N iff (a, b) in M and (b, c) in N.
ThreeDMatching compose(const FixedMatching& m, const Matching& n);

/// (a, b, c) outside mm where every member strictly prefers the next member
/// in the cycle to its current partner.
bool is_blocking_triple(const CyclicInstance& inst, const ThreeDMatching& mm, Dog a, Man b, Woman c);

/// Scans all n^3 triples.
ThreeDStabilityReport is_3d_stable(const CyclicInstance& inst, const ThreeDMatching& mm);

/// First blocking triple in lexicographic order, if any.
std::optional<Triple> find_blocking_triple(const CyclicInstance& inst, const ThreeDMatching& mm);

/// Dogs that strictly prefer b to their fixed partner, ascending.
std::vector<Dog> compute_Ab(const SeInstance& se, Man b);

/// c's favourite dog in A_b, or c's last-ranked dog when A_b is empty.
Dog compute_alpha(const SeInstance& se, Man b, Woman c);

/// Men's orders copied; R_c = {(b, b') : b != b', M(b) weakly above alpha(b', c) for c}.
SmgInstance reduce_se_to_smg(const SeInstance& se);

}  // namespace smg
