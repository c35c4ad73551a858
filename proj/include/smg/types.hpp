#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smg {

/// Malformed or out-of-range input (bad ids, broken permutations, invalid matchings).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but an operation's precondition does not hold
/// (e.g. LP rounding on a non-asymmetric instance).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive enumeration refused because the instance exceeds its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense, role-tagged agent index. A Man can never be passed where a Woman is expected.
template <class Tag>
struct Id {
  using tag_type = Tag;
  std::size_t index = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::size_t i) : index(i) {}

  friend constexpr auto operator<=>(Id, Id) = default;
  friend constexpr bool operator==(Id, Id) = default;
};

struct DogTag {
  static constexpr const char* prefix = "a";
};
struct ManTag {
  static constexpr const char* prefix = "b";
};
struct WomanTag {
  static constexpr const char* prefix = "c";
};

using Dog = Id<DogTag>;
using Man = Id<ManTag>;
using Woman = Id<WomanTag>;

template <class Tag>
std::ostream& operator<<(std::ostream& os, Id<Tag> id) {
  return os << Tag::prefix << (id.index + 1);
}

template <class Tag>
std::vector<Id<Tag>> all_ids(std::size_t n) {
  std::vector<Id<Tag>> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.emplace_back(i);
  return ids;
}

inline void check_index(std::size_t index, std::size_t n, const char* what) {
  if (index >= n) {
    throw InputError(std::string(what) + " index " + std::to_string(index) +
                     " out of range [0, " + std::to_string(n) + ")");
  }
}

/// A complete strict ranking of all n agents of one side, most preferred first.
template <class Target>
class StrictOrder {
 public:
  StrictOrder() = default;

  explicit StrictOrder(std::vector<Target> ranked) : ranked_(std::move(ranked)) {
    const std::size_t n = ranked_.size();
    rank_.assign(n, n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::size_t idx = ranked_[pos].index;
      if (idx >= n) throw InputError("preference order names agent outside [0, n)");
      if (rank_[idx] != n) throw InputError("preference order repeats an agent");
      rank_[idx] = pos;
    }
  }

  std::size_t size() const { return ranked_.size(); }
  const std::vector<Target>& ranked() const { return ranked_; }
  Target at(std::size_t position) const { return ranked_.at(position); }
  Target top() const { return ranked_.front(); }
  Target last() const { return ranked_.back(); }

  std::size_t rank(Target t) const {
    check_index(t.index, rank_.size(), "agent");
    return rank_[t.index];
  }

  /// x strictly above y.
  bool prefers(Target x, Target y) const { return rank(x) < rank(y); }
  /// x equal to or above y.
  bool weakly_prefers(Target x, Target y) const { return rank(x) <= rank(y); }

  friend bool operator==(const StrictOrder& a, const StrictOrder& b) { return a.ranked_ == b.ranked_; }

 private:
  std::vector<Target> ranked_;
  std::vector<std::size_t> rank_;
};

/// A perfect bijection between two agent sets of equal size.
template <class From, class To>
class Bijection {
 public:
  Bijection() = default;

  explicit Bijection(std::vector<To> forward) : forward_(std::move(forward)) {
    const std::size_t n = forward_.size();
    std::vector<bool> seen(n, false);
    backward_.assign(n, From{});
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = forward_[i].index;
      if (j >= n) throw InputError("matching partner index out of range");
      if (seen[j]) throw InputError("matching is not a bijection: partner used twice");
      seen[j] = true;
      backward_[j] = From{i};
    }
  }

  /// Builds from an explicit list of pairs; every agent must occur exactly once.
  static Bijection from_pairs(std::size_t n, const std::vector<std::pair<From, To>>& pairs) {
    if (pairs.size() != n) throw InputError("matching must contain exactly n pairs");
    std::vector<std::optional<To>> slots(n);
    for (const auto& [from, to] : pairs) {
      check_index(from.index, n, "matching");
      check_index(to.index, n, "matching");
      if (slots[from.index]) throw InputError("matching assigns an agent twice");
      slots[from.index] = to;
    }
    std::vector<To> forward;
    forward.reserve(n);
    for (const auto& s : slots) forward.push_back(*s);
    return Bijection(std::move(forward));
  }

  static Bijection identity(std::size_t n) {
    std::vector<To> forward;
    for (std::size_t i = 0; i < n; ++i) forward.emplace_back(i);
    return Bijection(std::move(forward));
  }

  std::size_t size() const { return forward_.size(); }

  To partner(From f) const {
    check_index(f.index, forward_.size(), "matching");
    return forward_[f.index];
  }
  From partner(To t) const {
    check_index(t.index, backward_.size(), "matching");
    return backward_[t.index];
  }

  bool contains(From f, To t) const { return partner(f) == t; }

  std::vector<std::pair<From, To>> pairs() const {
    std::vector<std::pair<From, To>> out;
    out.reserve(forward_.size());
    for (std::size_t i = 0; i < forward_.size(); ++i) out.emplace_back(From{i}, forward_[i]);
    return out;
  }

  const std::vector<To>& forward() const { return forward_; }

  friend bool operator==(const Bijection& a, const Bijection& b) { return a.forward_ == b.forward_; }
  friend auto operator<=>(const Bijection& a, const Bijection& b) { return a.forward_ <=> b.forward_; }

 private:
  std::vector<To> forward_;
  std::vector<From> backward_;
};

/// Perfect matching of men to women.
using Matching = Bijection<Man, Woman>;
/// The fixed dogs-to-men matching of a stable extension instance.
using FixedMatching = Bijection<Dog, Man>;

using ManWomanPair = std::pair<Man, Woman>;

}  // namespace smg
