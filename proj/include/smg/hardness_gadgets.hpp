#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smg/cyclic3d.hpp"
#include "smg/oracle.hpp"
#include "smg/smti.hpp"

namespace smg {

/// Index map of the SMTI-to-stable-extension gadget. Dogs, men and women use
/// the same index for corresponding agents:
///   [0, n)               original agents a_i, b_i, c_i
///   n + offset(i) + j    tie agents a_{i,j}, b_{i,j}, c_{i,j} (one per position j of woman i)
///   n + T + k - 1        extra agents a_{n+k}, b_{n+k}, c_{n+k}, k = 1..3
/// where T is the total number of positions over all women's lists.
class GadgetLayout {
 public:
  enum class Role { kOriginal, kTie, kExtra };
  struct Slot {
    Role role;
    std::size_t i;  // original index, woman index for tie agents, or k for extras
    std::size_t j;  // position for tie agents
  };

  GadgetLayout() = default;
  explicit GadgetLayout(const SmtiInstance& inst);

  std::size_t original_size() const { return n_; }
  std::size_t size() const { return n_ + total_positions_ + 3; }
  std::size_t total_positions() const { return total_positions_; }
  /// t_i for each original woman.
  std::size_t positions(std::size_t woman) const { return groups_.at(woman).size(); }
  /// P(c_i)_j: the men tied at position j of woman i.
  const std::vector<Man>& tie_group(std::size_t woman, std::size_t position) const;

  std::size_t tie_agent(std::size_t woman, std::size_t position) const;
  std::size_t extra(std::size_t k) const;
  Slot slot(std::size_t index) const;

  /// A_b the construction is designed to produce, ascending.
  std::vector<Dog> expected_Ab(Man b) const;

 private:
  std::size_t n_ = 0;
  std::size_t total_positions_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<std::vector<Man>>> groups_;
  std::vector<std::vector<std::size_t>> rank_in_;  // rank_in_[woman][man] or npos
};

struct SeGadget {
  SeInstance se;
  GadgetLayout layout;
};

/// Builds the stable-extension instance whose stable extensions correspond to
/// perfect weakly stable matchings of inst. Unconstrained list segments are
/// filled in ascending index order.
SeGadget build_se_gadget(const SmtiInstance& inst);

struct GadgetReport {
  std::vector<std::string> violations;
  std::vector<Matching> extensions;

  bool ok() const { return violations.empty(); }
};

/// Checks the preference table, the fixed matching, the A_b sets, the induced
/// relations on original women, and the structure of every stable extension
/// found by exhaustive search.
GadgetReport validate_gadget(const SmtiInstance& inst, const SeInstance& se, const GadgetLayout& layout,
                             const EnumerationBudget& budget);

/// Extends a perfect weakly stable matching: b_{i,j} with c_{i,j}, b_{n+k} with c_{n+k}.
Matching lift_solution(const SmtiInstance& inst, const GadgetLayout& layout, const PartialMatching& m);

/// Keeps the pairs between original men and original women.
PartialMatching restrict_solution(const GadgetLayout& layout, const Matching& m);

}  // namespace smg
