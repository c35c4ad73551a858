#pragma once

#include <cstddef>
#include <vector>

#include "smg/cyclic3d.hpp"
#include "smg/smg_core.hpp"
#include "smg/smti.hpp"

namespace smg {

/// Limits for exhaustive enumeration. Instances past either bound are refused
/// with BudgetExceeded.
struct EnumerationBudget {
  std::size_t max_n = 8;
  std::size_t max_candidates = 40320;
  /// Candidate permutations are split by their first entry across this many workers.
  std::size_t threads = 1;

  static EnumerationBudget two_sided() { return {}; }
  static EnumerationBudget extension() { return {5, 120, 1}; }
};

/// n!, saturating at SIZE_MAX.
std::size_t factorial(std::size_t n);

/// Every stable perfect matching, lexicographic by the men's partners.
std::vector<Matching> enumerate_stable_smg(const SmgInstance& inst,
                                           const EnumerationBudget& budget = EnumerationBudget::two_sided());

/// Every weakly stable matching of size n.
std::vector<PartialMatching> enumerate_perfect_weakly_stable_smti(
    const SmtiInstance& inst, const EnumerationBudget& budget = EnumerationBudget::two_sided());

/// Every men-women matching N whose composition with the fixed matching is 3D stable.
std::vector<Matching> enumerate_stable_extensions(const SeInstance& se,
                                                  const EnumerationBudget& budget = EnumerationBudget::extension());

/// Every stable 3D matching; (n!)^2 candidates.
std::vector<ThreeDMatching> enumerate_stable_3d(const CyclicInstance& inst,
                                                const EnumerationBudget& budget = EnumerationBudget::extension());

}  // namespace smg
