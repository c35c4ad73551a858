#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "smg/smg_core.hpp"

namespace smg {

enum class DaVerdict {
  kFound,
  /// Only reported for asymmetric instances, where the algorithm is complete.
  kNoStableMatching,
  /// Nothing found on a non-asymmetric instance; existence is undecided.
  kNotFound,
};

/// One round: every single man with a non-empty list proposes once, then each
/// woman's engaged set is recomputed from everyone who has ever proposed to her.
struct DaRound {
  std::vector<ManWomanPair> proposals;
  /// Proposals of this round that the woman accepted.
  std::vector<ManWomanPair> accepted;
  /// Proposals of this round that the woman refused.
  std::vector<ManWomanPair> rejected;
  /// Previously engaged men who fail the acceptance test against a newer proposer.
  std::vector<ManWomanPair> released;
};

struct DaResult {
  std::optional<Matching> matching;
  DaVerdict verdict = DaVerdict::kNotFound;
  bool asymmetric = false;
  std::size_t proposals = 0;
  std::vector<DaRound> rounds;
  /// Every (b, c) where b struck c from his list.
  std::vector<ManWomanPair> rejections;
  /// Final engaged set of each woman, ascending by man.
  std::vector<std::vector<Man>> engaged;
  /// Largest engaged set any woman held after any round.
  std::size_t max_engaged = 0;
};

/// Man-proposing deferred acceptance for general preferences. A proposer b is
/// engaged to c while (b, b') is in R_c for every other man b' that has
/// proposed to c so far. Returned matchings are always stable; an empty
/// result proves non-existence only when the instance is asymmetric.
DaResult solve_da(const SmgInstance& inst);

const char* to_string(DaVerdict v);

}  // namespace smg
