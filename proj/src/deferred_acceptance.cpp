#include "smg/deferred_acceptance.hpp"

#include <algorithm>

namespace smg {

namespace {

std::vector<Man> engaged_set(const PrefRelation& rel, const std::vector<Man>& proposers) {
  std::vector<Man> out;
  for (Man x : proposers) {
    bool accept = true;
    for (Man y : proposers) {
      if (y != x && !rel.contains(x, y)) {
        accept = false;
        break;
      }
    }
    if (accept) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DaResult solve_da(const SmgInstance& inst) {
  const std::size_t n = inst.size();
  DaResult result;
  result.asymmetric = is_asymmetric(inst);

  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::optional<Woman>> engaged_to(n);
  std::vector<std::vector<Man>> proposers(n);
  std::vector<std::vector<Man>> engaged(n);

  auto strike = [&](Man b, Woman c) {
    engaged_to[b.index].reset();
    ++cursor[b.index];
    result.rejections.emplace_back(b, c);
  };

  while (true) {
    DaRound round;
    for (std::size_t b = 0; b < n; ++b) {
      if (!engaged_to[b] && cursor[b] < n) {
        const Woman c = inst.prefs(Man{b}).at(cursor[b]);
        round.proposals.emplace_back(Man{b}, c);
        proposers[c.index].push_back(Man{b});
      }
    }
    if (round.proposals.empty()) break;
    result.proposals += round.proposals.size();

    std::vector<bool> touched(n, false);
    for (const auto& p : round.proposals) touched[p.second.index] = true;

    for (std::size_t ci = 0; ci < n; ++ci) {
      if (!touched[ci]) continue;
      const Woman c{ci};
      std::vector<Man> next = engaged_set(inst.relation(c), proposers[ci]);
      auto in_next = [&](Man x) { return std::binary_search(next.begin(), next.end(), x); };

      for (Man old : engaged[ci]) {
        if (!in_next(old)) {
          round.released.emplace_back(old, c);
          strike(old, c);
        }
      }
      for (const auto& [b, target] : round.proposals) {
        if (target != c) continue;
        if (in_next(b)) {
          round.accepted.emplace_back(b, c);
          engaged_to[b.index] = c;
        } else {
          round.rejected.emplace_back(b, c);
          strike(b, c);
        }
      }
      engaged[ci] = std::move(next);
      result.max_engaged = std::max(result.max_engaged, engaged[ci].size());
    }
    result.rounds.push_back(std::move(round));
  }

  bool perfect = true;
  for (std::size_t b = 0; b < n && perfect; ++b) perfect = engaged_to[b].has_value();
  for (std::size_t c = 0; c < n && perfect; ++c) perfect = engaged[c].size() == 1;

  if (perfect) {
    std::vector<Woman> forward;
    forward.reserve(n);
    for (std::size_t b = 0; b < n; ++b) forward.push_back(*engaged_to[b]);
    result.matching = Matching(std::move(forward));
    result.verdict = DaVerdict::kFound;
  } else {
    result.verdict = result.asymmetric ? DaVerdict::kNoStableMatching : DaVerdict::kNotFound;
  }
  result.engaged = std::move(engaged);
  return result;
}

const char* to_string(DaVerdict v) {
  switch (v) {
    case DaVerdict::kFound:
      return "stable-matching-found";
    case DaVerdict::kNoStableMatching:
      return "no-stable-matching";
    case DaVerdict::kNotFound:
      return "not-found";
  }
  return "unknown";
}

}  // namespace smg
