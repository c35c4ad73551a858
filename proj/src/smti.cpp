#include "smg/smti.hpp"

#include <algorithm>

namespace smg {

SmtiInstance::SmtiInstance(std::vector<TiedList<Woman>> men_lists, std::vector<TiedList<Man>> women_lists)
    : men_lists_(std::move(men_lists)), women_lists_(std::move(women_lists)) {
  const std::size_t n = men_lists_.size();
  if (women_lists_.size() != n) throw InputError("SMTI instance needs one list per woman");
  for (const auto& l : men_lists_) {
    if (l.universe() != n) throw InputError("man's list must range over n women");
    if (l.has_ties()) throw InputError("ties are only allowed in women's lists");
  }
  for (const auto& l : women_lists_) {
    if (l.universe() != n) throw InputError("woman's list must range over n men");
  }
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      if (men_lists_[b].contains(Woman{c}) != women_lists_[c].contains(Man{b})) {
        throw InputError("acceptability is not symmetric between man " + std::to_string(b + 1) + " and woman " +
                         std::to_string(c + 1));
      }
    }
  }
}

PartialMatching::PartialMatching(std::size_t n, const std::vector<ManWomanPair>& pairs)
    : man_to_(n), woman_to_(n) {
  for (const auto& [b, c] : pairs) {
    check_index(b.index, n, "man");
    check_index(c.index, n, "woman");
    if (man_to_[b.index] || woman_to_[c.index]) throw InputError("partial matching uses an agent twice");
    man_to_[b.index] = c;
    woman_to_[c.index] = b;
  }
}

PartialMatching::PartialMatching(const SmtiInstance& inst, const std::vector<ManWomanPair>& pairs)
    : PartialMatching(inst.size(), pairs) {
  for (const auto& [b, c] : pairs) {
    if (!inst.acceptable(b, c)) throw InputError("partial matching uses an unacceptable pair");
  }
}

std::size_t PartialMatching::size() const {
  return static_cast<std::size_t>(std::count_if(man_to_.begin(), man_to_.end(), [](const auto& w) { return w.has_value(); }));
}

std::vector<ManWomanPair> PartialMatching::pairs() const {
  std::vector<ManWomanPair> out;
  for (std::size_t b = 0; b < man_to_.size(); ++b) {
    if (man_to_[b]) out.emplace_back(Man{b}, *man_to_[b]);
  }
  return out;
}

StabilityReport is_weakly_stable(const SmtiInstance& inst, const PartialMatching& m) {
  const std::size_t n = inst.size();
  if (m.universe() != n) throw InputError("matching size differs from instance size");
  for (const auto& [b, c] : m.pairs()) {
    if (!inst.acceptable(b, c)) throw InputError("matching uses an unacceptable pair");
  }
  StabilityReport report;
  for (std::size_t bi = 0; bi < n; ++bi) {
    const Man b{bi};
    for (Woman c : inst.list(b).members()) {
      if (m.contains(b, c)) continue;
      if (inst.list(b).prefers(c, m.partner(b)) && inst.list(c).prefers(b, m.partner(c))) {
        report.blocking.emplace_back(b, c);
      }
    }
  }
  std::sort(report.blocking.begin(), report.blocking.end());
  report.stable = report.blocking.empty();
  return report;
}

bool is_perfect(const PartialMatching& m, std::size_t n) { return m.size() == n; }

SmgInstance reduce_smti_to_smg(const SmtiInstance& inst) {
  const std::size_t n = inst.size();
  const std::size_t big = n + 1;
  const Woman extra_woman{n};

  std::vector<StrictOrder<Woman>> men_prefs;
  men_prefs.reserve(big);
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<Woman> order = inst.list(Man{b}).members();
    order.push_back(extra_woman);
    for (std::size_t c = 0; c < n; ++c) {
      if (!inst.list(Man{b}).contains(Woman{c})) order.emplace_back(c);
    }
    men_prefs.emplace_back(std::move(order));
  }
  std::vector<Woman> extra_order{extra_woman};
  for (std::size_t c = 0; c < n; ++c) extra_order.emplace_back(c);
  men_prefs.emplace_back(std::move(extra_order));

  std::vector<PrefRelation> rels;
  rels.reserve(big);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& list = inst.list(Woman{c});
    PrefRelation rel(big);
    for (Man b : list.members()) {
      for (Man b2 : list.members()) {
        if (b != b2 && list.rank(b) <= list.rank(b2)) rel.insert(b, b2);
      }
    }
    rels.push_back(std::move(rel));
  }
  rels.emplace_back(big);
  return SmgInstance(std::move(men_prefs), std::move(rels));
}

Matching lift_matching(const PartialMatching& m, std::size_t n) {
  if (m.universe() != n) throw InputError("matching size differs from n");
  if (!is_perfect(m, n)) throw InputError("only a perfect matching can be lifted");
  std::vector<Woman> forward;
  forward.reserve(n + 1);
  for (std::size_t b = 0; b < n; ++b) forward.push_back(*m.partner(Man{b}));
  forward.emplace_back(n);
  return Matching(std::move(forward));
}

PartialMatching restrict_matching(const Matching& m) {
  if (m.size() == 0) throw InputError("cannot restrict an empty matching");
  const std::size_t n = m.size() - 1;
  std::vector<ManWomanPair> kept;
  for (const auto& [b, c] : m.pairs()) {
    if (b.index < n && c.index < n) kept.emplace_back(b, c);
  }
  return PartialMatching(n, kept);
}

}  // namespace smg
