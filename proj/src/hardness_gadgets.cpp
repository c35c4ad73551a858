#include "smg/hardness_gadgets.hpp"

#include <algorithm>
#include <set>

namespace smg {

namespace {

constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

/// prefix, then every unlisted index ascending, then suffix.
template <class T>
StrictOrder<T> complete_order(std::size_t size, const std::vector<std::size_t>& prefix,
                              const std::vector<std::size_t>& suffix = {}) {
  std::vector<bool> used(size, false);
  for (std::size_t i : prefix) used.at(i) = true;
  for (std::size_t i : suffix) used.at(i) = true;
  std::vector<T> order;
  order.reserve(size);
  for (std::size_t i : prefix) order.emplace_back(i);
  for (std::size_t i = 0; i < size; ++i) {
    if (!used[i]) order.emplace_back(i);
  }
  for (std::size_t i : suffix) order.emplace_back(i);
  return StrictOrder<T>(std::move(order));
}

std::string agent_name(const GadgetLayout& layout, const char* prefix, std::size_t index) {
  const auto slot = layout.slot(index);
  switch (slot.role) {
    case GadgetLayout::Role::kOriginal:
      return std::string(prefix) + std::to_string(slot.i + 1);
    case GadgetLayout::Role::kTie:
      return std::string(prefix) + "(" + std::to_string(slot.i + 1) + "," + std::to_string(slot.j + 1) + ")";
    case GadgetLayout::Role::kExtra:
      return std::string(prefix) + "(n+" + std::to_string(slot.i) + ")";
  }
  return prefix;
}

template <class T>
std::vector<std::size_t> indices(const std::vector<T>& ids) {
  std::vector<std::size_t> out;
  for (const auto& id : ids) out.push_back(id.index);
  return out;
}

}  // namespace

GadgetLayout::GadgetLayout(const SmtiInstance& inst) : n_(inst.size()) {
  offsets_.reserve(n_);
  rank_in_.assign(n_, std::vector<std::size_t>(n_, kAbsent));
  for (std::size_t c = 0; c < n_; ++c) {
    offsets_.push_back(total_positions_);
    const auto& list = inst.list(Woman{c});
    groups_.push_back(list.groups());
    for (std::size_t j = 0; j < list.positions(); ++j) {
      for (Man b : list.group(j)) rank_in_[c][b.index] = j;
    }
    total_positions_ += list.positions();
  }
}

const std::vector<Man>& GadgetLayout::tie_group(std::size_t woman, std::size_t position) const {
  return groups_.at(woman).at(position);
}

std::size_t GadgetLayout::tie_agent(std::size_t woman, std::size_t position) const {
  if (woman >= n_ || position >= groups_[woman].size()) throw InputError("no such tie agent in gadget");
  return n_ + offsets_[woman] + position;
}

std::size_t GadgetLayout::extra(std::size_t k) const {
  if (k < 1 || k > 3) throw InputError("gadget extra agents are numbered 1..3");
  return n_ + total_positions_ + k - 1;
}

GadgetLayout::Slot GadgetLayout::slot(std::size_t index) const {
  check_index(index, size(), "gadget agent");
  if (index < n_) return {Role::kOriginal, index, 0};
  if (index >= n_ + total_positions_) return {Role::kExtra, index - n_ - total_positions_ + 1, 0};
  const std::size_t local = index - n_;
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), local);
  // offsets_ may repeat for women with empty lists; the last match owns the slot.
  const std::size_t woman = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {Role::kTie, woman, local - offsets_[woman]};
}

std::vector<Dog> GadgetLayout::expected_Ab(Man b) const {
  check_index(b.index, size(), "gadget man");
  if (b.index == extra(2)) return {Dog{extra(3)}};
  std::vector<Dog> out;
  if (b.index < n_) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (rank_in_[c][b.index] != kAbsent) out.emplace_back(tie_agent(c, rank_in_[c][b.index]));
    }
  }
  out.emplace_back(extra(2));
  std::sort(out.begin(), out.end());
  return out;
}

SeGadget build_se_gadget(const SmtiInstance& inst) {
  GadgetLayout layout(inst);
  const std::size_t n = inst.size();
  const std::size_t size = layout.size();
  const std::size_t x1 = layout.extra(1);
  const std::size_t x2 = layout.extra(2);
  const std::size_t x3 = layout.extra(3);

  std::vector<StrictOrder<Man>> dogs(size);
  std::vector<StrictOrder<Woman>> men(size);
  std::vector<StrictOrder<Dog>> women(size);

  for (std::size_t i = 0; i < n; ++i) {
    dogs[i] = complete_order<Man>(size, {i});
    std::vector<std::size_t> man_prefix = indices(inst.list(Man{i}).members());
    man_prefix.push_back(x1);
    men[i] = complete_order<Woman>(size, man_prefix);

    std::vector<std::size_t> woman_prefix;
    for (std::size_t j = 0; j < layout.positions(i); ++j) {
      std::vector<std::size_t> tied = indices(layout.tie_group(i, j));
      std::sort(tied.begin(), tied.end());
      woman_prefix.insert(woman_prefix.end(), tied.begin(), tied.end());
      woman_prefix.push_back(layout.tie_agent(i, j));

      const std::size_t t = layout.tie_agent(i, j);
      std::vector<std::size_t> dog_prefix = tied;
      dog_prefix.push_back(t);
      dogs[t] = complete_order<Man>(size, dog_prefix);
      men[t] = complete_order<Woman>(size, {t});
      women[t] = complete_order<Dog>(size, {x2});
    }
    women[i] = complete_order<Dog>(size, woman_prefix);
  }

  dogs[x1] = complete_order<Man>(size, {x1});
  dogs[x2] = complete_order<Man>(size, {}, {x2});
  dogs[x3] = complete_order<Man>(size, {x2, x3});
  for (std::size_t x : {x1, x2, x3}) men[x] = complete_order<Woman>(size, {x});
  women[x1] = complete_order<Dog>(size, {x2});
  women[x2] = complete_order<Dog>(size, {x3});
  women[x3] = complete_order<Dog>(size, {x2});

  SeInstance se(CyclicInstance(std::move(dogs), std::move(men), std::move(women)), FixedMatching::identity(size));
  return {std::move(se), std::move(layout)};
}

GadgetReport validate_gadget(const SmtiInstance& inst, const SeInstance& se, const GadgetLayout& layout,
                             const EnumerationBudget& budget) {
  GadgetReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const std::size_t n = inst.size();
  const std::size_t size = layout.size();
  if (se.size() != size || layout.original_size() != n) {
    fail("gadget size does not match its layout");
    return report;
  }
  const auto& cyc = se.cyclic;
  const std::size_t x1 = layout.extra(1);
  const std::size_t x2 = layout.extra(2);
  const std::size_t x3 = layout.extra(3);
  auto dname = [&](std::size_t i) { return agent_name(layout, "a", i); };
  auto bname = [&](std::size_t i) { return agent_name(layout, "b", i); };
  auto cname = [&](std::size_t i) { return agent_name(layout, "c", i); };

  // Fixed matching pairs corresponding agents.
  for (std::size_t i = 0; i < size; ++i) {
    if (se.fixed.partner(Dog{i}) != Man{i}) fail("fixed matching does not pair " + dname(i) + " with " + bname(i));
  }

  // Preference table.
  auto head_is = [&](const auto& order, std::size_t pos, std::size_t want, const std::string& who) {
    if (order.at(pos).index != want) fail(who + ": expected a different agent at position " + std::to_string(pos + 1));
  };
  auto head_set_is = [&](const auto& order, std::size_t from, std::vector<std::size_t> want, const std::string& who) {
    std::vector<std::size_t> got;
    for (std::size_t p = from; p < from + want.size(); ++p) got.push_back(order.at(p).index);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) fail(who + ": tied segment at position " + std::to_string(from + 1) + " is wrong");
  };
  for (std::size_t i = 0; i < n; ++i) {
    head_is(cyc.prefs(Dog{i}), 0, i, dname(i));
    const auto acceptable = inst.list(Man{i}).members();
    for (std::size_t p = 0; p < acceptable.size(); ++p) head_is(cyc.prefs(Man{i}), p, acceptable[p].index, bname(i));
    head_is(cyc.prefs(Man{i}), acceptable.size(), x1, bname(i));
    std::size_t pos = 0;
    for (std::size_t j = 0; j < layout.positions(i); ++j) {
      const std::size_t t = layout.tie_agent(i, j);
      const auto tied = indices(layout.tie_group(i, j));
      head_set_is(cyc.prefs(Woman{i}), pos, tied, cname(i));
      pos += tied.size();
      head_is(cyc.prefs(Woman{i}), pos++, t, cname(i));
      head_set_is(cyc.prefs(Dog{t}), 0, tied, dname(t));
      head_is(cyc.prefs(Dog{t}), tied.size(), t, dname(t));
      head_is(cyc.prefs(Man{t}), 0, t, bname(t));
      head_is(cyc.prefs(Woman{t}), 0, x2, cname(t));
    }
  }
  head_is(cyc.prefs(Dog{x1}), 0, x1, dname(x1));
  head_is(cyc.prefs(Dog{x2}), size - 1, x2, dname(x2));
  head_is(cyc.prefs(Dog{x3}), 0, x2, dname(x3));
  head_is(cyc.prefs(Dog{x3}), 1, x3, dname(x3));
  for (std::size_t x : {x1, x2, x3}) head_is(cyc.prefs(Man{x}), 0, x, bname(x));
  head_is(cyc.prefs(Woman{x1}), 0, x2, cname(x1));
  head_is(cyc.prefs(Woman{x2}), 0, x3, cname(x2));
  head_is(cyc.prefs(Woman{x3}), 0, x2, cname(x3));

  // A_b sets.
  for (std::size_t b = 0; b < size; ++b) {
    if (compute_Ab(se, Man{b}) != layout.expected_Ab(Man{b})) fail("A_b differs from the intended set for " + bname(b));
  }

  // Induced relations on original women agree with the SMTI preferences.
  const SmgInstance reduced = reduce_se_to_smg(se);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& list = inst.list(Woman{c});
    for (std::size_t b = 0; b < n; ++b) {
      if (!list.contains(Man{b})) continue;
      for (std::size_t b2 = 0; b2 < n; ++b2) {
        if (b2 == b) continue;
        const bool related = reduced.relation(Woman{c}).contains(Man{b2}, Man{b});
        const bool expected = list.contains(Man{b2}) && list.rank(Man{b2}) <= list.rank(Man{b});
        if (related != expected) {
          fail("relation of " + cname(c) + " on (" + bname(b2) + ", " + bname(b) + ") disagrees with her list");
        }
      }
    }
  }

  // Structure of every stable extension.
  report.extensions = enumerate_stable_extensions(se, budget);
  for (const auto& ext : report.extensions) {
    const std::set<std::size_t> tail{ext.partner(Man{x2}).index, ext.partner(Man{x3}).index};
    if (tail != std::set<std::size_t>{x2, x3}) fail("extension does not match " + bname(x2) + ", " + bname(x3) + " to " + cname(x2) + ", " + cname(x3));
    if (ext.partner(Man{x1}).index != x1) fail("extension does not match " + bname(x1) + " with " + cname(x1));
    for (std::size_t b = 0; b < n; ++b) {
      const Woman w = ext.partner(Man{b});
      if (w.index >= n || !inst.acceptable(Man{b}, w)) fail("extension matches " + bname(b) + " outside his list");
    }
  }
  return report;
}

Matching lift_solution(const SmtiInstance& inst, const GadgetLayout& layout, const PartialMatching& m) {
  const std::size_t n = inst.size();
  if (m.universe() != n || layout.original_size() != n) throw InputError("matching does not belong to this instance");
  if (!is_perfect(m, n)) throw InputError("only a perfect matching can be lifted into the gadget");
  std::vector<Woman> forward(layout.size());
  for (std::size_t b = 0; b < n; ++b) forward[b] = *m.partner(Man{b});
  for (std::size_t i = n; i < layout.size(); ++i) forward[i] = Woman{i};
  return Matching(std::move(forward));
}

PartialMatching restrict_solution(const GadgetLayout& layout, const Matching& m) {
  if (m.size() != layout.size()) throw InputError("matching does not belong to this gadget");
  const std::size_t n = layout.original_size();
  std::vector<ManWomanPair> kept;
  for (std::size_t b = 0; b < n; ++b) {
    const Woman c = m.partner(Man{b});
    if (c.index < n) kept.emplace_back(Man{b}, c);
  }
  return PartialMatching(n, kept);
}

}  // namespace smg
