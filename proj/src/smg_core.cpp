#include "smg/smg_core.hpp"

namespace smg {

std::vector<std::pair<Man, Man>> PrefRelation::pairs() const {
  std::vector<std::pair<Man, Man>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (bits_[i * n_ + j]) out.emplace_back(Man{i}, Man{j});
    }
  }
  return out;
}

bool PrefRelation::empty() const {
  for (bool b : bits_) {
    if (b) return false;
  }
  return true;
}

SmgInstance::SmgInstance(std::vector<StrictOrder<Woman>> men_prefs, std::vector<PrefRelation> women_rels)
    : men_prefs_(std::move(men_prefs)), women_rels_(std::move(women_rels)) {
  const std::size_t n = men_prefs_.size();
  if (women_rels_.size() != n) throw InputError("SMG instance needs one relation per woman");
  for (const auto& order : men_prefs_) {
    if (order.size() != n) throw InputError("man's preference order must rank all n women");
  }
  for (const auto& rel : women_rels_) {
    if (rel.size() != n) throw InputError("woman's relation must range over all n men");
  }
}

namespace {

void check_matching(const SmgInstance& inst, const Matching& m) {
  if (m.size() != inst.size()) throw InputError("matching size differs from instance size");
}

}  // namespace

bool is_blocking_pair(const SmgInstance& inst, const Matching& m, Man b, Woman c) {
  check_matching(inst, m);
  check_index(b.index, inst.size(), "man");
  check_index(c.index, inst.size(), "woman");
  if (m.contains(b, c)) return false;
  if (!inst.prefs(b).prefers(c, m.partner(b))) return false;
  return !inst.relation(c).contains(m.partner(c), b);
}

bool is_blocking_pair_dual(const SmgInstance& inst, const Matching& m, Man b, Woman c) {
  check_matching(inst, m);
  check_index(b.index, inst.size(), "man");
  check_index(c.index, inst.size(), "woman");
  if (m.contains(b, c)) return false;
  if (!inst.prefs(b).prefers(c, m.partner(b))) return false;
  return inst.relation(c).contains(b, m.partner(c));
}

StabilityReport is_stable(const SmgInstance& inst, const Matching& m) {
  check_matching(inst, m);
  StabilityReport report;
  const std::size_t n = inst.size();
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      if (is_blocking_pair(inst, m, Man{b}, Woman{c})) report.blocking.emplace_back(Man{b}, Woman{c});
    }
  }
  report.stable = report.blocking.empty();
  return report;
}

bool has_blocking_pair(const SmgInstance& inst, const Matching& m) {
  check_matching(inst, m);
  const std::size_t n = inst.size();
  for (std::size_t b = 0; b < n; ++b) {
    const auto& order = inst.prefs(Man{b});
    // Only women ranked above his partner can block with him.
    const std::size_t partner_rank = order.rank(m.partner(Man{b}));
    for (std::size_t pos = 0; pos < partner_rank; ++pos) {
      const Woman c = order.at(pos);
      if (!inst.relation(c).contains(m.partner(c), Man{b})) return true;
    }
  }
  return false;
}

bool is_stable_dual(const SmgInstance& inst, const Matching& m) {
  const std::size_t n = inst.size();
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      if (is_blocking_pair_dual(inst, m, Man{b}, Woman{c})) return false;
    }
  }
  return true;
}

bool is_asymmetric(const SmgInstance& inst) {
  const std::size_t n = inst.size();
  for (const auto& rel : inst.women_rels()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rel.contains(Man{i}, Man{j}) && rel.contains(Man{j}, Man{i})) return false;
      }
    }
  }
  return true;
}

SmgInstance dualize(const SmgInstance& inst) {
  const std::size_t n = inst.size();
  std::vector<PrefRelation> rels;
  rels.reserve(n);
  for (const auto& rel : inst.women_rels()) {
    PrefRelation dual(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && !rel.contains(Man{j}, Man{i})) dual.insert(Man{i}, Man{j});
      }
    }
    rels.push_back(std::move(dual));
  }
  return SmgInstance(inst.men_prefs(), std::move(rels));
}

}  // namespace smg
