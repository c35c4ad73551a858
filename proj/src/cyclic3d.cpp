#include "smg/cyclic3d.hpp"

#include <algorithm>

namespace smg {

CyclicInstance::CyclicInstance(std::vector<StrictOrder<Man>> dog_prefs, std::vector<StrictOrder<Woman>> man_prefs,
                               std::vector<StrictOrder<Dog>> woman_prefs)
    : dog_prefs_(std::move(dog_prefs)), man_prefs_(std::move(man_prefs)), woman_prefs_(std::move(woman_prefs)) {
  const std::size_t n = dog_prefs_.size();
  if (man_prefs_.size() != n || woman_prefs_.size() != n) throw InputError("all three agent sets must have size n");
  auto check = [n](const auto& orders) {
    for (const auto& o : orders) {
      if (o.size() != n) throw InputError("cyclic preference order must rank all n agents");
    }
  };
  check(dog_prefs_);
  check(man_prefs_);
  check(woman_prefs_);
}

SeInstance::SeInstance(CyclicInstance inst, FixedMatching m) : cyclic(std::move(inst)), fixed(std::move(m)) {
  if (fixed.size() != cyclic.size()) throw InputError("fixed matching size differs from instance size");
}

ThreeDMatching::ThreeDMatching(std::size_t n, std::vector<Triple> triples) : triples_(std::move(triples)) {
  if (triples_.size() != n) throw InputError("3D matching must contain exactly n triples");
  std::sort(triples_.begin(), triples_.end());
  dog_of_man_.assign(n, n);
  dog_of_woman_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Triple& t = triples_[i];
    check_index(t.dog.index, n, "dog");
    check_index(t.man.index, n, "man");
    check_index(t.woman.index, n, "woman");
    if (t.dog.index != i) throw InputError("3D matching uses a dog twice");
    if (dog_of_man_[t.man.index] != n) throw InputError("3D matching uses a man twice");
    if (dog_of_woman_[t.woman.index] != n) throw InputError("3D matching uses a woman twice");
    dog_of_man_[t.man.index] = i;
    dog_of_woman_[t.woman.index] = i;
  }
}

bool ThreeDMatching::contains(const Triple& t) const {
  return t.dog.index < triples_.size() && triples_[t.dog.index] == t;
}

ThreeDMatching compose(const FixedMatching& m, const Matching& n) {
  if (m.size() != n.size()) throw InputError("cannot compose matchings of different sizes");
  std::vector<Triple> triples;
  triples.reserve(m.size());
  for (const auto& [a, b] : m.pairs()) triples.push_back({a, b, n.partner(b)});
  return ThreeDMatching(m.size(), std::move(triples));
}

bool is_blocking_triple(const CyclicInstance& inst, const ThreeDMatching& mm, Dog a, Man b, Woman c) {
  const std::size_t n = inst.size();
  if (mm.size() != n) throw InputError("3D matching size differs from instance size");
  check_index(a.index, n, "dog");
  check_index(b.index, n, "man");
  check_index(c.index, n, "woman");
  if (mm.contains({a, b, c})) return false;
  return inst.prefs(a).prefers(b, mm.man_of(a)) && inst.prefs(b).prefers(c, mm.woman_of(b)) &&
         inst.prefs(c).prefers(a, mm.dog_of(c));
}

ThreeDStabilityReport is_3d_stable(const CyclicInstance& inst, const ThreeDMatching& mm) {
  ThreeDStabilityReport report;
  const std::size_t n = inst.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (is_blocking_triple(inst, mm, Dog{a}, Man{b}, Woman{c})) report.blocking.push_back({Dog{a}, Man{b}, Woman{c}});
      }
    }
  }
  report.stable = report.blocking.empty();
  return report;
}

std::optional<Triple> find_blocking_triple(const CyclicInstance& inst, const ThreeDMatching& mm) {
  const std::size_t n = inst.size();
  if (mm.size() != n) throw InputError("3D matching size differs from instance size");
  for (std::size_t ai = 0; ai < n; ++ai) {
    const Dog a{ai};
    const auto& dog_order = inst.prefs(a);
    for (std::size_t bi = 0; bi < n; ++bi) {
      const Man b{bi};
      if (!dog_order.prefers(b, mm.man_of(a))) continue;
      const auto& man_order = inst.prefs(b);
      for (std::size_t ci = 0; ci < n; ++ci) {
        const Woman c{ci};
        if (man_order.prefers(c, mm.woman_of(b)) && inst.prefs(c).prefers(a, mm.dog_of(c))) return Triple{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::vector<Dog> compute_Ab(const SeInstance& se, Man b) {
  const std::size_t n = se.size();
  check_index(b.index, n, "man");
  std::vector<Dog> out;
  for (std::size_t a = 0; a < n; ++a) {
    if (se.cyclic.prefs(Dog{a}).prefers(b, se.fixed.partner(Dog{a}))) out.emplace_back(a);
  }
  return out;
}

Dog compute_alpha(const SeInstance& se, Man b, Woman c) {
  check_index(c.index, se.size(), "woman");
  const auto& order = se.cyclic.prefs(c);
  const auto ab = compute_Ab(se, b);
  if (ab.empty()) return order.last();
  return *std::min_element(ab.begin(), ab.end(), [&](Dog x, Dog y) { return order.rank(x) < order.rank(y); });
}

SmgInstance reduce_se_to_smg(const SeInstance& se) {
  const std::size_t n = se.size();
  std::vector<PrefRelation> rels;
  rels.reserve(n);
  for (std::size_t ci = 0; ci < n; ++ci) {
    const Woman c{ci};
    const auto& order = se.cyclic.prefs(c);
    std::vector<Dog> alpha;
    alpha.reserve(n);
    for (std::size_t b = 0; b < n; ++b) alpha.push_back(compute_alpha(se, Man{b}, c));
    PrefRelation rel(n);
    for (std::size_t b = 0; b < n; ++b) {
      const Dog fixed_dog = se.fixed.partner(Man{b});
      for (std::size_t b2 = 0; b2 < n; ++b2) {
        if (b != b2 && order.weakly_prefers(fixed_dog, alpha[b2])) rel.insert(Man{b}, Man{b2});
      }
    }
    rels.push_back(std::move(rel));
  }
  return SmgInstance(se.cyclic.man_prefs(), std::move(rels));
}

}  // namespace smg
