#include "smg/io.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace smg::io {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw FormatError(path + ": " + msg); }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports "line L, column C" in its message.
    throw FormatError(std::string("$: ") + e.what());
  }
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

std::string as_string(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

const Json& as_array(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

std::vector<std::string> as_string_array(const Json& v, const std::string& path) {
  std::vector<std::string> out;
  const auto& arr = as_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_string(arr[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

/// Name -> index for one agent side.
class Side {
 public:
  Side(std::vector<std::string> names, const std::string& path, const char* role) : names_(std::move(names)), role_(role) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) fail(path + "[" + std::to_string(i) + "]", "empty agent name");
      if (!index_.emplace(names_[i], i).second) fail(path + "[" + std::to_string(i) + "]", "duplicate name '" + names_[i] + "'");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  std::size_t resolve(const Json& v, const std::string& path) const {
    const std::string name = as_string(v, path);
    auto it = index_.find(name);
    if (it == index_.end()) fail(path, std::string("unknown ") + role_ + " '" + name + "'");
    return it->second;
  }

  template <class T>
  std::vector<T> resolve_all(const Json& v, const std::string& path) const {
    std::vector<T> out;
    const auto& arr = as_array(v, path);
    for (std::size_t i = 0; i < arr.size(); ++i) out.emplace_back(resolve(arr[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  const char* role_;
};

/// Object keyed by every name of `owners`, in any order, no extras.
template <class Fn>
void for_each_entry(const Json& obj, const Side& owners, const std::string& path, Fn&& fn) {
  if (!obj.is_object()) fail(path, "expected an object keyed by agent name");
  std::vector<bool> seen(owners.size(), false);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string sub = path + "." + it.key();
    const std::size_t idx = owners.resolve(Json(it.key()), sub);
    seen[idx] = true;
    fn(idx, it.value(), sub);
  }
  for (std::size_t i = 0; i < owners.size(); ++i) {
    if (!seen[i]) fail(path, "missing entry for '" + owners.names()[i] + "'");
  }
}

template <class T>
std::vector<StrictOrder<T>> parse_orders(const Json& obj, const Side& owners, const Side& targets,
                                         const std::string& path) {
  std::vector<StrictOrder<T>> out(owners.size());
  for_each_entry(obj, owners, path, [&](std::size_t idx, const Json& v, const std::string& sub) {
    auto ids = targets.resolve_all<T>(v, sub);
    if (ids.size() != targets.size()) fail(sub, "preference order must rank all " + std::to_string(targets.size()) + " agents");
    try {
      out[idx] = StrictOrder<T>(std::move(ids));
    } catch (const InputError& e) {
      fail(sub, e.what());
    }
  });
  return out;
}

template <class Fn>
auto with_path(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const FormatError&) {
    throw;
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

Json names_json(const std::vector<std::string>& names) { return Json(names); }

template <class T>
Json order_json(const StrictOrder<T>& order, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (T t : order.ranked()) arr.push_back(names.at(t.index));
  return arr;
}

void write_compact(std::ostream& os, const Json& v, int indent);

bool has_object(const Json& arr) {
  for (const auto& e : arr) {
    if (e.is_object()) return true;
  }
  return false;
}

void write_inline(std::ostream& os, const Json& v) {
  if (v.is_array()) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ", ";
      write_inline(os, v[i]);
    }
    os << "]";
  } else {
    os << v.dump();
  }
}

void write_compact(std::ostream& os, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << Json(it.key()).dump() << ": ";
      write_compact(os, it.value(), indent + 2);
    }
    os << "\n" << pad << "}";
  } else if (v.is_array() && has_object(v)) {
    os << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ",\n";
      os << inner;
      write_compact(os, v[i], indent + 2);
    }
    os << "\n" << pad << "]";
  } else {
    write_inline(os, v);
  }
}

std::string dump(const Json& v) {
  std::ostringstream os;
  write_compact(os, v, 0);
  os << "\n";
  return os.str();
}

void check_version(const Json& root) {
  const Json& v = field(root, "format_version", "$");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
    fail("$.format_version", "unsupported format version (expected " + std::to_string(kFormatVersion) + ")");
  }
}

InstanceKind parse_kind(const Json& v) {
  const std::string s = as_string(v, "$.kind");
  if (s == "smg") return InstanceKind::kSmg;
  if (s == "smti") return InstanceKind::kSmti;
  if (s == "cyclic3d") return InstanceKind::kCyclic3d;
  if (s == "se") return InstanceKind::kSe;
  fail("$.kind", "unknown instance kind '" + s + "'");
}

std::vector<std::vector<std::string>> parse_tuples(const Json& v, const std::string& path, std::size_t arity) {
  std::vector<std::vector<std::string>> out;
  const auto& arr = as_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string sub = path + "[" + std::to_string(i) + "]";
    auto t = as_string_array(arr[i], sub);
    if (arity && t.size() != arity) fail(sub, "expected " + std::to_string(arity) + " names");
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

const char* to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kSmg:
      return "smg";
    case InstanceKind::kSmti:
      return "smti";
    case InstanceKind::kCyclic3d:
      return "cyclic3d";
    case InstanceKind::kSe:
      return "se";
  }
  return "?";
}

NameTable NameTable::defaults(std::size_t n, bool with_dogs) {
  NameTable t;
  for (std::size_t i = 1; i <= n; ++i) {
    if (with_dogs) t.dogs.push_back("a" + std::to_string(i));
    t.men.push_back("b" + std::to_string(i));
    t.women.push_back("c" + std::to_string(i));
  }
  return t;
}

InstanceFile make_instance_file(SmgInstance inst) {
  NameTable names = NameTable::defaults(inst.size(), false);
  return {InstanceKind::kSmg, std::move(names), std::move(inst)};
}
InstanceFile make_instance_file(SmtiInstance inst) {
  NameTable names = NameTable::defaults(inst.size(), false);
  return {InstanceKind::kSmti, std::move(names), std::move(inst)};
}
InstanceFile make_instance_file(CyclicInstance inst) {
  NameTable names = NameTable::defaults(inst.size(), true);
  return {InstanceKind::kCyclic3d, std::move(names), std::move(inst)};
}
InstanceFile make_instance_file(SeInstance inst) {
  NameTable names = NameTable::defaults(inst.size(), true);
  return {InstanceKind::kSe, std::move(names), std::move(inst)};
}

InstanceFile parse_instance(const std::string& text) {
  const Json root = parse_json(text);
  if (!root.is_object()) fail("$", "expected an object");
  check_version(root);
  InstanceFile file;
  file.kind = parse_kind(field(root, "kind", "$"));

  const Side men(as_string_array(field(root, "men", "$"), "$.men"), "$.men", "man");
  const Side women(as_string_array(field(root, "women", "$"), "$.women"), "$.women", "woman");
  if (men.size() != women.size()) fail("$.women", "needs as many women as men");
  file.names.men = men.names();
  file.names.women = women.names();
  const std::size_t n = men.size();

  switch (file.kind) {
    case InstanceKind::kSmg: {
      auto prefs = parse_orders<Woman>(field(root, "men_prefs", "$"), men, women, "$.men_prefs");
      std::vector<PrefRelation> rels(n, PrefRelation(n));
      for_each_entry(field(root, "women_relations", "$"), women, "$.women_relations",
                     [&](std::size_t c, const Json& v, const std::string& sub) {
                       const auto& arr = as_array(v, sub);
                       for (std::size_t i = 0; i < arr.size(); ++i) {
                         const std::string p = sub + "[" + std::to_string(i) + "]";
                         const auto& pair = as_array(arr[i], p);
                         if (pair.size() != 2) fail(p, "expected a pair of men");
                         const Man b{men.resolve(pair[0], p + "[0]")};
                         const Man b2{men.resolve(pair[1], p + "[1]")};
                         with_path(p, [&] { rels[c].insert(b, b2); });
                       }
                     });
      file.payload = with_path("$", [&] { return SmgInstance(std::move(prefs), std::move(rels)); });
      break;
    }
    case InstanceKind::kSmti: {
      std::vector<TiedList<Woman>> men_lists(n);
      std::vector<TiedList<Man>> women_lists(n);
      for_each_entry(field(root, "men_lists", "$"), men, "$.men_lists",
                     [&](std::size_t b, const Json& v, const std::string& sub) {
                       auto ids = women.resolve_all<Woman>(v, sub);
                       men_lists[b] = with_path(sub, [&] { return TiedList<Woman>::strict(n, ids); });
                     });
      for_each_entry(field(root, "women_lists", "$"), women, "$.women_lists",
                     [&](std::size_t c, const Json& v, const std::string& sub) {
                       std::vector<std::vector<Man>> groups;
                       const auto& arr = as_array(v, sub);
                       for (std::size_t i = 0; i < arr.size(); ++i) {
                         groups.push_back(men.resolve_all<Man>(arr[i], sub + "[" + std::to_string(i) + "]"));
                       }
                       women_lists[c] = with_path(sub, [&] { return TiedList<Man>(n, std::move(groups)); });
                     });
      file.payload = with_path("$", [&] { return SmtiInstance(std::move(men_lists), std::move(women_lists)); });
      break;
    }
    case InstanceKind::kCyclic3d:
    case InstanceKind::kSe: {
      const Side dogs(as_string_array(field(root, "dogs", "$"), "$.dogs"), "$.dogs", "dog");
      if (dogs.size() != n) fail("$.dogs", "needs as many dogs as men");
      file.names.dogs = dogs.names();
      auto dog_prefs = parse_orders<Man>(field(root, "dog_prefs", "$"), dogs, men, "$.dog_prefs");
      auto man_prefs = parse_orders<Woman>(field(root, "man_prefs", "$"), men, women, "$.man_prefs");
      auto woman_prefs = parse_orders<Dog>(field(root, "woman_prefs", "$"), women, dogs, "$.woman_prefs");
      CyclicInstance cyclic = with_path("$", [&] {
        return CyclicInstance(std::move(dog_prefs), std::move(man_prefs), std::move(woman_prefs));
      });
      if (file.kind == InstanceKind::kCyclic3d) {
        file.payload = std::move(cyclic);
        break;
      }
      const auto tuples = parse_tuples(field(root, "fixed_matching", "$"), "$.fixed_matching", 2);
      std::vector<std::pair<Dog, Man>> pairs;
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        const std::string p = "$.fixed_matching[" + std::to_string(i) + "]";
        pairs.emplace_back(Dog{dogs.resolve(Json(tuples[i][0]), p + "[0]")}, Man{men.resolve(Json(tuples[i][1]), p + "[1]")});
      }
      FixedMatching fixed = with_path("$.fixed_matching", [&] { return FixedMatching::from_pairs(n, pairs); });
      file.payload = SeInstance(std::move(cyclic), std::move(fixed));
      break;
    }
  }
  return file;
}

std::string emit_instance(const InstanceFile& file) {
  const auto& names = file.names;
  Json root;
  root["format_version"] = kFormatVersion;
  root["kind"] = to_string(file.kind);
  if (file.kind == InstanceKind::kCyclic3d || file.kind == InstanceKind::kSe) root["dogs"] = names_json(names.dogs);
  root["men"] = names_json(names.men);
  root["women"] = names_json(names.women);

  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, SmgInstance>) {
          Json prefs = Json::object();
          for (std::size_t b = 0; b < inst.size(); ++b) prefs[names.men[b]] = order_json(inst.prefs(Man{b}), names.women);
          Json rels = Json::object();
          for (std::size_t c = 0; c < inst.size(); ++c) {
            Json arr = Json::array();
            for (const auto& [x, y] : inst.relation(Woman{c}).pairs()) arr.push_back({names.men[x.index], names.men[y.index]});
            rels[names.women[c]] = std::move(arr);
          }
          root["men_prefs"] = std::move(prefs);
          root["women_relations"] = std::move(rels);
        } else if constexpr (std::is_same_v<T, SmtiInstance>) {
          Json men_lists = Json::object();
          for (std::size_t b = 0; b < inst.size(); ++b) {
            Json arr = Json::array();
            for (Woman c : inst.list(Man{b}).members()) arr.push_back(names.women[c.index]);
            men_lists[names.men[b]] = std::move(arr);
          }
          Json women_lists = Json::object();
          for (std::size_t c = 0; c < inst.size(); ++c) {
            Json arr = Json::array();
            for (const auto& group : inst.list(Woman{c}).groups()) {
              Json g = Json::array();
              for (Man b : group) g.push_back(names.men[b.index]);
              arr.push_back(std::move(g));
            }
            women_lists[names.women[c]] = std::move(arr);
          }
          root["men_lists"] = std::move(men_lists);
          root["women_lists"] = std::move(women_lists);
        } else {
          const CyclicInstance* cyc;
          if constexpr (std::is_same_v<T, SeInstance>) {
            cyc = &inst.cyclic;
          } else {
            cyc = &inst;
          }
          const std::size_t n = cyc->size();
          Json dp = Json::object();
          for (std::size_t a = 0; a < n; ++a) dp[names.dogs[a]] = order_json(cyc->prefs(Dog{a}), names.men);
          Json mp = Json::object();
          for (std::size_t b = 0; b < n; ++b) mp[names.men[b]] = order_json(cyc->prefs(Man{b}), names.women);
          Json wp = Json::object();
          for (std::size_t c = 0; c < n; ++c) wp[names.women[c]] = order_json(cyc->prefs(Woman{c}), names.dogs);
          root["dog_prefs"] = std::move(dp);
          root["man_prefs"] = std::move(mp);
          root["woman_prefs"] = std::move(wp);
          if constexpr (std::is_same_v<T, SeInstance>) {
            Json fixed = Json::array();
            for (const auto& [a, b] : inst.fixed.pairs()) fixed.push_back({names.dogs[a.index], names.men[b.index]});
            root["fixed_matching"] = std::move(fixed);
          }
        }
      },
      file.payload);
  return dump(root);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kStableMatchingFound:
      return "stable-matching-found";
    case Verdict::kNoStableMatching:
      return "no-stable-matching";
    case Verdict::kNotFound:
      return "not-found";
    case Verdict::kInfeasibleLp:
      return "infeasible-lp";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::kStableMatchingFound, Verdict::kNoStableMatching, Verdict::kNotFound, Verdict::kInfeasibleLp}) {
    if (s == to_string(v)) return v;
  }
  fail("$.verdict", "unknown verdict '" + s + "'");
}

ResultFile parse_result(const std::string& text) {
  const Json root = parse_json(text);
  if (!root.is_object()) fail("$", "expected an object");
  check_version(root);
  ResultFile r;
  r.verdict = parse_verdict(as_string(field(root, "verdict", "$"), "$.verdict"));
  if (root.contains("matching")) r.matching = parse_tuples(root["matching"], "$.matching", 2);
  if (root.contains("certificate")) r.certificate = parse_tuples(root["certificate"], "$.certificate", 0);
  if (root.contains("perfect")) {
    if (!root["perfect"].is_boolean()) fail("$.perfect", "expected a boolean");
    r.perfect = root["perfect"].get<bool>();
  }
  if (root.contains("solver")) {
    const Json& s = root["solver"];
    SolverInfo info;
    info.algorithm = as_string(field(s, "algorithm", "$.solver"), "$.solver.algorithm");
    auto count = [&](const char* key, std::optional<std::size_t>& slot) {
      if (!s.contains(key)) return;
      if (!s[key].is_number_unsigned()) fail(std::string("$.solver.") + key, "expected a non-negative integer");
      slot = s[key].get<std::size_t>();
    };
    count("rounds", info.rounds);
    count("proposals", info.proposals);
    count("pivots", info.pivots);
    if (s.contains("wall_time_ms")) {
      if (!s["wall_time_ms"].is_number()) fail("$.solver.wall_time_ms", "expected a number");
      info.wall_time_ms = s["wall_time_ms"].get<double>();
    }
    r.solver = std::move(info);
  }
  return r;
}

std::string emit_result(const ResultFile& r) {
  Json root;
  root["format_version"] = kFormatVersion;
  root["verdict"] = to_string(r.verdict);
  if (r.matching) root["matching"] = *r.matching;
  if (r.perfect) root["perfect"] = *r.perfect;
  if (!r.certificate.empty()) root["certificate"] = r.certificate;
  if (r.solver) {
    Json s;
    s["algorithm"] = r.solver->algorithm;
    if (r.solver->rounds) s["rounds"] = *r.solver->rounds;
    if (r.solver->proposals) s["proposals"] = *r.solver->proposals;
    if (r.solver->pivots) s["pivots"] = *r.solver->pivots;
    if (r.solver->wall_time_ms) s["wall_time_ms"] = *r.solver->wall_time_ms;
    root["solver"] = std::move(s);
  }
  return dump(root);
}

EnumerationFile parse_enumeration(const std::string& text) {
  const Json root = parse_json(text);
  if (!root.is_object()) fail("$", "expected an object");
  check_version(root);
  EnumerationFile f;
  f.kind = parse_kind(field(root, "kind", "$"));
  const std::size_t arity = f.kind == InstanceKind::kCyclic3d ? 3 : 2;
  const auto& arr = as_array(field(root, "solutions", "$"), "$.solutions");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    f.solutions.push_back(parse_tuples(arr[i], "$.solutions[" + std::to_string(i) + "]", arity));
  }
  const Json& count = field(root, "count", "$");
  if (!count.is_number_unsigned() || count.get<std::size_t>() != f.solutions.size()) {
    fail("$.count", "does not match the number of solutions");
  }
  return f;
}

std::string emit_enumeration(const EnumerationFile& f) {
  Json root;
  root["format_version"] = kFormatVersion;
  root["kind"] = to_string(f.kind);
  root["count"] = f.solutions.size();
  root["solutions"] = Json::array();
  for (const auto& s : f.solutions) root["solutions"].push_back(Json(s));
  // One solution per line.
  std::ostringstream os;
  os << "{\n";
  bool first = true;
  for (auto it = root.begin(); it != root.end(); ++it) {
    if (!first) os << ",\n";
    first = false;
    os << "  " << Json(it.key()).dump() << ": ";
    if (it.key() == "solutions" && !it.value().empty()) {
      os << "[\n";
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        if (i) os << ",\n";
        os << "    ";
        write_inline(os, it.value()[i]);
      }
      os << "\n  ]";
    } else {
      write_inline(os, it.value());
    }
  }
  os << "\n}\n";
  return os.str();
}

std::vector<std::vector<std::string>> name_pairs(const NameTable& names, const std::vector<ManWomanPair>& pairs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& [b, c] : pairs) out.push_back({names.men.at(b.index), names.women.at(c.index)});
  return out;
}

MatchingFile parse_matching_file(const std::string& text) {
  const Json root = parse_json(text);
  if (!root.is_object()) fail("$", "expected an object");
  MatchingFile f;
  if (root.contains("triples")) {
    f.triples = true;
    f.tuples = parse_tuples(root["triples"], "$.triples", 3);
  } else {
    f.tuples = parse_tuples(field(root, "matching", "$"), "$.matching", 2);
  }
  return f;
}

std::vector<ManWomanPair> resolve_pairs(const NameTable& names, const std::vector<std::vector<std::string>>& tuples) {
  const Side men(names.men, "$.men", "man");
  const Side women(names.women, "$.women", "woman");
  std::vector<ManWomanPair> out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const std::string p = "$.matching[" + std::to_string(i) + "]";
    if (tuples[i].size() != 2) fail(p, "expected a (man, woman) pair");
    out.emplace_back(Man{men.resolve(Json(tuples[i][0]), p + "[0]")}, Woman{women.resolve(Json(tuples[i][1]), p + "[1]")});
  }
  return out;
}

std::vector<Triple> resolve_triples(const NameTable& names, const std::vector<std::vector<std::string>>& tuples) {
  const Side dogs(names.dogs, "$.dogs", "dog");
  const Side men(names.men, "$.men", "man");
  const Side women(names.women, "$.women", "woman");
  std::vector<Triple> out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const std::string p = "$.triples[" + std::to_string(i) + "]";
    if (tuples[i].size() != 3) fail(p, "expected a (dog, man, woman) triple");
    out.push_back({Dog{dogs.resolve(Json(tuples[i][0]), p + "[0]")}, Man{men.resolve(Json(tuples[i][1]), p + "[1]")},
                   Woman{women.resolve(Json(tuples[i][2]), p + "[2]")}});
  }
  return out;
}

}  // namespace smg::io
