#include "smg/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "smg/cyclic3d.hpp"
#include "smg/deferred_acceptance.hpp"
#include "smg/generators.hpp"
#include "smg/hardness_gadgets.hpp"
#include "smg/io.hpp"
#include "smg/lp_stability.hpp"
#include "smg/oracle.hpp"
#include "smg/smti.hpp"

namespace smg::cli {

namespace {

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

io::InstanceFile load_instance(const std::string& path, std::istream& in) {
  return io::parse_instance(read_text(path, in));
}

template <class T>
const T& require_kind(const io::InstanceFile& file, const char* command) {
  if (const T* p = std::get_if<T>(&file.payload)) return *p;
  throw InputError(std::string(command) + " does not accept instances of kind '" + io::to_string(file.kind) + "'");
}

/// base, or base with primes appended until it is not in taken.
std::string fresh_name(std::string base, std::set<std::string>& taken) {
  while (taken.count(base)) base += "'";
  taken.insert(base);
  return base;
}

std::vector<std::vector<std::string>> triple_names(const io::NameTable& names, const std::vector<Triple>& triples) {
  std::vector<std::vector<std::string>> out;
  for (const auto& t : triples) {
    out.push_back({names.dogs.at(t.dog.index), names.men.at(t.man.index), names.women.at(t.woman.index)});
  }
  return out;
}

void write_trace(std::ostream& err, const io::NameTable& names, const DaResult& result) {
  auto list = [&](const char* label, const std::vector<ManWomanPair>& pairs) {
    err << " " << label << "=[";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i) err << ",";
      err << names.men[pairs[i].first.index] << "->" << names.women[pairs[i].second.index];
    }
    err << "]";
  };
  for (std::size_t r = 0; r < result.rounds.size(); ++r) {
    const auto& round = result.rounds[r];
    err << "round " << (r + 1) << ":";
    list("propose", round.proposals);
    list("accept", round.accepted);
    list("reject", round.rejected);
    list("release", round.released);
    err << "\n";
  }
}

int cmd_check(const std::string& instance_path, const std::string& matching_path, std::istream& in, std::ostream& out) {
  const auto file = load_instance(instance_path, in);
  const auto supplied = io::parse_matching_file(read_text(matching_path, in));
  const std::size_t n = file.names.men.size();
  io::ResultFile result;
  bool ok = false;

  switch (file.kind) {
    case io::InstanceKind::kSmg: {
      const auto& inst = std::get<SmgInstance>(file.payload);
      const auto m = Matching::from_pairs(n, io::resolve_pairs(file.names, supplied.tuples));
      const auto report = is_stable(inst, m);
      ok = report.stable;
      result.matching = io::name_pairs(file.names, m.pairs());
      result.certificate = io::name_pairs(file.names, report.blocking);
      break;
    }
    case io::InstanceKind::kSmti: {
      const auto& inst = std::get<SmtiInstance>(file.payload);
      const PartialMatching m(inst, io::resolve_pairs(file.names, supplied.tuples));
      const auto report = is_weakly_stable(inst, m);
      result.perfect = is_perfect(m, n);
      ok = report.stable && *result.perfect;
      result.matching = io::name_pairs(file.names, m.pairs());
      result.certificate = io::name_pairs(file.names, report.blocking);
      break;
    }
    case io::InstanceKind::kCyclic3d: {
      const auto& inst = std::get<CyclicInstance>(file.payload);
      if (!supplied.triples) throw InputError("checking a cyclic3d instance needs a \"triples\" file");
      const ThreeDMatching mm(n, io::resolve_triples(file.names, supplied.tuples));
      const auto report = is_3d_stable(inst, mm);
      ok = report.stable;
      result.certificate = triple_names(file.names, report.blocking);
      break;
    }
    case io::InstanceKind::kSe: {
      const auto& se = std::get<SeInstance>(file.payload);
      const auto m = Matching::from_pairs(n, io::resolve_pairs(file.names, supplied.tuples));
      const auto report = is_3d_stable(se.cyclic, compose(se.fixed, m));
      ok = report.stable;
      result.matching = io::name_pairs(file.names, m.pairs());
      result.certificate = triple_names(file.names, report.blocking);
      break;
    }
  }
  result.verdict = ok ? io::Verdict::kStableMatchingFound : io::Verdict::kNotFound;
  out << io::emit_result(result);
  return ok ? kSolved : kNotFound;
}

int cmd_solve(const std::string& instance_path, const std::string& algo, bool trace, bool timing, std::istream& in,
              std::ostream& out, std::ostream& err) {
  const auto file = load_instance(instance_path, in);
  const auto& inst = require_kind<SmgInstance>(file, "solve");
  io::ResultFile result;
  io::SolverInfo info;
  info.algorithm = algo;
  const auto start = std::chrono::steady_clock::now();
  int code = kSolved;

  if (algo == "da") {
    const DaResult da = solve_da(inst);
    if (trace) write_trace(err, file.names, da);
    info.rounds = da.rounds.size();
    info.proposals = da.proposals;
    switch (da.verdict) {
      case DaVerdict::kFound:
        result.verdict = io::Verdict::kStableMatchingFound;
        result.matching = io::name_pairs(file.names, da.matching->pairs());
        break;
      case DaVerdict::kNoStableMatching:
        result.verdict = io::Verdict::kNoStableMatching;
        code = kNoSolution;
        break;
      case DaVerdict::kNotFound:
        result.verdict = io::Verdict::kNotFound;
        code = kNotFound;
        break;
    }
  } else {
    const LpDecision lp = decide_via_lp(inst);
    info.pivots = lp.pivots;
    if (lp.matching) {
      result.verdict = io::Verdict::kStableMatchingFound;
      result.matching = io::name_pairs(file.names, lp.matching->pairs());
    } else {
      result.verdict = io::Verdict::kInfeasibleLp;
      code = kNoSolution;
    }
  }
  if (timing) {
    info.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  result.solver = std::move(info);
  out << io::emit_result(result);
  return code;
}

io::InstanceFile reduce_smti(const io::InstanceFile& file) {
  const auto& inst = require_kind<SmtiInstance>(file, "reduce smti-smg");
  io::InstanceFile reduced{io::InstanceKind::kSmg, file.names, reduce_smti_to_smg(inst)};
  std::set<std::string> men(file.names.men.begin(), file.names.men.end());
  std::set<std::string> women(file.names.women.begin(), file.names.women.end());
  reduced.names.men.push_back(fresh_name("b*", men));
  reduced.names.women.push_back(fresh_name("c*", women));
  return reduced;
}

io::InstanceFile reduce_se(const io::InstanceFile& file) {
  const auto& se = require_kind<SeInstance>(file, "reduce se-smg");
  io::NameTable names{{}, file.names.men, file.names.women};
  return {io::InstanceKind::kSmg, std::move(names), reduce_se_to_smg(se)};
}

io::InstanceFile gadget(const io::InstanceFile& file) {
  const auto& inst = require_kind<SmtiInstance>(file, "gadget smti-se");
  SeGadget g = build_se_gadget(inst);
  const auto& layout = g.layout;
  std::set<std::string> dogs;
  std::set<std::string> men(file.names.men.begin(), file.names.men.end());
  std::set<std::string> women(file.names.women.begin(), file.names.women.end());
  io::NameTable names;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto slot = layout.slot(i);
    switch (slot.role) {
      case GadgetLayout::Role::kOriginal:
        names.dogs.push_back(fresh_name("a:" + file.names.men[i], dogs));
        names.men.push_back(file.names.men[i]);
        names.women.push_back(file.names.women[i]);
        break;
      case GadgetLayout::Role::kTie: {
        const std::string tag = "[" + file.names.women[slot.i] + "." + std::to_string(slot.j + 1) + "]";
        names.dogs.push_back(fresh_name("a" + tag, dogs));
        names.men.push_back(fresh_name("b" + tag, men));
        names.women.push_back(fresh_name("c" + tag, women));
        break;
      }
      case GadgetLayout::Role::kExtra: {
        const std::string tag = "+" + std::to_string(slot.i);
        names.dogs.push_back(fresh_name("a" + tag, dogs));
        names.men.push_back(fresh_name("b" + tag, men));
        names.women.push_back(fresh_name("c" + tag, women));
        break;
      }
    }
  }
  return {io::InstanceKind::kSe, std::move(names), std::move(g.se)};
}

int cmd_enumerate(const std::string& instance_path, const EnumerationBudget& budget, std::istream& in, std::ostream& out) {
  const auto file = load_instance(instance_path, in);
  io::EnumerationFile result{file.kind, {}};
  auto add_pairs = [&](const std::vector<ManWomanPair>& pairs) { result.solutions.push_back(io::name_pairs(file.names, pairs)); };
  switch (file.kind) {
    case io::InstanceKind::kSmg:
      for (const auto& m : enumerate_stable_smg(std::get<SmgInstance>(file.payload), budget)) add_pairs(m.pairs());
      break;
    case io::InstanceKind::kSmti:
      for (const auto& m : enumerate_perfect_weakly_stable_smti(std::get<SmtiInstance>(file.payload), budget)) {
        add_pairs(m.pairs());
      }
      break;
    case io::InstanceKind::kSe:
      for (const auto& m : enumerate_stable_extensions(std::get<SeInstance>(file.payload), budget)) add_pairs(m.pairs());
      break;
    case io::InstanceKind::kCyclic3d:
      for (const auto& mm : enumerate_stable_3d(std::get<CyclicInstance>(file.payload), budget)) {
        result.solutions.push_back(triple_names(file.names, mm.triples()));
      }
      break;
  }
  out << io::emit_enumeration(result);
  return result.solutions.empty() ? kNoSolution : kSolved;
}

struct GenArgs {
  std::string kind = "smg";
  std::size_t n = 3;
  std::uint64_t seed = 1;
  bool asymmetric = false;
  double relation_density = 0.5;
  double tie_density = 0.3;
  double list_density = 0.7;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  Rng rng(args.seed);
  io::InstanceFile file;
  if (args.kind == "smg") {
    file = io::make_instance_file(generate_smg(args.n, rng, {args.asymmetric, args.relation_density}));
  } else if (args.kind == "smti") {
    file = io::make_instance_file(generate_smti(args.n, rng, {args.list_density, args.tie_density}));
  } else if (args.kind == "cyclic3d") {
    file = io::make_instance_file(generate_cyclic(args.n, rng));
  } else {
    file = io::make_instance_file(generate_se(args.n, rng));
  }
  out << io::emit_instance(file);
  return kSolved;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable marriage with general preferences: checkers, solvers, reductions, oracles", "smg"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string matching_path;
  auto* check = app.add_subcommand("check", "Verify a supplied matching and print blocking certificates");
  check->add_option("instance", instance_path, "Instance file ('-' for stdin)")->required();
  check->add_option("-m,--matching", matching_path, "Matching file")->required();

  std::string algo = "da";
  bool trace = false;
  bool timing = false;
  auto* solve = app.add_subcommand("solve", "Decide an SMG instance");
  solve->add_option("instance", instance_path, "Instance file ('-' for stdin)")->required();
  solve->add_option("--algo", algo, "Solver")->check(CLI::IsMember({"da", "lp"}));
  solve->add_flag("--trace", trace, "Stream the deferred acceptance round log to stderr");
  solve->add_flag("--timing", timing, "Record wall time in the result");

  std::string direction;
  auto* reduce = app.add_subcommand("reduce", "Reduce an instance to SMG");
  reduce->add_option("direction", direction, "Reduction")->required()->check(CLI::IsMember({"smti-smg", "se-smg"}));
  reduce->add_option("instance", instance_path, "Instance file ('-' for stdin)")->required();

  std::string gadget_kind;
  auto* gadget_cmd = app.add_subcommand("gadget", "Build the SMTI to stable-extension gadget");
  gadget_cmd->add_option("construction", gadget_kind, "Construction")->required()->check(CLI::IsMember({"smti-se"}));
  gadget_cmd->add_option("instance", instance_path, "Instance file ('-' for stdin)")->required();

  EnumerationBudget budget{8, 40320, 1};
  auto* enumerate = app.add_subcommand("enumerate", "List every solution by exhaustive search");
  enumerate->add_option("instance", instance_path, "Instance file ('-' for stdin)")->required();
  enumerate->add_option("--max-n", budget.max_n, "Largest instance size to enumerate");
  enumerate->add_option("--max-candidates", budget.max_candidates, "Largest number of candidates to examine");
  enumerate->add_option("--threads", budget.threads, "Worker threads");

  auto* export_lp = app.add_subcommand("export-lp", "Write the stability polytope in LP text format");
  export_lp->add_option("instance", instance_path, "Instance file ('-' for stdin)")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", gen_args.kind, "Instance kind")->check(CLI::IsMember({"smg", "smti", "cyclic3d", "se"}));
  gen->add_option("--n", gen_args.n, "Agents per side")->required();
  gen->add_option("--seed", gen_args.seed, "Seed of the mt19937_64 stream");
  gen->add_flag("--asymmetric", gen_args.asymmetric, "SMG: at most one orientation per pair of men");
  gen->add_option("--relation-density", gen_args.relation_density, "SMG: probability of each ordered pair")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--tie-density", gen_args.tie_density, "SMTI: probability of tying adjacent entries")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--list-density", gen_args.list_density, "SMTI: probability a pair is acceptable")
      ->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> storage{"smg"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSolved : kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(instance_path, matching_path, in, out);
    if (solve->parsed()) return cmd_solve(instance_path, algo, trace, timing, in, out, err);
    if (reduce->parsed()) {
      const auto file = load_instance(instance_path, in);
      out << io::emit_instance(direction == "smti-smg" ? reduce_smti(file) : reduce_se(file));
      return kSolved;
    }
    if (gadget_cmd->parsed()) {
      out << io::emit_instance(gadget(load_instance(instance_path, in)));
      return kSolved;
    }
    if (enumerate->parsed()) return cmd_enumerate(instance_path, budget, in, out);
    if (export_lp->parsed()) {
      const auto file = load_instance(instance_path, in);
      write_lp(out, build_polytope(require_kind<SmgInstance>(file, "export-lp")));
      return kSolved;
    }
    if (gen->parsed()) return cmd_gen(gen_args, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const PreconditionError& e) {
    err << "error: precondition failed: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace smg::cli
