#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smg/cyclic3d.hpp"
#include "smg/smg_core.hpp"
#include "smg/smti.hpp"

namespace smg::io {

inline constexpr int kFormatVersion = 1;

/// Parse failure; what() starts with the JSON path of the offending field.
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

enum class InstanceKind { kSmg, kSmti, kCyclic3d, kSe };

const char* to_string(InstanceKind kind);

/// External agent names. Library code works on dense indices only.
struct NameTable {
  std::vector<std::string> dogs;
  std::vector<std::string> men;
  std::vector<std::string> women;

  /// a1.., b1.., c1..; dogs only when with_dogs.
  static NameTable defaults(std::size_t n, bool with_dogs);

  friend bool operator==(const NameTable&, const NameTable&) = default;
};

using InstancePayload = std::variant<SmgInstance, SmtiInstance, CyclicInstance, SeInstance>;

struct InstanceFile {
  InstanceKind kind = InstanceKind::kSmg;
  NameTable names;
  InstancePayload payload;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

InstanceFile make_instance_file(SmgInstance inst);
InstanceFile make_instance_file(SmtiInstance inst);
InstanceFile make_instance_file(CyclicInstance inst);
InstanceFile make_instance_file(SeInstance inst);

InstanceFile parse_instance(const std::string& text);
/// Canonical text: fixed key order, two-space indent, name lists kept on one line.
std::string emit_instance(const InstanceFile& file);

enum class Verdict { kStableMatchingFound, kNoStableMatching, kNotFound, kInfeasibleLp };

const char* to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct SolverInfo {
  std::string algorithm;
  std::optional<std::size_t> rounds;
  std::optional<std::size_t> proposals;
  std::optional<std::size_t> pivots;
  std::optional<double> wall_time_ms;

  friend bool operator==(const SolverInfo&, const SolverInfo&) = default;
};

struct ResultFile {
  Verdict verdict = Verdict::kNotFound;
  /// Name pairs (man, woman).
  std::optional<std::vector<std::vector<std::string>>> matching;
  /// Blocking pairs or triples, as name tuples.
  std::vector<std::vector<std::string>> certificate;
  /// Only for checks of SMTI matchings.
  std::optional<bool> perfect;
  std::optional<SolverInfo> solver;

  friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

ResultFile parse_result(const std::string& text);
std::string emit_result(const ResultFile& result);

/// Output of exhaustive enumeration: every solution as name tuples
/// (pairs, or triples for cyclic3d instances).
struct EnumerationFile {
  InstanceKind kind = InstanceKind::kSmg;
  std::vector<std::vector<std::vector<std::string>>> solutions;

  friend bool operator==(const EnumerationFile&, const EnumerationFile&) = default;
};

EnumerationFile parse_enumeration(const std::string& text);
std::string emit_enumeration(const EnumerationFile& file);

/// Name pairs for a matching.
std::vector<std::vector<std::string>> name_pairs(const NameTable& names, const std::vector<ManWomanPair>& pairs);

/// A supplied matching (for `check`): {"matching": [[man, woman], ...]} or
/// {"triples": [[dog, man, woman], ...]}.
struct MatchingFile {
  std::vector<std::vector<std::string>> tuples;
  bool triples = false;
};

MatchingFile parse_matching_file(const std::string& text);

std::vector<ManWomanPair> resolve_pairs(const NameTable& names, const std::vector<std::vector<std::string>>& tuples);
std::vector<Triple> resolve_triples(const NameTable& names, const std::vector<std::vector<std::string>>& tuples);

}  // namespace smg::io
