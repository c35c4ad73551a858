#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "smg/smg_core.hpp"

namespace smg {

/// Exact rational. Arithmetic results are canonical; values built from a
/// numerator and denominator need canonicalize().
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

enum class Sense { kEqual, kGreaterEqual, kLessEqual };

struct Constraint {
  std::string name;
  std::vector<std::pair<std::size_t, Rational>> terms;
  Sense sense = Sense::kEqual;
  Rational rhs;

  Rational evaluate(const RationalVector& x) const;
  bool satisfied_by(const RationalVector& x) const;
};

/// Linear constraints over non-negative variables.
class LinearSystem {
 public:
  LinearSystem() = default;
  explicit LinearSystem(std::vector<std::string> variable_names) : names_(std::move(variable_names)) {}

  std::size_t num_variables() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::vector<Constraint>& constraints() const { return rows_; }

  void add(Constraint row);

  /// Exact check of every row and of x >= 0.
  bool satisfied_by(const RationalVector& x) const;
  /// Names of violated rows (and "nonneg:<var>" entries), in row order.
  std::vector<std::string> violations(const RationalVector& x) const;

 private:
  std::vector<std::string> names_;
  std::vector<Constraint> rows_;
};

/// Column of x_{bc} in the stability polytope of an n-agent instance.
inline std::size_t pair_variable(std::size_t n, Man b, Woman c) { return b.index * n + c.index; }

/// Row sums of x per man and per woman equal 1, one stability row per (b, c):
///   x_bc + sum_{c' above c for b} x_bc' + sum_{(b', b) in R_c} x_b'c >= 1,
/// and x >= 0. Rows are ordered: men, women, then stability rows by (b, c).
LinearSystem build_polytope(const SmgInstance& inst);

/// Incidence vector of a perfect matching.
RationalVector incidence_vector(const Matching& m);

struct FeasibilityResult {
  std::optional<RationalVector> point;
  std::size_t pivots = 0;
};

/// Phase-one simplex over exact rationals with Bland's rule. Returns a point of
/// the system or nothing iff the system is infeasible.
FeasibilityResult feasible_point(const LinearSystem& sys);

/// All vertices of {x >= 0 : sys}, found by solving every choice of tight
/// constraints. Exponential; meant for systems with a handful of variables.
/// Throws BudgetExceeded past max_subsets candidate bases.
std::vector<RationalVector> enumerate_vertices(const LinearSystem& sys, std::size_t max_subsets = 200000);

/// f(b) = b's most preferred woman among {c : x_bc > 0}. No precondition
/// beyond dimension; a collision shows up as a repeated woman.
std::vector<Woman> rounding_choices(const SmgInstance& inst, const RationalVector& x);

/// Rounds a point of the polytope to a stable matching. Requires an asymmetric
/// instance and a point satisfying build_polytope(inst) exactly.
Matching round_to_matching(const SmgInstance& inst, const RationalVector& x);

struct LpDecision {
  std::optional<Matching> matching;
  std::optional<RationalVector> point;
  std::size_t pivots = 0;
};

/// Build, solve, round. Empty iff the polytope is empty iff no stable
/// matching exists. Requires an asymmetric instance.
LpDecision decide_via_lp(const SmgInstance& inst);

/// Writes the system in CPLEX LP text form; coefficients as "p/q" strings.
void write_lp(std::ostream& os, const LinearSystem& sys);

std::string to_string(const Rational& q);

}  // namespace smg
