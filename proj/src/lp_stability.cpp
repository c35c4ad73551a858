#include "smg/lp_stability.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace smg {

Rational Constraint::evaluate(const RationalVector& x) const {
  Rational sum = 0;
  for (const auto& [var, coeff] : terms) sum += coeff * x.at(var);
  return sum;
}

bool Constraint::satisfied_by(const RationalVector& x) const {
  const Rational lhs = evaluate(x);
  switch (sense) {
    case Sense::kEqual:
      return lhs == rhs;
    case Sense::kGreaterEqual:
      return lhs >= rhs;
    case Sense::kLessEqual:
      return lhs <= rhs;
  }
  return false;
}

void LinearSystem::add(Constraint row) {
  for (const auto& term : row.terms) {
    if (term.first >= names_.size()) throw InputError("constraint references an unknown variable");
  }
  rows_.push_back(std::move(row));
}

bool LinearSystem::satisfied_by(const RationalVector& x) const {
  if (x.size() != names_.size()) return false;
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  return std::all_of(rows_.begin(), rows_.end(), [&](const Constraint& r) { return r.satisfied_by(x); });
}

std::vector<std::string> LinearSystem::violations(const RationalVector& x) const {
  if (x.size() != names_.size()) return {"dimension"};
  std::vector<std::string> out;
  for (const auto& r : rows_) {
    if (!r.satisfied_by(x)) out.push_back(r.name);
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(x[j]) < 0) out.push_back("nonneg:" + names_[j]);
  }
  return out;
}

LinearSystem build_polytope(const SmgInstance& inst) {
  const std::size_t n = inst.size();
  std::vector<std::string> names;
  names.reserve(n * n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      names.push_back("x_" + std::to_string(b + 1) + "_" + std::to_string(c + 1));
    }
  }
  LinearSystem sys(std::move(names));

  for (std::size_t b = 0; b < n; ++b) {
    Constraint row{"man_" + std::to_string(b + 1), {}, Sense::kEqual, 1};
    for (std::size_t c = 0; c < n; ++c) row.terms.emplace_back(pair_variable(n, Man{b}, Woman{c}), 1);
    sys.add(std::move(row));
  }
  for (std::size_t c = 0; c < n; ++c) {
    Constraint row{"woman_" + std::to_string(c + 1), {}, Sense::kEqual, 1};
    for (std::size_t b = 0; b < n; ++b) row.terms.emplace_back(pair_variable(n, Man{b}, Woman{c}), 1);
    sys.add(std::move(row));
  }
  for (std::size_t bi = 0; bi < n; ++bi) {
    const Man b{bi};
    const auto& order = inst.prefs(b);
    for (std::size_t ci = 0; ci < n; ++ci) {
      const Woman c{ci};
      Constraint row{"stab_" + std::to_string(bi + 1) + "_" + std::to_string(ci + 1), {}, Sense::kGreaterEqual, 1};
      row.terms.emplace_back(pair_variable(n, b, c), 1);
      for (std::size_t pos = 0; pos < order.rank(c); ++pos) {
        row.terms.emplace_back(pair_variable(n, b, order.at(pos)), 1);
      }
      for (std::size_t other = 0; other < n; ++other) {
        if (inst.relation(c).contains(Man{other}, b)) row.terms.emplace_back(pair_variable(n, Man{other}, c), 1);
      }
      std::sort(row.terms.begin(), row.terms.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      sys.add(std::move(row));
    }
  }
  return sys;
}

RationalVector incidence_vector(const Matching& m) {
  const std::size_t n = m.size();
  RationalVector x(n * n, 0);
  for (const auto& [b, c] : m.pairs()) x[pair_variable(n, b, c)] = 1;
  return x;
}

namespace {

/// Dense phase-one tableau: rows are constraints, the extra column is the rhs.
class PhaseOneTableau {
 public:
  explicit PhaseOneTableau(const LinearSystem& sys) : structural_(sys.num_variables()) {
    const auto& rows = sys.constraints();
    const std::size_t m = rows.size();

    // Normalize to rhs >= 0 and count auxiliary columns.
    std::vector<Sense> senses(m);
    std::vector<int> sign(m, 1);
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      senses[i] = rows[i].sense;
      if (sgn(rows[i].rhs) < 0) {
        sign[i] = -1;
        if (senses[i] == Sense::kGreaterEqual) {
          senses[i] = Sense::kLessEqual;
        } else if (senses[i] == Sense::kLessEqual) {
          senses[i] = Sense::kGreaterEqual;
        }
      }
      if (senses[i] != Sense::kEqual) ++slack_count;
      if (senses[i] != Sense::kLessEqual) ++artificial_count;
    }
    first_artificial_ = structural_ + slack_count;
    cols_ = first_artificial_ + artificial_count;
    table_.assign(m, std::vector<Rational>(cols_ + 1, 0));
    basis_.assign(m, 0);

    std::size_t next_slack = structural_;
    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      auto& row = table_[i];
      for (const auto& [var, coeff] : rows[i].terms) row[var] += sign[i] * coeff;
      row[cols_] = sign[i] * rows[i].rhs;
      switch (senses[i]) {
        case Sense::kLessEqual:
          row[next_slack] = 1;
          basis_[i] = next_slack++;
          break;
        case Sense::kGreaterEqual:
          row[next_slack++] = -1;
          row[next_art] = 1;
          basis_[i] = next_art++;
          break;
        case Sense::kEqual:
          row[next_art] = 1;
          basis_[i] = next_art++;
          break;
      }
    }

    // Reduced costs of min sum(artificials).
    cost_.assign(cols_ + 1, 0);
    for (std::size_t j = first_artificial_; j < cols_; ++j) cost_[j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] >= first_artificial_) {
        for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= table_[i][j];
      }
    }
  }

  /// Runs to optimality; returns the number of pivots.
  std::size_t solve() {
    std::size_t pivots = 0;
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(cost_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return pivots;

      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < table_.size(); ++i) {
        const Rational& a = table_[i][*entering];
        if (sgn(a) <= 0) continue;
        Rational ratio = table_[i][cols_] / a;
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      // The phase-one objective is bounded below by zero.
      if (!leaving) throw std::logic_error("phase-one simplex reported an unbounded ray");
      pivot(*leaving, *entering);
      ++pivots;
    }
  }

  /// Minimum of the artificial sum is -cost_[rhs].
  bool feasible() const { return sgn(cost_[cols_]) == 0; }

  RationalVector point() const {
    RationalVector x(structural_, 0);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = table_[i][cols_];
    }
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t col) {
    auto& prow = table_[r];
    const Rational pv = prow[col];
    for (auto& v : prow) v /= pv;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (i == r) continue;
      const Rational factor = table_[i][col];
      if (sgn(factor) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) table_[i][j] -= factor * prow[j];
    }
    const Rational factor = cost_[col];
    if (sgn(factor) != 0) {
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= factor * prow[j];
    }
    basis_[r] = col;
  }

  std::size_t structural_;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> table_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
};

/// Unique solution of a square-or-tall system, if its rank equals the column count.
std::optional<RationalVector> solve_unique(std::vector<std::vector<Rational>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && sgn(a[sel][col]) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    const Rational pv = a[rank][col];
    for (auto& v : a[rank]) v /= pv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j <= cols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i) {
    if (sgn(a[i][cols]) != 0) return std::nullopt;
  }
  if (rank != cols) return std::nullopt;
  RationalVector x(cols);
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = a[i][cols];
  return x;
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> a, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t sel = rank;
    while (sel < a.size() && sgn(a[sel][col]) == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

FeasibilityResult feasible_point(const LinearSystem& sys) {
  PhaseOneTableau tableau(sys);
  FeasibilityResult result;
  result.pivots = tableau.solve();
  if (tableau.feasible()) {
    result.point = tableau.point();
    if (!sys.satisfied_by(*result.point)) throw std::logic_error("simplex returned a point outside the system");
  }
  return result;
}

std::vector<RationalVector> enumerate_vertices(const LinearSystem& sys, std::size_t max_subsets) {
  const std::size_t nv = sys.num_variables();
  auto dense = [&](const Constraint& r) {
    std::vector<Rational> row(nv + 1, 0);
    for (const auto& [var, coeff] : r.terms) row[var] += coeff;
    row[nv] = r.rhs;
    return row;
  };

  std::vector<std::vector<Rational>> equalities;
  std::vector<std::vector<Rational>> candidates;
  for (const auto& r : sys.constraints()) {
    (r.sense == Sense::kEqual ? equalities : candidates).push_back(dense(r));
  }
  for (std::size_t j = 0; j < nv; ++j) {
    std::vector<Rational> row(nv + 1, 0);
    row[j] = 1;
    candidates.push_back(std::move(row));
  }

  const std::size_t eq_rank = matrix_rank(equalities, nv);
  const std::size_t need = nv - eq_rank;
  const std::size_t k = candidates.size();
  if (need > k) return {};

  std::set<RationalVector> found;
  std::vector<bool> choose(k, false);
  std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(need), true);
  std::size_t examined = 0;
  do {
    if (++examined > max_subsets) throw BudgetExceeded("vertex enumeration exceeds its subset budget");
    auto a = equalities;
    for (std::size_t i = 0; i < k; ++i) {
      if (choose[i]) a.push_back(candidates[i]);
    }
    if (auto x = solve_unique(std::move(a), nv); x && sys.satisfied_by(*x)) found.insert(std::move(*x));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return {found.begin(), found.end()};
}

std::vector<Woman> rounding_choices(const SmgInstance& inst, const RationalVector& x) {
  const std::size_t n = inst.size();
  if (x.size() != n * n) throw InputError("point dimension must be n^2");
  std::vector<Woman> choice;
  choice.reserve(n);
  for (std::size_t bi = 0; bi < n; ++bi) {
    const Man b{bi};
    std::optional<Woman> best;
    for (Woman c : inst.prefs(b).ranked()) {
      if (sgn(x[pair_variable(n, b, c)]) > 0) {
        best = c;
        break;
      }
    }
    if (!best) throw PreconditionError("point has an empty support row for some man");
    choice.push_back(*best);
  }
  return choice;
}

Matching round_to_matching(const SmgInstance& inst, const RationalVector& x) {
  if (!is_asymmetric(inst)) throw PreconditionError("rounding requires asymmetric preferences");
  if (!build_polytope(inst).satisfied_by(x)) throw PreconditionError("point does not satisfy the stability polytope");
  auto choice = rounding_choices(inst, x);
  try {
    return Matching(std::move(choice));
  } catch (const InputError&) {
    throw std::logic_error("rounding assigned two men to one woman on an asymmetric instance");
  }
}

LpDecision decide_via_lp(const SmgInstance& inst) {
  if (!is_asymmetric(inst)) throw PreconditionError("LP decision requires asymmetric preferences");
  LpDecision decision;
  auto feas = feasible_point(build_polytope(inst));
  decision.pivots = feas.pivots;
  if (feas.point) {
    decision.matching = round_to_matching(inst, *feas.point);
    decision.point = std::move(feas.point);
  }
  return decision;
}

std::string to_string(const Rational& q) { return q.get_str(); }

void write_lp(std::ostream& os, const LinearSystem& sys) {
  os << "\\ stability polytope feasibility; coefficients are exact rationals\n";
  os << "Minimize\n obj: 0 " << (sys.num_variables() ? sys.variable_names().front() : "x") << "\n";
  os << "Subject To\n";
  for (const auto& row : sys.constraints()) {
    os << " " << row.name << ":";
    bool first = true;
    for (const auto& [var, coeff] : row.terms) {
      if (sgn(coeff) < 0) {
        os << " - ";
      } else if (!first) {
        os << " + ";
      } else {
        os << " ";
      }
      const Rational mag = abs(coeff);
      if (mag != 1) os << to_string(mag) << " ";
      os << sys.variable_names()[var];
      first = false;
    }
    if (first) os << " 0 " << (sys.num_variables() ? sys.variable_names().front() : "x");
    switch (row.sense) {
      case Sense::kEqual:
        os << " = ";
        break;
      case Sense::kGreaterEqual:
        os << " >= ";
        break;
      case Sense::kLessEqual:
        os << " <= ";
        break;
    }
    os << to_string(row.rhs) << "\n";
  }
  os << "Bounds\n";
  for (const auto& name : sys.variable_names()) os << " " << name << " >= 0\n";
  os << "End\n";
}

}  // namespace smg
