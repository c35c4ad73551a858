#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "smg/deferred_acceptance.hpp"
#include "smg/generators.hpp"
#include "smg/lp_stability.hpp"
#include "support.hpp"

using namespace smg;

namespace {

SmgInstance counterexample() {
  const StrictOrder<Woman> order({Woman{0}, Woman{1}});
  return SmgInstance({order, order}, {PrefRelation(2), PrefRelation(2)});
}

SmgInstance single() { return SmgInstance({StrictOrder<Woman>({Woman{0}})}, {PrefRelation(1)}); }

std::string stab_name(std::size_t b, std::size_t c) {
  return "stab_" + std::to_string(b + 1) + "_" + std::to_string(c + 1);
}

bool integral(const RationalVector& x) {
  for (const auto& v : x) {
    if (v != 0 && v != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("n=1") {
  const auto sys = build_polytope(single());
  CHECK(sys.num_variables() == 1);
  CHECK(sys.constraints().size() == 3);
  const auto res = feasible_point(sys);
  REQUIRE(res.point);
  CHECK(*res.point == RationalVector{1});
  CHECK(round_to_matching(single(), *res.point) == Matching::identity(1));
  const auto d = decide_via_lp(single());
  REQUIRE(d.matching);
  CHECK(d.matching->partner(Man{0}) == Woman{0});
}

TEST_CASE("2x2 counterexample is infeasible") {
  const auto sys = build_polytope(counterexample());
  // Both men's rows for c1 reduce to a single variable, and c1's row forbids both at once.
  const auto& rows = sys.constraints();
  REQUIRE(rows.size() == 8);
  CHECK(rows[4].name == "stab_1_1");
  CHECK(rows[4].terms.size() == 1);
  CHECK(rows[6].name == "stab_2_1");
  CHECK(rows[6].terms.size() == 1);
  CHECK_FALSE(feasible_point(sys).point);
  CHECK(enumerate_vertices(sys).empty());
  CHECK_FALSE(decide_via_lp(counterexample()).matching);
}

TEST_CASE("incidence vectors: stable ones satisfy every row, others fail exactly at blocking pairs") {
  Rng rng(31);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const auto inst = generate_smg(n, rng, {t % 2 == 0, 0.5});
    const auto sys = build_polytope(inst);
    for (const auto& p : ref::all_perms(n)) {
      const auto x = incidence_vector(ref::to_matching(p));
      std::vector<std::string> expect;
      for (auto [b, c] : ref::blocking_pairs(inst, p)) expect.push_back(stab_name(b, c));
      REQUIRE(sys.violations(x) == expect);
      REQUIRE(sys.satisfied_by(x) == expect.empty());
    }
  }
}

TEST_CASE("feasibility agrees with existence") {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const bool asym = t % 2 == 0;
    const auto inst = generate_smg(n, rng, {asym, 0.5});
    const auto sols = ref::stable_matchings(inst);
    const auto res = feasible_point(build_polytope(inst));
    if (res.point) REQUIRE(build_polytope(inst).satisfied_by(*res.point));
    // A stable matching always yields a point; the converse needs asymmetry.
    if (!sols.empty()) REQUIRE(res.point);
    if (asym) {
      REQUIRE(res.point.has_value() == !sols.empty());
      const auto d = decide_via_lp(inst);
      REQUIRE(d.matching.has_value() == !sols.empty());
      if (d.matching) REQUIRE(ref::stable(inst, ref::to_perm(*d.matching)));
    }
  }
}

TEST_CASE("rounding") {
  Rng rng(51);
  std::size_t fractional = 0;
  for (int t = 0; t < 40; ++t) {
    const auto inst = generate_smg(3, rng, {true, 0.5});
    const auto sys = build_polytope(inst);
    for (const auto& p : ref::stable_matchings(inst)) {
      REQUIRE(ref::to_perm(round_to_matching(inst, incidence_vector(ref::to_matching(p)))) == p);
    }
    // Every vertex, fractional or not, rounds to a stable matching without collisions.
    for (const auto& v : enumerate_vertices(sys)) {
      REQUIRE(sys.satisfied_by(v));
      fractional += !integral(v);
      const auto choices = rounding_choices(inst, v);
      std::set<Woman> distinct(choices.begin(), choices.end());
      REQUIRE(distinct.size() == 3);
      REQUIRE(ref::stable(inst, ref::to_perm(round_to_matching(inst, v))));
    }
  }
  MESSAGE("fractional vertices seen: " << fractional);
}

TEST_CASE("rounding preconditions") {
  PrefRelation both(2);
  both.insert(Man{0}, Man{1});
  both.insert(Man{1}, Man{0});
  const StrictOrder<Woman> order({Woman{0}, Woman{1}});
  const SmgInstance sym({order, order}, {both, PrefRelation(2)});
  const auto x = incidence_vector(Matching::identity(2));
  CHECK_THROWS_AS(round_to_matching(sym, x), PreconditionError);
  CHECK_THROWS_AS(decide_via_lp(sym), PreconditionError);
  // Identity is not stable in the counterexample, so x is outside its polytope.
  CHECK_THROWS_AS(round_to_matching(counterexample(), x), PreconditionError);
}

TEST_CASE("LP text export") {
  std::ostringstream os;
  write_lp(os, build_polytope(counterexample()));
  const std::string text = os.str();
  CHECK(text.find(" man_1: x_1_1 + x_1_2 = 1\n") != std::string::npos);
  CHECK(text.find(" stab_1_1: x_1_1 >= 1\n") != std::string::npos);
  CHECK(text.find(" stab_1_2: x_1_1 + x_1_2 >= 1\n") != std::string::npos);
  CHECK(text.find(" x_2_2 >= 0\n") != std::string::npos);
  CHECK(text.rfind("End\n") == text.size() - 4);
  Rational half(3, 6);
  half.canonicalize();
  CHECK(to_string(half) == "1/2");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("vertex enumeration on a simple system") {
  // x + y = 1, x, y >= 0: two vertices.
  LinearSystem sys({"x", "y"});
  sys.add({"sum", {{0, 1}, {1, 1}}, Sense::kEqual, 1});
  auto v = enumerate_vertices(sys);
  std::sort(v.begin(), v.end());
  REQUIRE(v.size() == 2);
  CHECK(v[0] == RationalVector{0, 1});
  CHECK(v[1] == RationalVector{1, 0});
  // Adding x + 2y <= 3/2 cuts the segment at y = 1/2.
  sys.add({"cap", {{0, 1}, {1, 2}}, Sense::kLessEqual, Rational(3, 2)});
  v = enumerate_vertices(sys);
  std::sort(v.begin(), v.end());
  REQUIRE(v.size() == 2);
  CHECK(v[0] == RationalVector{Rational(1, 2), Rational(1, 2)});
  CHECK(v[1] == RationalVector{1, 0});
  const auto p = feasible_point(sys);
  REQUIRE(p.point);
  CHECK(sys.satisfied_by(*p.point));
}
