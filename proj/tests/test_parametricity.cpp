#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "ramiforge/parametricity.hpp"
#include "ramiforge/prescriber.hpp"

using namespace ramiforge;

namespace {

PermGroup symmetric(size_t n) {
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 1);
  return PermGroup(n, {Perm::from_cycles(n, {{1, 2}}), Perm::from_cycles(n, {cyc})});
}

/* Brute-force closure oracle: power every element of every branch class. */
std::set<std::string> closure_by_powering(const CoverData& cover) {
  const PermGroup& g = cover.group.perm();
  std::set<std::string> out;
  for (const BranchOrbit& orb : cover.orbits)
    for (const Perm& e : g.elements()) {
      if (g.class_of(e).label != orb.class_label) continue;
      for (long k = 1; k <= e.order(); ++k) out.insert(g.class_of(e.power(k)).label);
    }
  return out;
}

}  // namespace

TEST_CASE("inertia closures match brute-force element powering") {
  CoverData syn = load_cover_file("data/synthetic_s5.json");
  ClosureReport cl = inertia_closure(syn);
  std::set<std::string> expected = closure_by_powering(syn);
  CHECK(std::set<std::string>(cl.closure.begin(), cl.closure.end()) == expected);
  CHECK(cl.outside == std::vector<std::string>{"[1^2 3^1]", "[2^1 3^1]"});
  CHECK_FALSE(cl.full);
  CHECK(expected == std::set<std::string>{"[1^5]", "[5^1]", "[1^1 4^1]", "[1^1 2^2]",
                                          "[1^3 2^1]"});

  CoverData tri = make_trinomial_cover(3, 1, 2, 1);
  ClosureReport cl3 = inertia_closure(tri);
  CHECK(std::set<std::string>(cl3.closure.begin(), cl3.closure.end()) ==
        closure_by_powering(tri));
  CHECK(cl3.full);
}

TEST_CASE("inertia hypothesis separates class families") {
  CoverData tri5 = make_trinomial_cover(5, 2, 2, 1);
  CoverData syn = load_cover_file("data/synthetic_s5.json");
  HypothesisVerdict v = check_inertia_hypothesis(tri5, syn);
  CHECK(v.hypothesis == Hypothesis::inertia);
  CHECK(v.holds);
  CHECK(v.exact);
  CHECK(v.witness_classes == std::vector<std::string>{"[2^1 3^1]"});
  CHECK(v.consequence.find("[2^1 3^1]") != std::string::npos);

  /* Swapped roles: the 4-cycle class is no power of any trinomial branch
   * class, so the hypothesis holds in this direction too. */
  HypothesisVerdict back = check_inertia_hypothesis(syn, tri5);
  CHECK(back.holds);
  CHECK(back.witness_classes == std::vector<std::string>{"[1^1 4^1]"});

  HypothesisVerdict self = check_inertia_hypothesis(syn, syn);
  CHECK_FALSE(self.holds);
}

TEST_CASE("inertia hypothesis on minimal synthetic pairs") {
  PermGroup s5 = symmetric(5);
  CoverData c1 = make_synthetic_cover("double_twos", s5, {{Rat(0), "[1^1 2^2]"}});
  CoverData c2 = make_synthetic_cover("four_cycle", s5, {{Rat(0), "[1^1 4^1]"}});
  /* [1^1 2^2] is the square of [1^1 4^1], so it cannot separate. */
  HypothesisVerdict v12 = check_inertia_hypothesis(c1, c2);
  CHECK_FALSE(v12.holds);
  /* [1^1 4^1] is no power of [1^1 2^2]. */
  HypothesisVerdict v21 = check_inertia_hypothesis(c2, c1);
  CHECK(v21.holds);
  CHECK(v21.witness_classes == std::vector<std::string>{"[1^1 4^1]"});

  PermGroup s3 = symmetric(3);
  CoverData a = make_synthetic_cover("rot", s3, {{Rat(0), "[3^1]"}});
  CoverData b = make_synthetic_cover("flip", s3, {{Rat(0), "[1^1 2^1]"}});
  CHECK(check_inertia_hypothesis(a, b).witness_classes ==
        std::vector<std::string>{"[3^1]"});
  CHECK(check_inertia_hypothesis(b, a).witness_classes ==
        std::vector<std::string>{"[1^1 2^1]"});

  CoverData tri3 = make_trinomial_cover(3, 1, 2, 1);
  CHECK_THROWS_AS(check_inertia_hypothesis(tri3, c1), error);
}

TEST_CASE("inertia hypothesis over abstract class data") {
  CoverData monster = make_monster_cover();
  HypothesisVerdict self = check_inertia_hypothesis(monster, monster);
  CHECK_FALSE(self.holds);

  /* A declared non-rational class blocks the closure computation. */
  AbstractGroup g;
  g.name = "opaque";
  g.order = 60;
  g.prime_divisors = {2, 3, 5};
  g.classes = {{"1A", 1, true}, {"5A", 5, false}, {"5B", 5, false}};
  CoverData opaque{"opaque_cover", GroupModel(g), {}, std::nullopt, {}, false, {}};
  opaque.orbits.push_back({AlgPoint::rational(Rat(0)), "5A"});
  CHECK_THROWS_AS(check_inertia_hypothesis(opaque, opaque), error);
  ClosureReport cl = inertia_closure(opaque);
  CHECK_FALSE(cl.full);
  bool flagged = false;
  for (const std::string& n : cl.notes)
    if (n.find("not computable") != std::string::npos) flagged = true;
  CHECK(flagged);
}

TEST_CASE("branch point hypothesis in exact residue-class mode") {
  CoverData c1 = load_cover_file("data/quad_t.json");
  CoverData c2 = load_cover_file("data/quad_t2p1_t2m2.json");
  HypothesisVerdict v = check_branch_point_hypothesis(c1, c2, 200);
  CHECK(v.hypothesis == Hypothesis::branch_point);
  CHECK(v.holds);
  CHECK(v.exact);
  CHECK(v.modulus == 8);
  CHECK(v.residues == std::vector<long>{3});
  REQUIRE(v.witness_primes.size() == 5);
  CHECK(v.witness_primes == std::vector<long>{11, 19, 43, 59, 67});
  for (long p : v.witness_primes) CHECK(p % 8 == 3);
  /* The bad primes of the pair are set aside from the residue argument. */
  CHECK(v.excluded_primes == std::vector<long>{2, 3});

  /* A cover cannot be separated from itself. */
  HypothesisVerdict self = check_branch_point_hypothesis(c1, c1, 200);
  CHECK_FALSE(self.holds);
  CHECK(self.exact);

  CHECK_THROWS_AS(check_branch_point_hypothesis(c1, c2, 5), error);
}

TEST_CASE("exact residue classes agree with divisor scans") {
  CoverData c1 = load_cover_file("data/quad_t.json");
  CoverData c2 = load_cover_file("data/quad_t2p1_t2m2.json");
  std::set<long> d1, d2;
  for (long p : ramifiable_primes(c1, 300).primes) d1.insert(p);
  for (long p : ramifiable_primes(c2, 300).primes) d2.insert(p);
  for (long p : primes_up_to(300)) {
    if (p == 2) continue;
    bool separated = d1.count(p) && !d2.count(p);
    CHECK_MESSAGE(separated == (p % 8 == 3), "p=", p);
  }
}

TEST_CASE("branch point hypothesis falls back to window evidence") {
  CoverData c1 = make_trinomial_cover(3, 1, 2, 1);
  CoverData c2 = load_cover_file("data/mestre_a5.json");
  HypothesisVerdict v = check_branch_point_hypothesis(c1, c2, 1000);
  CHECK(v.holds);
  CHECK_FALSE(v.exact);
  CHECK(v.window == 1000);
  CHECK(v.witness_primes.size() >= 8);
  std::vector<long> head(v.witness_primes.begin(), v.witness_primes.begin() + 8);
  CHECK(head == std::vector<long>{7, 11, 13, 29, 37, 41, 43, 59});
  CHECK(v.excluded_primes.empty());
  bool counted = false;
  for (const std::string& n : v.notes)
    if (n.find("window scan") != std::string::npos) counted = true;
  CHECK(counted);
}

TEST_CASE("four branch point criterion") {
  CHECK_FALSE(check_four_branch(load_cover_file("data/quad_t.json")).holds);
  CHECK_FALSE(check_four_branch(load_cover_file("data/quad_t2p1.json")).holds);
  CorollaryVerdict v = check_four_branch(load_cover_file("data/quad_t2p1_t2m2.json"));
  CHECK(v.applies);
  CHECK(v.holds);
  CHECK_FALSE(v.witness.empty());
  CHECK_FALSE(check_four_branch(make_trinomial_cover(3, 1, 2, 1)).holds);
}

TEST_CASE("symmetric shape criterion") {
  CorollaryVerdict syn = check_symmetric_shape(load_cover_file("data/synthetic_s5.json"));
  CHECK(syn.applies);
  CHECK(syn.holds);
  CHECK(syn.witness == "[2^1 3^1]");

  CorollaryVerdict tri = check_symmetric_shape(make_trinomial_cover(3, 1, 2, 1));
  CHECK(tri.applies);
  CHECK_FALSE(tri.holds);

  PermGroup s4 = symmetric(4);
  CoverData no4 = make_synthetic_cover(
      "no_four_cycle", s4,
      {{Rat(0), "[1^2 2^1]"}, {Rat(1), "[1^1 3^1]"}, {Rat(-1), "[2^2]"}});
  CorollaryVerdict v4 = check_symmetric_shape(no4);
  CHECK(v4.holds);
  CHECK(v4.witness == "[4^1]");

  CHECK_FALSE(check_symmetric_shape(load_cover_file("data/mestre_a5.json")).applies);
  CHECK_FALSE(check_symmetric_shape(make_monster_cover()).applies);
  CHECK_FALSE(check_symmetric_shape(load_cover_file("data/quad_t.json")).applies);
}
