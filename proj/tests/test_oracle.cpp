#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ramiforge/cover.hpp"
#include "ramiforge/numbers.hpp"
#include "ramiforge/oracle.hpp"

using namespace ramiforge;

namespace {

long seg_sum(const RamReport& r) {
  long s = 0;
  for (const RamSegment& seg : r.segments) s += (seg.e - 1) * seg.cycles;
  return s;
}

long type_sum(const RamReport& r) {
  long s = 0;
  for (int c : r.inertia_cycle_type) s += c;
  return s;
}

}  // namespace

TEST_CASE("quadratic field ramification at odd primes") {
  CHECK(quadratic_ramifies(Rat(5), 5));
  CHECK_FALSE(quadratic_ramifies(Rat(5), 3));
  CHECK(quadratic_ramifies(Rat(75), 3));
  CHECK_FALSE(quadratic_ramifies(Rat(75), 5));
  CHECK(quadratic_ramifies(Rat(1, 5), 5));
  CHECK(quadratic_ramifies(Rat(-7), 7));
  CHECK_THROWS_AS(quadratic_ramifies(Rat(4), 5), error);
  CHECK_THROWS_AS(quadratic_ramifies(Rat(0), 5), error);
  CHECK_THROWS_AS(quadratic_ramifies(Rat(5), 2), error);
}

TEST_CASE("tame splitting analysis on decided cases") {
  RamReport r = tame_splitting_type(PolyQ({Rat(-5), Rat(0), Rat(1)}), 5);
  CHECK(r.verdict == RamVerdict::ramified);
  CHECK(r.e_total == 2);
  REQUIRE(r.segments.size() == 1);
  CHECK(r.segments[0].e == 2);
  CHECK(r.segments[0].cycles == 1);
  CHECK(r.inertia_cycle_type == std::vector<int>{2});

  r = tame_splitting_type(PolyQ({Rat(-5), Rat(0), Rat(0), Rat(1)}), 5);
  CHECK(r.verdict == RamVerdict::ramified);
  CHECK(r.e_total == 3);
  REQUIRE(r.segments.size() == 1);
  CHECK(r.segments[0].e == 3);
  CHECK(r.inertia_cycle_type == std::vector<int>{3});

  r = tame_splitting_type(PolyQ({Rat(1), Rat(0), Rat(1)}), 5);
  CHECK(r.verdict == RamVerdict::unramified);
  CHECK(r.e_total == 1);
  CHECK(r.inertia_cycle_type == std::vector<int>{1, 1});

  r = tame_splitting_type(PolyQ({Rat(1), Rat(0), Rat(1)}), 7);
  CHECK(r.verdict == RamVerdict::unramified);
  CHECK(r.inertia_cycle_type == std::vector<int>{1, 1});

  /* X^2 - 1/5 is not 5-integral but its splitting field is decided by the
   * reversed chart of its content; valuation -1 is odd, so it ramifies. */
  r = tame_splitting_type(PolyQ({Rat(-1, 5), Rat(0), Rat(1)}), 5);
  CHECK(r.decided());
}

TEST_CASE("tame splitting analysis reports its limits") {
  /* Wild case: e = p. */
  RamReport r = tame_splitting_type(PolyQ({Rat(-2), Rat(0), Rat(1)}), 2);
  CHECK(r.verdict == RamVerdict::inconclusive);
  CHECK_FALSE(r.notes.empty());

  CHECK_THROWS_AS(tame_splitting_type(PolyQ({Rat(1), Rat(2), Rat(1)}), 5), error);
  CHECK_THROWS_AS(tame_splitting_type(PolyQ({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1),
                                             Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}),
                                      5),
                  error);
  CHECK_THROWS_AS(tame_splitting_type(PolyQ({Rat(1), Rat(2)}), 5), error);
}

TEST_CASE("frobenius substitution patterns") {
  CHECK(frobenius_class(PolyQ({Rat(1444), Rat(-38), Rat(0), Rat(1)}), 11) ==
        std::vector<long>{3});
  CHECK(frobenius_class(PolyQ({Rat(1), Rat(0), Rat(1)}), 5) == std::vector<long>{1, 1});
  CHECK(frobenius_class(PolyQ({Rat(1), Rat(0), Rat(1)}), 7) == std::vector<long>{2});
  CHECK(frobenius_class(PolyQ({Rat(-2), Rat(0), Rat(0), Rat(1)}), 5) ==
        std::vector<long>{1, 2});
  CHECK(frobenius_class(PolyQ({Rat(-2), Rat(0), Rat(0), Rat(1)}), 7) ==
        std::vector<long>{3});
  CHECK_THROWS_AS(frobenius_class(PolyQ({Rat(-5), Rat(0), Rat(1)}), 5), error);
  CHECK_THROWS_AS(frobenius_class(PolyQ({Rat(1, 5), Rat(1)}), 5), error);
}

TEST_CASE("frobenius pattern degree sums match the polynomial degree") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (long p : {3L, 7L, 11L, 31L}) {
    for (int trial = 0; trial < 40; ++trial) {
      PolyQ f({Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng)), Rat(1)});
      std::vector<long> cls;
      try {
        cls = frobenius_class(f, p);
      } catch (const error&) {
        continue;
      }
      long s = 0;
      for (long d : cls) s += d;
      CHECK(s == f.degree());
    }
  }
}

TEST_CASE("splitting reports are internally consistent") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coeff(-30, 30);
  int decided = 0;
  for (long p : {3L, 5L, 7L, 13L}) {
    for (int trial = 0; trial < 60; ++trial) {
      PolyQ f({Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng)), Rat(1)});
      if (!f.is_squarefree()) continue;
      RamReport r = tame_splitting_type(f, p);
      if (!r.decided()) continue;
      ++decided;
      CHECK(type_sum(r) == f.degree());
      CHECK((r.verdict == RamVerdict::ramified) == (r.e_total > 1));
      long e_max = 1;
      for (const RamSegment& s : r.segments) e_max = std::max(e_max, s.e);
      CHECK(r.e_total == e_max);
      ExtVal vd = vp(discriminant(f), p);
      REQUIRE(vd.is_finite());
      /* Ramification forces p into the discriminant, and a unit discriminant
       * forces the unramified verdict. */
      if (r.e_total > 1) CHECK(vd.value() > 0);
      if (vd.value() == 0) CHECK(r.verdict == RamVerdict::unramified);
      /* The tame conductor exponent accounts for part of v_p(disc); the
       * excess from congruent unramified factors is even and nonnegative. */
      long excess = vd.value() - seg_sum(r);
      CHECK(excess >= 0);
      CHECK(excess % 2 == 0);
      if (vd.value() <= 1) CHECK(vd.value() == seg_sum(r));
    }
  }
  CHECK(decided > 100);
}

TEST_CASE("quadratic oracle agrees with full splitting analysis") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<long> tnum(-400, 400);
  std::vector<long> odd_primes;
  for (long p : primes_up_to(200))
    if (p != 2) odd_primes.push_back(p);
  int checked = 0;
  for (long p : odd_primes) {
    for (int trial = 0; trial < 4; ++trial) {
      Rat t(tnum(rng), 1 + (trial % 3));
      if (t == 0) continue;
      Rat d = t * t + 1;
      if (is_rational_square(d)) continue;
      PolyQ f({-d, Rat(0), Rat(1)});
      RamReport r = tame_splitting_type(f, p);
      REQUIRE(r.decided());
      CHECK((r.verdict == RamVerdict::ramified) == quadratic_ramifies(d, p));
      ++checked;
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("specialized covers match their declared inertia at branch meets") {
  CoverData tri3 = make_trinomial_cover(3, 1, 2, 1);
  /* t0 = 5^2 * u meets the orbit at 0 with multiplicity 2: unramified at 5. */
  RamReport r = tame_splitting_type(specialize_defining_poly(tri3, Rat(50)), 5);
  CHECK(r.verdict == RamVerdict::unramified);
  /* t0 = 5 meets the orbit at 0 with multiplicity 1: a single 2-cycle. */
  r = tame_splitting_type(specialize_defining_poly(tri3, Rat(5)), 5);
  CHECK(r.verdict == RamVerdict::ramified);
  CHECK(r.inertia_cycle_type == std::vector<int>{1, 2});
  /* t0 = 1/5 meets the orbit at infinity: a full 3-cycle. */
  r = tame_splitting_type(specialize_defining_poly(tri3, Rat(1, 5)), 5);
  CHECK(r.verdict == RamVerdict::ramified);
  CHECK(r.inertia_cycle_type == std::vector<int>{3});
}
