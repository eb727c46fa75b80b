#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "ramiforge/cover.hpp"

using namespace ramiforge;

namespace {

PermGroup symmetric(size_t n) {
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 1);
  return PermGroup(n, {Perm::from_cycles(n, {{1, 2}}), Perm::from_cycles(n, {cyc})});
}

}  // namespace

TEST_CASE("permutation algebra") {
  Perm a = Perm::from_cycles(3, {{1, 2}});
  Perm b = Perm::from_cycles(3, {{1, 2, 3}});
  CHECK((a * b).cycle_type() == std::vector<int>{1, 2});
  /* (a*b)(x) = a(b(x)): 1 -> 2 -> 1, so a*b fixes the first point. */
  CHECK((a * b)(0) == 0);
  CHECK(a.inverse() == a);
  CHECK(b.inverse() == b * b);
  CHECK(b.power(3).is_identity());
  CHECK(b.power(-1) == b.inverse());
  CHECK(a.order() == 2);
  CHECK(b.order() == 3);
  CHECK(b.conjugated_by(a) == a * b * a.inverse());
  CHECK(Perm::from_cycles(5, {{1, 2}, {3, 4, 5}}).cycle_type() == std::vector<int>{2, 3});
  CHECK(Perm::from_cycles(5, {{1, 2}, {3, 4, 5}}).order() == 6);
  CHECK(Perm(4).is_identity());
  CHECK(Perm::from_cycles(3, {{1, 2}}).str() == "(1 2)");
  CHECK_THROWS_AS(Perm::from_cycles(3, {{1, 4}}), error);
  /* A non-injective image list is rejected by the image constructor. */
  CHECK_THROWS_AS(Perm::from_cycles(3, {{1, 2, 1}}), error);
}

TEST_CASE("cycle type labels") {
  CHECK(cycle_type_label({1, 1, 1}) == "[1^3]");
  CHECK(cycle_type_label({1, 2}) == "[1^1 2^1]");
  CHECK(cycle_type_label({2, 3}) == "[2^1 3^1]");
  CHECK(cycle_type_label({1, 2, 2}) == "[1^1 2^2]");
  CHECK(cycle_type_label({5}) == "[5^1]");
}

TEST_CASE("symmetric group structure") {
  PermGroup s3 = symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.conjugacy_classes().size() == 3);
  CHECK(s3.identity_label() == "[1^3]");
  CHECK(s3.has_class("[1^1 2^1]"));
  CHECK(s3.has_class("[3^1]"));
  CHECK_FALSE(s3.has_class("[2^1 3^1]"));
  CHECK(s3.class_by_label("[1^1 2^1]").size == 3);
  CHECK(s3.class_by_label("[3^1]").size == 2);
  CHECK(s3.class_by_label("[3^1]").element_order == 3);
  CHECK(s3.class_of(Perm::from_cycles(3, {{2, 3}})).label == "[1^1 2^1]");
  CHECK(s3.is_centerless());
  CHECK(s3.subgroups().size() == 6);

  CHECK(s3.class_power("[1^1 2^1]", 2) == "[1^3]");
  CHECK(s3.class_power("[3^1]", 2) == "[3^1]");
  CHECK(s3.class_power("[3^1]", 3) == "[1^3]");
  CHECK(s3.class_power("[3^1]", 0) == "[1^3]");

  PermGroup s5 = symmetric(5);
  CHECK(s5.order() == 120);
  CHECK(s5.conjugacy_classes().size() == 7);
  CHECK(s5.class_power("[1^1 4^1]", 2) == "[1^1 2^2]");
  CHECK(s5.class_power("[2^1 3^1]", 2) == "[1^2 3^1]");
  CHECK(s5.class_power("[2^1 3^1]", 3) == "[1^3 2^1]");
  CHECK(s5.class_power("[5^1]", 5) == "[1^5]");
  CHECK_THROWS_AS(s5.class_by_label("[6^1]"), error);
}

TEST_CASE("label collisions in abelian groups") {
  PermGroup c4(4, {Perm::from_cycles(4, {{1, 2, 3, 4}})});
  CHECK(c4.order() == 4);
  CHECK(c4.conjugacy_classes().size() == 4);
  CHECK_FALSE(c4.is_centerless());
  CHECK(c4.has_class("[4^1]@1"));
  CHECK(c4.has_class("[4^1]@2"));
  CHECK_FALSE(c4.has_class("[4^1]"));
  CHECK(c4.has_class("[2^2]"));
  CHECK(c4.class_power("[2^2]", 2) == "[1^4]");
  /* Squaring either 4-cycle class lands on the unique involution class. */
  CHECK(c4.class_power("[4^1]@1", 2) == "[2^2]");
  CHECK(c4.class_power("[4^1]@2", 2) == "[2^2]");
}

TEST_CASE("group completeness of class sets") {
  PermGroup s3 = symmetric(3);
  CHECK(is_g_complete(s3, {"[1^1 2^1]", "[3^1]"}) == Tri::yes);
  CHECK(is_g_complete(s3, {"[3^1]"}) == Tri::no);
  CHECK(is_g_complete(s3, {"[1^1 2^1]"}) == Tri::no);
  CHECK(is_g_complete_any(s3, {{"[1^1 2^1]"}, {"[3^1]"}}) == Tri::yes);
  /* One witness with alternatives: the rotation subgroup meets the 3-cycle
   * alternative, so the disjunction is not complete. */
  CHECK(is_g_complete_any(s3, {{"[1^1 2^1]", "[3^1]"}}) == Tri::no);

  PermGroup s5 = symmetric(5);
  CHECK(is_g_complete(s5, {"[1^1 4^1]", "[2^1 3^1]"}) == Tri::yes);
  CHECK(is_g_complete(s5, {"[5^1]"}) == Tri::no);

  PermGroup s6 = symmetric(6);
  CHECK(s6.order() == 720);
  CHECK(is_g_complete(s6, {"[6^1]"}) == Tri::unknown);
}

TEST_CASE("bivariate polynomials") {
  /* X^3 - T X + T^2 */
  BivarPoly f({PolyQ::monomial(Rat(1), 2), PolyQ::monomial(Rat(-1), 1), PolyQ(), PolyQ::one()});
  CHECK(f.x_degree() == 3);
  CHECK(f.monic_in_x());
  CHECK(f.at_t(Rat(7)) == PolyQ({Rat(49), Rat(-7), Rat(0), Rat(1)}));
  CHECK(f.at_t(Rat(0)) == PolyQ::monomial(Rat(1), 3));
  BivarPoly g({PolyQ::one(), PolyQ(), PolyQ::monomial(Rat(2), 0)});
  CHECK_FALSE(g.monic_in_x());
}

TEST_CASE("bundled cover families") {
  CoverData tri3 = make_trinomial_cover(3, 1, 2, 1);
  CHECK(tri3.name == "trinomial(3,1,2,1)");
  CHECK(tri3.group.concrete());
  CHECK(tri3.group.order() == 6);
  CHECK(tri3.centerless);
  REQUIRE(tri3.orbits.size() == 3);
  CHECK(tri3.orbit(0).point.rational_value() == Rat(0));
  CHECK(tri3.orbit(0).class_label == "[1^1 2^1]");
  CHECK(tri3.orbit(1).point.is_infinity());
  CHECK(tri3.orbit(1).class_label == "[3^1]");
  CHECK(tri3.orbit(2).point.rational_value() == Rat(4, 27));
  CHECK(tri3.orbit(2).class_label == "[1^1 2^1]");
  CHECK(tri3.branch_point_count() == 3);
  CHECK(tri3.has_rational_branch_point());
  CHECK(specialize_defining_poly(tri3, Rat(7)) == PolyQ({Rat(49), Rat(-7), Rat(0), Rat(1)}));

  CoverData tri5 = make_trinomial_cover(5, 2, 2, 1);
  CHECK(tri5.group.order() == 120);
  CHECK(tri5.orbit(0).class_label == "[2^1 3^1]");
  CHECK(tri5.orbit(1).class_label == "[5^1]");
  CHECK(tri5.orbit(2).point.rational_value() == Rat(108, 3125));
  CHECK(tri5.orbit(2).class_label == "[1^3 2^1]");
  CHECK(specialize_defining_poly(tri5, Rat(7)) ==
        PolyQ({Rat(49), Rat(0), Rat(-7), Rat(0), Rat(0), Rat(1)}));

  CHECK_THROWS_AS(make_trinomial_cover(4, 2, 1, 1), error);
  CHECK_THROWS_AS(make_trinomial_cover(3, 1, 1, 1), error);
  CHECK_THROWS_AS(make_trinomial_cover(11, 1, 10, 9), error);

  CoverData quad = make_quadratic_cover({PolyQ({Rat(0), Rat(1)})}, "quad_t");
  CHECK(quad.group.order() == 2);
  REQUIRE(quad.orbits.size() == 2);
  CHECK(quad.orbit(0).point.is_zero());
  CHECK(quad.orbit(1).point.is_infinity());
  CHECK(quad.vertical_ram_primes == std::set<long>{2});
  CHECK(specialize_defining_poly(quad, Rat(5)) == PolyQ({Rat(-5), Rat(0), Rat(1)}));

  CoverData pair = make_quadratic_cover(
      {PolyQ({Rat(1), Rat(0), Rat(1)}), PolyQ({Rat(-2), Rat(0), Rat(1)})}, "two_quadratics");
  CHECK(pair.orbits.size() == 2);
  CHECK(pair.branch_point_count() == 4);
  CHECK_FALSE(pair.has_rational_branch_point());
  CHECK_THROWS_AS(make_quadratic_cover({PolyQ({Rat(1), Rat(0), Rat(1)}),
                                        PolyQ({Rat(1), Rat(0), Rat(1)})},
                                       "square"),
                  error);

  CoverData monster = make_monster_cover();
  CHECK_FALSE(monster.group.concrete());
  CHECK(monster.group.has_class("2A"));
  CHECK(monster.group.class_element_order("29A") == 29);
  CHECK(monster.group.divides_order(Int(71)));
  CHECK_FALSE(monster.group.divides_order(Int(37)));
  CHECK(monster.group.class_power("2A", 2) == monster.group.identity_label());
  CHECK(monster.group.class_power("3B", 2) == "3B");
  CHECK(monster.orbits.size() == 3);
  CHECK_FALSE(monster.defining_poly.has_value());
}

TEST_CASE("synthetic covers validate their class data") {
  PermGroup s5 = symmetric(5);
  CoverData syn = make_synthetic_cover("syn", s5,
                                       {{Rat(0), "[5^1]"}, {Rat(1), "[1^1 4^1]"}});
  CHECK(syn.orbits.size() == 2);
  CHECK(syn.centerless);
  CHECK_THROWS_AS(make_synthetic_cover("bad", s5, {{Rat(0), "[9^1]"}}), error);
  CHECK_THROWS_AS(make_synthetic_cover("bad", s5, {{Rat(0), "[1^5]"}}), error);
  CHECK_THROWS_AS(make_synthetic_cover("bad", s5,
                                       {{Rat(0), "[5^1]"}, {Rat(0), "[1^1 4^1]"}}),
                  error);
  CHECK_THROWS_AS(make_synthetic_cover("bad", s5, {}), error);
}

TEST_CASE("good and bad primes") {
  CoverData tri3 = make_trinomial_cover(3, 1, 2, 1);
  std::set<long> bad;
  for (long p = 2; p <= 200; ++p) {
    if (!is_prime(Int(p))) continue;
    PrimeVerdict v = classify_prime(tri3, p);
    CHECK(v.good == v.reasons.empty());
    if (!v.good) bad.insert(p);
  }
  CHECK(bad == std::set<long>{2, 3});

  CoverData quad2 = load_cover_file("data/quad_t2p1.json");
  std::set<long> bad2;
  for (long p = 2; p <= 200; ++p) {
    if (!is_prime(Int(p))) continue;
    if (!classify_prime(quad2, p).good) bad2.insert(p);
  }
  CHECK(bad2 == std::set<long>{2});

  CoverData syn = load_cover_file("data/synthetic_s5.json");
  std::set<long> bad3;
  for (long p = 2; p <= 60; ++p) {
    if (!is_prime(Int(p))) continue;
    if (!classify_prime(syn, p).good) bad3.insert(p);
  }
  CHECK(bad3 == std::set<long>{2, 3, 5});

  CoverData monster = make_monster_cover();
  CHECK_FALSE(classify_prime(monster, 71).good);
  CHECK(classify_prime(monster, 37).good);
  CHECK(classify_prime(monster, 73).good);
}

TEST_CASE("branch point membership") {
  CoverData tri3 = make_trinomial_cover(3, 1, 2, 1);
  CHECK(is_branch_point(tri3, PointP1::finite(Rat(0))));
  CHECK(is_branch_point(tri3, PointP1::finite(Rat(4, 27))));
  CHECK(is_branch_point(tri3, PointP1::infinity()));
  CHECK_FALSE(is_branch_point(tri3, PointP1::finite(Rat(1))));

  CoverData pair = make_quadratic_cover({PolyQ({Rat(1), Rat(0), Rat(1)})}, "qi");
  CHECK_FALSE(is_branch_point(pair, PointP1::finite(Rat(3))));
}

TEST_CASE("cover files round trip") {
  const char* names[] = {"mestre_a5",      "monster",   "quad_t",
                         "quad_t2p1",      "quad_t2p1_t2m2", "synthetic_s5",
                         "trinomial_3_1_2_1", "trinomial_5_2_2_1"};
  for (const char* n : names) {
    CoverData c = load_cover_file(std::string("data/") + n + ".json");
    std::string once = save_cover_json(c);
    CoverData c2 = load_cover_json(once);
    CHECK_MESSAGE(save_cover_json(c2) == once, n);
    CHECK(c2.name == c.name);
    CHECK(c2.orbits.size() == c.orbits.size());
    CHECK(c2.group.order() == c.group.order());
    CHECK(c2.centerless == c.centerless);
    CHECK(c2.vertical_ram_primes == c.vertical_ram_primes);
    CHECK(c2.defining_poly.has_value() == c.defining_poly.has_value());
  }
}

TEST_CASE("cover files reject inconsistent data") {
  CoverData quad = load_cover_file("data/quad_t.json");
  std::string base = save_cover_json(quad);

  std::string wrong_class = base;
  size_t pos = wrong_class.find("[2^1]");
  REQUIRE(pos != std::string::npos);
  wrong_class.replace(pos, 5, "[9^1]");
  CHECK_THROWS_AS(load_cover_json(wrong_class), error);

  CHECK_THROWS_AS(load_cover_json("{}"), error);
  CHECK_THROWS_AS(load_cover_json("not json"), error);

  std::string flipped = base;
  pos = flipped.find("\"centerless\": false");
  REQUIRE(pos != std::string::npos);
  flipped.replace(pos, 19, "\"centerless\": true");
  CHECK_THROWS_AS(load_cover_json(flipped), error);
}

TEST_CASE("caveats carried by constructions") {
  CoverData mestre = make_mestre_a5_cover();
  bool has_field_caveat = false;
  for (const std::string& c : mestre.caveats)
    if (c.find("quadratic extension") != std::string::npos) has_field_caveat = true;
  CHECK(has_field_caveat);

  CoverData quad = make_quadratic_cover({PolyQ({Rat(0), Rat(1)})}, "q");
  bool assumed = false;
  for (const std::string& c : quad.caveats)
    if (c.find("vertical ramification assumed") != std::string::npos) assumed = true;
  CHECK_FALSE(quad.centerless);
  CHECK_FALSE(assumed);

  PermGroup c4(4, {Perm::from_cycles(4, {{1, 2, 3, 4}})});
  CoverData syn = make_synthetic_cover("c4", c4, {{Rat(0), "[4^1]@1"}});
  bool assumed2 = false;
  for (const std::string& c : syn.caveats)
    if (c.find("vertical ramification assumed") != std::string::npos) assumed2 = true;
  CHECK(assumed2);
}
