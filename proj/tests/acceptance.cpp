#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ramiforge/parametricity.hpp"
#include "ramiforge/prescriber.hpp"
#include "ramiforge/sweep.hpp"

using namespace ramiforge;

namespace {

int failures = 0;

void report(const char* tag, bool pass, const std::string& detail = "") {
  std::printf("[%s] %s\n", tag, pass ? "PASS" : "FAIL");
  if (!pass) {
    ++failures;
    if (!detail.empty()) std::fprintf(stderr, "  %s: %s\n", tag, detail.c_str());
  }
}

template <typename F>
void criterion(const char* tag, F body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(tag, false, std::string("exception: ") + e.what());
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::pair<long, long>> segment_multiset(const RamReport& r) {
  std::vector<std::pair<long, long>> out;
  for (const RamSegment& s : r.segments) out.emplace_back(s.e, s.cycles);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main() {
  CoverData quad = load_cover_file("data/quad_t2p1.json");
  CoverData tri3 = make_trinomial_cover(3, 1, 2, 1);

  /* A1: two-prime ramified prescription on the quadratic cover, replayed
   * through the p-adic oracle on 25 progression points. Exact, under 1 s. */
  criterion("A1", [&] {
    auto start = std::chrono::steady_clock::now();
    Recipe r = build_recipe(quad, {{5, 0, 1}, {13, 0, 1}}, {}, 0);
    bool ok = r.theta == Rat(2202) && r.modulus == 4225;
    int rows = 0;
    for (long u = 0; u < 25 && ok; ++u) {
      Rat t0 = recipe_point(r, u);
      for (long p : {5L, 13L}) {
        RamReport rep = tame_splitting_type(specialize_defining_poly(quad, t0), p);
        if (rep.verdict != RamVerdict::ramified || rep.e_total != 2) {
          ok = false;
          break;
        }
        ++rows;
      }
    }
    double dt = seconds_since(start);
    report("A1", ok && rows == 50 && dt < 1.0,
           "rows=" + std::to_string(rows) + " time=" + std::to_string(dt));
  });

  /* A2: even multiplicity cancels the order-2 inertia, leaving 5
   * unramified on 25 progression points. Exact. */
  criterion("A2", [&] {
    Recipe r = build_recipe(quad, {{5, 0, 2}}, {}, 0);
    int rows = 0;
    for (long u = 0; u < 25; ++u) {
      Rat t0 = recipe_point(r, u);
      RamReport rep = tame_splitting_type(specialize_defining_poly(quad, t0), 5);
      if (rep.verdict != RamVerdict::unramified) break;
      ++rows;
    }
    report("A2", rows == 25, "unramified rows=" + std::to_string(rows));
  });

  /* A3: every rational specialization of the quadratic cover has positive
   * discriminant, so the imaginary quadratic field Q(i) never appears. */
  criterion("A3", [&] {
    std::vector<Rat> pts = agreement_points(200);
    bool ok = pts.size() == 200;
    for (const Rat& t0 : pts) {
      Rat disc = discriminant(specialize_defining_poly(quad, t0));
      if (!(disc > 0)) {
        ok = false;
        break;
      }
      if (is_rational_square(-(t0 * t0 + 1))) {
        ok = false;
        break;
      }
    }
    report("A3", ok);
  });

  /* A4: inertia prescription on the cubic trinomial cover at both a finite
   * orbit and the orbit over infinity, confirmed segment by segment. */
  criterion("A4", [&] {
    Recipe r1 = build_recipe(tri3, {{7, 2, 1}}, {}, 0);
    bool ok = true;
    for (long u = 0; u < 25 && ok; ++u) {
      RamReport rep =
          tame_splitting_type(specialize_defining_poly(tri3, recipe_point(r1, u)), 7);
      ok = rep.verdict == RamVerdict::ramified &&
           segment_multiset(rep) ==
               std::vector<std::pair<long, long>>{{1, 1}, {2, 1}} &&
           cycle_type_label(rep.inertia_cycle_type) == "[1^1 2^1]";
    }
    Recipe r2 = build_recipe(tri3, {{5, 1, 1}}, {}, 0);
    for (long u = 0; u < 25 && ok; ++u) {
      RamReport rep =
          tame_splitting_type(specialize_defining_poly(tri3, recipe_point(r2, u)), 5);
      ok = rep.verdict == RamVerdict::ramified &&
           segment_multiset(rep) == std::vector<std::pair<long, long>>{{3, 1}} &&
           cycle_type_label(rep.inertia_cycle_type) == "[3^1]";
    }
    report("A4", ok);
  });

  /* A5: the splitting group claim certifies on at least 20 of the 25 A4
   * points, and never certifies on covers whose claim overshoots the true
   * group. */
  criterion("A5", [&] {
    Recipe r1 = build_recipe(tri3, {{7, 2, 1}}, {}, 0);
    int certified = 0;
    for (long u = 0; u < 25; ++u) {
      CertifyReport rep = certify_group(tri3, recipe_point(r1, u), 200);
      if (rep.status == CertifyStatus::certified) ++certified;
    }

    PermGroup s3(3, {Perm::from_cycles(3, {{1, 2}}), Perm::from_cycles(3, {{1, 2, 3}})});
    CoverData fake{"fake_s3",
                   GroupModel(s3),
                   {{AlgPoint::from_minpoly(PolyQ({Rat(1), Rat(0), Rat(1)})), "[1^1 2^1]"}},
                   BivarPoly({PolyQ({Rat(0), Rat(1), Rat(0), Rat(1)}),
                              PolyQ({Rat(-1), Rat(0), Rat(-1)}), PolyQ({Rat(0), Rat(-1)}),
                              PolyQ::one()}),
                   {},
                   true,
                   {}};
    CoverData cyclic{"cyclic_cubic",
                     GroupModel(s3),
                     {{AlgPoint::rational(Rat(0)), "[3^1]"}},
                     BivarPoly({PolyQ({Rat(-1)}), PolyQ({Rat(-3)}), PolyQ(), PolyQ::one()}),
                     {},
                     true,
                     {}};
    int false_certs = 0;
    for (long t = 2; t <= 11; ++t) {
      if (certify_group(fake, Rat(t), 200).status == CertifyStatus::certified) ++false_certs;
      if (certify_group(cyclic, Rat(t), 200).status == CertifyStatus::certified)
        ++false_certs;
    }
    report("A5", certified >= 20 && false_certs == 0,
           "certified=" + std::to_string(certified) +
               " false_certs=" + std::to_string(false_certs));
  });

  /* A6: the cubic trinomial cover is bad exactly at {2, 3} below 200. */
  criterion("A6", [&] {
    bool ok = true;
    for (long p : primes_up_to(200)) {
      bool expect_bad = p == 2 || p == 3;
      if (classify_prime(tri3, p).good != !expect_bad) {
        ok = false;
        break;
      }
    }
    report("A6", ok);
  });

  /* A7: good primes of the large sporadic-group dataset below 200. */
  criterion("A7", [&] {
    CoverData monster = make_monster_cover();
    std::set<long> good;
    for (long p : primes_up_to(200))
      if (classify_prime(monster, p).good) good.insert(p);
    std::set<long> expected{37, 43, 53, 61, 67};
    for (long p : primes_up_to(200))
      if (p >= 73) expected.insert(p);
    report("A7", good == expected);
  });

  /* A8: 1000 randomized lifting instances land on the target valuation
   * exactly, with a p-integral result, in under 5 s. */
  criterion("A8", [&] {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(20240816);
    std::uniform_int_distribution<int> coeff(-50, 50);
    std::uniform_int_distribution<int> deg_d(1, 4);
    std::uniform_int_distribution<long> target_d(1, 5);
    std::vector<long> primes = primes_up_to(50);
    std::uniform_int_distribution<size_t> prime_d(0, primes.size() - 1);
    int done = 0;
    bool ok = true;
    while (done < 1000 && ok) {
      long p = primes[prime_d(rng)];
      int d = deg_d(rng);
      std::vector<Rat> c(static_cast<size_t>(d) + 1);
      for (auto& x : c) x = Rat(coeff(rng));
      c.back() = Rat(1);
      PolyQ m(c);
      long target = target_d(rng);
      Rat theta;
      try {
        theta = lift_to_valuation(m, p, target);
      } catch (const error&) {
        continue;
      }
      ok = vp(m.eval(theta), p) == ExtVal::finite(target) &&
           vp(theta, p).nonnegative();
      ++done;
    }
    double dt = seconds_since(start);
    report("A8", ok && done == 1000 && dt < 5.0,
           "done=" + std::to_string(done) + " time=" + std::to_string(dt));
  });

  /* A9: the class [2^1 3^1] sits outside the power closure of the synthetic
   * quintic family, and a prescribed specialization realizes it. */
  criterion("A9", [&] {
    CoverData tri5 = make_trinomial_cover(5, 2, 2, 1);
    CoverData syn = load_cover_file("data/synthetic_s5.json");

    ClosureReport cl = inertia_closure(syn);
    std::set<std::string> closure(cl.closure.begin(), cl.closure.end());
    std::set<std::string> brute;
    const PermGroup& g = syn.group.perm();
    for (const BranchOrbit& orb : syn.orbits)
      for (const Perm& e : g.elements()) {
        if (g.class_of(e).label != orb.class_label) continue;
        for (long k = 1; k <= e.order(); ++k) brute.insert(g.class_of(e.power(k)).label);
      }
    bool ok = closure == brute && !closure.count("[2^1 3^1]");

    HypothesisVerdict ih = check_inertia_hypothesis(tri5, syn);
    ok = ok && ih.holds &&
         std::count(ih.witness_classes.begin(), ih.witness_classes.end(), "[2^1 3^1]") == 1;

    Recipe r = build_recipe(tri5, {{7, 0, 1}}, {}, 0);
    Rat t0 = recipe_point(r, first_valid_u(r));
    RamReport rep = tame_splitting_type(specialize_defining_poly(tri5, t0), 7);
    ok = ok && rep.decided() && rep.verdict == RamVerdict::ramified &&
         cycle_type_label(rep.inertia_cycle_type) == "[2^1 3^1]" &&
         !closure.count(cycle_type_label(rep.inertia_cycle_type));
    report("A9", ok);
  });

  /* A10: exact residue-class separation of the two quadratic covers,
   * cross-checked against divisor scans up to 500. */
  criterion("A10", [&] {
    CoverData c1 = load_cover_file("data/quad_t.json");
    CoverData c2 = load_cover_file("data/quad_t2p1_t2m2.json");
    HypothesisVerdict v = check_branch_point_hypothesis(c1, c2, 500);
    bool ok = v.holds && v.exact && v.modulus == 8 && v.residues == std::vector<long>{3};

    std::set<long> d1, d2, flagged(v.excluded_primes.begin(), v.excluded_primes.end());
    for (long p : ramifiable_primes(c1, 500).primes) d1.insert(p);
    for (long p : ramifiable_primes(c2, 500).primes) d2.insert(p);
    for (long p : primes_up_to(500)) {
      if (flagged.count(p)) continue;
      bool separated = d1.count(p) && !d2.count(p);
      if (separated != (p % 8 == 3)) {
        ok = false;
        break;
      }
    }
    report("A10", ok);
  });

  /* A11: on the quadratic cover, good primes split exactly by residue mod 4
   * into never-ramifying primes and verified witnesses. */
  criterion("A11", [&] {
    bool ok = true;
    for (long p : primes_up_to(100)) {
      if (!classify_prime(quad, p).good) continue;
      WitnessReport w = ramification_witness(quad, p);
      if (p % 4 == 3) {
        if (!w.never_ramifies) {
          ok = false;
          break;
        }
      } else {
        if (w.never_ramifies || !w.witness.has_value() || w.class_label != "[2^1]") {
          ok = false;
          break;
        }
        InertiaPrediction pred = predict_inertia(quad, p, *w.witness);
        if (pred.status != InertiaStatus::decided || pred.unramified ||
            pred.class_label != "[2^1]") {
          ok = false;
          break;
        }
      }
    }
    report("A11", ok);
  });

  /* A12: prediction and oracle agree on every decided pair across the
   * bundled corpus, at least 2000 pairs, in under 60 s. */
  criterion("A12", [&] {
    auto start = std::chrono::steady_clock::now();
    const char* corpus[] = {"data/quad_t.json", "data/quad_t2p1.json",
                            "data/quad_t2p1_t2m2.json", "data/trinomial_3_1_2_1.json"};
    long pairs = 0, mismatches = 0;
    std::vector<Rat> pts = agreement_points(50);
    for (const char* path : corpus) {
      CoverData cover = load_cover_file(path);
      AgreementReport rep = agreement_window(cover, 100, pts);
      pairs += rep.pairs_checked;
      mismatches += static_cast<long>(rep.mismatches.size());
    }
    double dt = seconds_since(start);
    report("A12", pairs >= 2000 && mismatches == 0 && dt < 60.0,
           "pairs=" + std::to_string(pairs) + " mismatches=" + std::to_string(mismatches) +
               " time=" + std::to_string(dt));
  });

  return failures == 0 ? 0 : 1;
}
