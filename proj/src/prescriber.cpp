#include "ramiforge/prescriber.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ramiforge/polyfp.hpp"

namespace ramiforge {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const std::string& s : parts) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

Int int_pow(long p, long e) {
  Int out(p);
  mpz_pow_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

void require_good(const CoverData& cover, long p) {
  PrimeVerdict v = classify_prime(cover, p);
  if (!v.good)
    fail(errc::invalid_input, "p = " + std::to_string(p) + " is a bad prime for '" + cover.name +
                                  "': " + join(v.reasons, "; "));
}

}  // namespace

Rat lift_to_valuation(const PolyQ& m, long p, long target) {
  Int P(p);
  if (!is_prime(P)) fail(errc::invalid_input, std::to_string(p) + " is not prime");
  if (target < 1) fail(errc::invalid_input, "target valuation must be >= 1");
  if (m.degree() < 1 || !m.is_monic())
    fail(errc::invalid_input, "valuation lift needs a monic polynomial of degree >= 1");
  if (!m.p_integral(P))
    fail(errc::invalid_input, "valuation lift needs p-integral coefficients at p = " +
                                  std::to_string(p));

  PolyFp mbar = PolyFp::from_polyq(m, static_cast<uint64_t>(p));
  std::vector<uint64_t> roots = mbar.roots();
  if (roots.empty())
    fail(errc::invalid_input,
         m.str() + " has no residue root mod " + std::to_string(p) + "; nothing to lift");
  uint64_t rho = *std::min_element(roots.begin(), roots.end());

  PolyQ md = m.derivative();
  auto require_simple = [&](const Rat& x) {
    if (vp(md.eval(x), P) != ExtVal::finite(0))
      fail(errc::invalid_input, "residue root of " + m.str() + " is not simple mod " +
                                    std::to_string(p) + " (prime unusable)");
  };

  Rat theta(static_cast<long>(rho));
  require_simple(theta);
  if (vp(m.eval(theta), P) != ExtVal::finite(1)) theta += p;
  if (vp(m.eval(theta), P) != ExtVal::finite(1))
    fail(errc::internal, "seed adjustment missed valuation 1");
  if (target == 1) return theta;

  /* Valuation 1 -> 2: the quadratic Taylor term competes with the target,
   * so the correction size depends on its unit part. */
  require_simple(theta);
  Rat c2 = md.derivative().eval(theta) / 2;
  long k = vp(c2, P).positive() ? 2 : 3;
  Rat eps(1);
  for (long i = 0; i < k; ++i) eps *= p;
  theta += -m.eval(theta) / md.eval(theta) + eps;
  if (vp(m.eval(theta), P) != ExtVal::finite(2))
    fail(errc::internal, "lift step missed valuation 2");

  for (long d = 2; d < target; ++d) {
    require_simple(theta);
    Rat eps2(1);
    for (long i = 0; i <= d; ++i) eps2 *= p;
    theta += -m.eval(theta) / md.eval(theta) + eps2;
    if (vp(m.eval(theta), P) != ExtVal::finite(d + 1))
      fail(errc::internal, "lift step missed valuation " + std::to_string(d + 1));
  }
  return theta;
}

namespace {

long frobenius_residue(const CoverData& cover, const FrobeniusRequest& r, uint64_t seed) {
  const PermGroup& g = cover.group.perm();
  const ConjClass& cls = g.class_by_label(r.class_label);
  int sharing = 0;
  for (const ConjClass& c : g.conjugacy_classes())
    if (c.type == cls.type) ++sharing;
  if (sharing > 1)
    fail(errc::capability, "cycle type " + cycle_type_label(cls.type) + " is shared by " +
                               std::to_string(sharing) +
                               " classes; a substitution pattern cannot pin down " + r.class_label);

  std::vector<long> want(cls.type.begin(), cls.type.end());
  Int P(r.p);
  long n = cover.defining_poly->x_degree();
  for (long rho = 0; rho < r.p; ++rho) {
    PolyQ f = cover.defining_poly->at_t(Rat(rho));
    if (f.degree() != n || !f.p_integral(P)) continue;
    PolyFp fbar = PolyFp::from_polyq(f, static_cast<uint64_t>(r.p));
    if (!fbar.is_squarefree()) continue;
    FpFactorization fac = factor_mod_p(fbar, seed);
    std::vector<long> degs;
    for (const FpFactor& ff : fac.factors) degs.push_back(ff.factor.degree());
    std::sort(degs.begin(), degs.end());
    if (degs == want) return rho;
  }
  fail(errc::invalid_input, "no residue mod " + std::to_string(r.p) +
                                " yields substitution pattern " + cycle_type_label(cls.type));
}

}  // namespace

Recipe build_recipe(const CoverData& cover, const std::vector<InertiaRequest>& inertia,
                    const std::vector<FrobeniusRequest>& frobenius, uint64_t seed) {
  if (inertia.empty() && frobenius.empty())
    fail(errc::invalid_input, "a recipe needs at least one request");
  std::set<long> used_primes;
  for (const InertiaRequest& r : inertia) {
    if (r.multiplicity < 1) fail(errc::invalid_input, "multiplicity must be >= 1");
    if (r.orbit >= cover.orbits.size())
      fail(errc::invalid_input, "orbit index " + std::to_string(r.orbit) + " out of range");
    if (!used_primes.insert(r.p).second)
      fail(errc::invalid_input, "prime " + std::to_string(r.p) + " requested twice");
    require_good(cover, r.p);
  }
  for (const FrobeniusRequest& r : frobenius) {
    if (!used_primes.insert(r.p).second)
      fail(errc::invalid_input, "prime " + std::to_string(r.p) + " requested twice");
    require_good(cover, r.p);
    if (!cover.group.has_class(r.class_label))
      fail(errc::invalid_input, "no conjugacy class labeled '" + r.class_label + "'");
  }
  if (!frobenius.empty()) {
    if (!cover.group.concrete())
      fail(errc::capability, "Frobenius prescription needs a concrete permutation group");
    if (!cover.defining_poly)
      fail(errc::capability, "Frobenius prescription needs a defining polynomial");
  }

  Recipe out;
  out.cover_name = cover.name;
  out.caveats = cover.caveats;

  Int D(1);
  for (const InertiaRequest& r : inertia)
    if (cover.orbits[r.orbit].point.is_infinity()) D *= int_pow(r.p, r.multiplicity);
  out.denominator = D;

  std::vector<Congruence> congs;
  for (const InertiaRequest& r : inertia) {
    const BranchOrbit& orb = cover.orbits[r.orbit];
    std::string predicted = cover.group.class_power(orb.class_label, r.multiplicity);
    if (orb.point.is_infinity()) {
      Congruence c{Rat(D / int_pow(r.p, r.multiplicity)), int_pow(r.p, 2 * r.multiplicity + 1)};
      congs.push_back(c);
      out.inertia.push_back({r, predicted, c});
    } else {
      const PolyQ& m = orb.point.minpoly();
      if (!m.p_integral(Int(r.p)))
        fail(errc::capability, "orbit " + orb.point.str() + " loses integrality at p = " +
                                   std::to_string(r.p) +
                                   "; the construction needs the finite chart");
      Rat theta_j = lift_to_valuation(m, r.p, r.multiplicity);
      Congruence c{Rat(D) * theta_j, int_pow(r.p, r.multiplicity + 1)};
      congs.push_back(c);
      out.inertia.push_back({r, predicted, c});
    }
  }
  for (const FrobeniusRequest& r : frobenius) {
    long rho = frobenius_residue(cover, r, seed);
    Congruence c{Rat(D) * Rat(rho), Int(r.p)};
    congs.push_back(c);
    out.frobenius.push_back({r, rho, c});
  }

  Int n = crt(congs);
  out.theta = Rat(n) / Rat(D);
  Int M(1);
  for (const PlacedInertia& e : out.inertia)
    if (!cover.orbits[e.request.orbit].point.is_infinity())
      M *= int_pow(e.request.p, e.request.multiplicity + 1);
  for (const PlacedFrobenius& e : out.frobenius) M *= e.request.p;
  out.modulus = M;

  for (const BranchOrbit& orb : cover.orbits) {
    if (!orb.point.is_rational()) continue;
    Rat u = (orb.point.rational_value() - out.theta) / Rat(M);
    if (u.get_den() == 1) {
      if (mpz_fits_slong_p(u.get_num().get_mpz_t()))
        out.excluded_u.push_back(u.get_num().get_si());
      else
        out.caveats.push_back("a rational branch point sits at an offset beyond the index range");
    }
  }
  std::sort(out.excluded_u.begin(), out.excluded_u.end());
  return out;
}

Rat recipe_point(const Recipe& recipe, long u) {
  return recipe.theta + Rat(recipe.modulus) * Rat(Int(u));
}

long first_valid_u(const Recipe& recipe) {
  for (long u = 0;; ++u)
    if (!std::count(recipe.excluded_u.begin(), recipe.excluded_u.end(), u)) return u;
}

InertiaPrediction predict_inertia(const CoverData& cover, long p, const PointP1& t0) {
  PrimeVerdict pv = classify_prime(cover, p);
  if (!pv.good)
    fail(errc::invalid_input, "p = " + std::to_string(p) +
                                  " is a bad prime; inertia prediction needs a good prime (" +
                                  join(pv.reasons, "; ") + ")");
  if (is_branch_point(cover, t0))
    fail(errc::invalid_input, "t0 = " + t0.str() + " is a branch point");

  Int P(p);
  InertiaPrediction out;
  std::optional<size_t> meet;
  long meet_mult = 0;
  bool ambiguous_meet = false;
  bool fully_unknown = false;

  for (size_t j = 0; j < cover.orbits.size(); ++j) {
    const AlgPoint& tj = cover.orbits[j].point;
    bool decided_here = false;
    try {
      long mult = intersection_multiplicity(P, t0, tj).value();
      decided_here = true;
      if (mult >= 1) {
        if (meet || ambiguous_meet)
          fail(errc::internal, "two branch orbits meet one point at a good prime");
        meet = j;
        meet_mult = mult;
      }
    } catch (const error& e) {
      if (e.kind() != errc::invalid_input) throw;
    }
    if (decided_here) continue;
    try {
      if (meets(P, t0, tj)) {
        if (meet) fail(errc::internal, "two branch orbits meet one point at a good prime");
        ambiguous_meet = true;
        out.notes.push_back("t0 meets " + tj.str() + " mod " + std::to_string(p) +
                            " but the multiplicity is chart-ambiguous");
      }
    } catch (const error& e) {
      if (e.kind() != errc::invalid_input) throw;
      fully_unknown = true;
      out.notes.push_back("orbit " + tj.str() + " is chart-ambiguous at p = " +
                          std::to_string(p));
    }
  }

  if (meet) {
    out.status = InertiaStatus::decided;
    out.meeting_orbit = meet;
    out.multiplicity = meet_mult;
    out.class_label = cover.group.class_power(cover.orbits[*meet].class_label, meet_mult);
    out.unramified = out.class_label == cover.group.identity_label();
    if (fully_unknown)
      out.notes.push_back(
          "chart-ambiguous orbits cannot also meet t0 at a good prime; the decision stands");
  } else if (ambiguous_meet || fully_unknown) {
    out.status = InertiaStatus::undecidable;
  } else {
    out.status = InertiaStatus::decided;
    out.class_label = cover.group.identity_label();
    out.unramified = true;
  }
  return out;
}

WitnessReport ramification_witness(const CoverData& cover, long p) {
  WitnessReport rep;
  rep.p = p;
  require_good(cover, p);
  Int P(p);

  for (size_t j = 0; j < cover.orbits.size(); ++j) {
    const AlgPoint& tj = cover.orbits[j].point;
    PolyQ charts[2] = {tj.is_infinity() ? PolyQ::one() : tj.minpoly(),
                       reverse_minpoly(tj).is_infinity() ? PolyQ::one()
                                                         : reverse_minpoly(tj).minpoly()};
    bool any_chart = false;
    for (int side = 0; side < 2; ++side) {
      const PolyQ& cp = charts[side];
      if (cp.degree() < 1 || !cp.p_integral(P)) continue;
      any_chart = true;
      if (!is_prime_divisor(P, cp)) continue;

      Rat theta = lift_to_valuation(cp, p, 1);
      PointP1 w = side == 0 ? PointP1::finite(theta) : PointP1::finite(theta).reciprocal();
      Rat shift(1);
      for (int i = 0; i < 2; ++i) shift *= p;
      while (is_branch_point(cover, w)) {
        theta += shift;
        w = side == 0 ? PointP1::finite(theta) : PointP1::finite(theta).reciprocal();
      }

      InertiaPrediction check = predict_inertia(cover, p, w);
      if (check.status != InertiaStatus::decided || !check.meeting_orbit ||
          *check.meeting_orbit != j || check.multiplicity != 1 ||
          check.class_label != cover.orbits[j].class_label)
        fail(errc::internal, "witness failed its prediction cross-check");

      rep.witness = w;
      rep.class_label = check.class_label;
      rep.orbit = j;
      rep.notes.push_back("meets " + tj.str() + " with multiplicity 1 (" +
                          (side == 0 ? "finite" : "reciprocal") + " chart)");
      return rep;
    }
    if (!any_chart)
      fail(errc::internal, "good prime left an orbit without an integral chart");
  }

  rep.never_ramifies = true;
  rep.notes.push_back("no orbit chart polynomial has a root mod " + std::to_string(p) +
                      ", so no rational point meets a branch orbit");
  return rep;
}

DivisorReport ramifiable_primes(const CoverData& cover, long bound) {
  if (bound < 2) fail(errc::invalid_input, "bound must be at least 2");
  DivisorReport rep;
  for (long p : primes_up_to(bound)) {
    Int P(p);
    bool divisor = false;
    bool unknown = false;
    for (const BranchOrbit& orb : cover.orbits) {
      const AlgPoint& tj = orb.point;
      AlgPoint rev = reverse_minpoly(tj);
      PolyQ charts[2] = {tj.is_infinity() ? PolyQ::one() : tj.minpoly(),
                         rev.is_infinity() ? PolyQ::one() : rev.minpoly()};
      bool any_chart = false;
      for (const PolyQ& cp : charts) {
        if (cp.degree() < 1 || !cp.p_integral(P)) continue;
        any_chart = true;
        if (is_prime_divisor(P, cp)) divisor = true;
      }
      if (!any_chart) unknown = true;
      if (divisor) break;
    }
    if (divisor) {
      rep.primes.push_back(p);
    } else if (unknown) {
      rep.primes.push_back(p);
      rep.caveats.push_back("p = " + std::to_string(p) +
                            ": chart integrality fails for some orbit; included conservatively");
    }
  }
  return rep;
}

CertifyReport certify_group(const CoverData& cover, const Rat& t0, long prime_budget) {
  if (!cover.defining_poly)
    fail(errc::capability, "certification needs a defining polynomial");
  if (!cover.group.concrete())
    fail(errc::capability, "certification needs a concrete permutation group");
  for (const BranchOrbit& orb : cover.orbits)
    if (!orb.point.is_infinity() && orb.point.minpoly().eval(t0) == 0)
      fail(errc::invalid_input, "t0 = " + rat_str(t0) + " is a branch point");

  CertifyReport rep;
  rep.t0 = t0;
  const PermGroup& g = cover.group.perm();
  const long n = static_cast<long>(g.degree());
  Int nfact(1);
  for (long i = 2; i <= n; ++i) nfact *= i;
  const bool is_sym = Int(g.order()) == nfact;
  const bool is_alt = !is_sym && Int(g.order()) * 2 == nfact;
  const bool lattice_ok = g.order() <= 360;
  const bool complete_possible = (is_sym || is_alt) && lattice_ok;
  if (!is_sym && !is_alt)
    rep.notes.push_back(
        "claimed group is neither the full symmetric nor the alternating group on its points; "
        "the witnessed patterns cannot pin it down");
  if (!lattice_ok) rep.notes.push_back("group order beyond the subgroup lattice cap of 360");

  PolyQ f = specialize_defining_poly(cover, t0);
  if (is_alt && !is_rational_square(discriminant(f))) {
    rep.notes.push_back(
        "the discriminant at t0 is not a square, so the splitting group is not inside the "
        "alternating group; the claim fails at this point");
    return rep;
  }

  std::map<std::vector<int>, std::vector<std::string>> classes_by_type;
  for (const ConjClass& c : g.conjugacy_classes()) classes_by_type[c.type].push_back(c.label);

  std::set<std::vector<int>> observed;
  auto record_witnessed = [&] {
    for (const std::vector<int>& t : observed)
      rep.witnessed.push_back(join(classes_by_type.at(t), "|"));
    std::sort(rep.witnessed.begin(), rep.witnessed.end());
  };

  for (long q : primes_up_to(prime_budget)) {
    ++rep.primes_used;
    std::vector<long> degs;
    try {
      degs = frobenius_class(f, q);
    } catch (const error& e) {
      if (e.kind() != errc::invalid_input) throw;
      continue;
    }
    std::vector<int> type(degs.begin(), degs.end());
    if (!classes_by_type.count(type)) {
      record_witnessed();
      rep.notes.push_back("substitution pattern " + cycle_type_label(type) + " at q = " +
                          std::to_string(q) +
                          " is impossible in the claimed group; the claim fails at this point");
      return rep;
    }
    if (observed.insert(type).second && complete_possible) {
      std::vector<std::vector<std::string>> witnesses;
      for (const std::vector<int>& t : observed) witnesses.push_back(classes_by_type.at(t));
      if (is_g_complete_any(g, witnesses) == Tri::yes) {
        rep.status = CertifyStatus::certified;
        break;
      }
    }
  }

  record_witnessed();
  if (rep.status == CertifyStatus::inconclusive && complete_possible)
    rep.notes.push_back(
        "every witnessed pattern fits inside a proper subgroup of the claim; the prime budget "
        "is exhausted");
  return rep;
}

VerifyReport verify_recipe(const CoverData& cover, const Recipe& recipe, long u) {
  if (std::count(recipe.excluded_u.begin(), recipe.excluded_u.end(), u))
    fail(errc::invalid_input, "u = " + std::to_string(u) + " is excluded (branch point)");
  Rat t0 = recipe_point(recipe, u);
  VerifyReport rep;
  rep.t0 = t0;
  rep.caveats = recipe.caveats;
  PointP1 pt = PointP1::finite(t0);

  std::optional<PolyQ> f;
  bool oracle_ready = cover.defining_poly.has_value() && cover.group.concrete();
  if (oracle_ready) {
    f = specialize_defining_poly(cover, t0);
    if (f->degree() > 8) {
      oracle_ready = false;
      rep.caveats.push_back("degree above the splitting oracle cap; multiplicity checks only");
    }
  } else {
    rep.caveats.push_back("no defining polynomial with a concrete group; multiplicity checks only");
  }

  auto type_string = [&](const std::vector<int>& t) { return cycle_type_label(t); };

  for (const PlacedInertia& e : recipe.inertia) {
    long p = e.request.p;
    ExtVal got = intersection_multiplicity(Int(p), pt, cover.orbits[e.request.orbit].point);
    rep.checks.push_back({p, "multiplicity", true,
                          got == ExtVal::finite(e.request.multiplicity),
                          std::to_string(e.request.multiplicity), got.str()});
    if (!oracle_ready) continue;

    const PermGroup& g = cover.group.perm();
    std::vector<int> want = g.class_by_label(e.predicted_class).type;
    RamReport orc = tame_splitting_type(*f, p);
    if (orc.decided()) {
      rep.checks.push_back({p, "splitting", true, orc.inertia_cycle_type == want,
                            type_string(want), type_string(orc.inertia_cycle_type)});
    } else {
      rep.checks.push_back(
          {p, "splitting", false, true, type_string(want), "inconclusive: " + join(orc.notes, "; ")});
    }

    if (f->degree() == 2 && p != 2) {
      bool expect_ram = e.predicted_class != cover.group.identity_label();
      try {
        bool ram = quadratic_ramifies(discriminant(*f), p);
        rep.checks.push_back({p, "quadratic", true, ram == expect_ram,
                              expect_ram ? "ramified" : "unramified",
                              ram ? "ramified" : "unramified"});
      } catch (const error& err) {
        if (err.kind() != errc::invalid_input) throw;
        rep.checks.push_back({p, "quadratic", false, true,
                              expect_ram ? "ramified" : "unramified",
                              "field degenerates at this specialization"});
      }
    }
  }

  for (const PlacedFrobenius& e : recipe.frobenius) {
    long p = e.request.p;
    if (!oracle_ready) {
      rep.checks.push_back(
          {p, "frobenius", false, true, e.request.class_label, "no defining polynomial"});
      continue;
    }
    const PermGroup& g = cover.group.perm();
    std::vector<int> want = g.class_by_label(e.request.class_label).type;
    try {
      std::vector<long> degs = frobenius_class(*f, p);
      std::vector<int> got(degs.begin(), degs.end());
      rep.checks.push_back(
          {p, "frobenius", true, got == want, type_string(want), type_string(got)});
    } catch (const error& err) {
      if (err.kind() != errc::invalid_input) throw;
      rep.checks.push_back({p, "frobenius", true, false, type_string(want),
                            std::string("bad reduction: ") + err.what()});
    }
  }

  rep.all_passed = true;
  for (const VerifyCheck& c : rep.checks)
    if (c.decided && !c.pass) rep.all_passed = false;
  return rep;
}

}  // namespace ramiforge
