#ifndef RAMIFORGE_PRESCRIBER_HPP
#define RAMIFORGE_PRESCRIBER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramiforge/cover.hpp"
#include "ramiforge/crt.hpp"
#include "ramiforge/oracle.hpp"

namespace ramiforge {

/* Rational theta with v_p(m(theta)) exactly equal to target, built from the
 * smallest nonnegative residue root of m mod p by valuation-controlled
 * steps.  Requires m monic and p-integral with a simple root mod p; a root
 * whose derivative value loses integrality means p is not usable (bad
 * prime) and raises invalid_input. */
Rat lift_to_valuation(const PolyQ& m, long p, long target);

/* Request: make the cover's specialization at p ramify with inertia
 * generated by (orbit class)^multiplicity. */
struct InertiaRequest {
  long p = 0;
  size_t orbit = 0;
  long multiplicity = 1;
};

/* Request: make p unramified with Frobenius in the named class. */
struct FrobeniusRequest {
  long p = 0;
  std::string class_label;
};

struct PlacedInertia {
  InertiaRequest request;
  std::string predicted_class;
  Congruence congruence; /* constraint on n = D * t0 */
};

struct PlacedFrobenius {
  FrobeniusRequest request;
  long residue = 0; /* t0 = residue mod p */
  Congruence congruence;
};

/* Specialization recipe: every point t0 = theta + u * modulus (u integral,
 * not excluded) satisfies all placed requests at once. */
struct Recipe {
  std::string cover_name;
  Rat theta;
  Int modulus;
  Int denominator; /* D: product of p^a over requests at infinity orbits */
  std::vector<PlacedInertia> inertia;
  std::vector<PlacedFrobenius> frobenius;
  std::vector<long> excluded_u; /* u hitting a rational branch point */
  std::vector<std::string> caveats;
};

Recipe build_recipe(const CoverData& cover, const std::vector<InertiaRequest>& inertia,
                    const std::vector<FrobeniusRequest>& frobenius, uint64_t seed);

Rat recipe_point(const Recipe& recipe, long u);
long first_valid_u(const Recipe& recipe);

enum class InertiaStatus { decided, undecidable };

struct InertiaPrediction {
  InertiaStatus status = InertiaStatus::undecidable;
  std::string class_label; /* set when decided */
  bool unramified = false;
  std::optional<size_t> meeting_orbit;
  long multiplicity = 0;
  std::vector<std::string> notes;
};

/* Inertia class of the specialization at t0 and a good prime p, from the
 * intersection multiplicities against the branch orbits.  Exact where the
 * orbit charts are p-integral; anything chart-ambiguous comes back
 * undecidable rather than guessed. */
InertiaPrediction predict_inertia(const CoverData& cover, long p, const PointP1& t0);

struct WitnessReport {
  long p = 0;
  bool never_ramifies = false;
  std::optional<PointP1> witness;
  std::string class_label; /* inertia at the witness */
  size_t orbit = 0;
  std::vector<std::string> notes;
};

/* Either proves no rational specialization ramifies at the good prime p
 * (no orbit chart polynomial has a root mod p) or produces a witness point
 * with multiplicity exactly 1 against some orbit, cross-checked through
 * predict_inertia. */
WitnessReport ramification_witness(const CoverData& cover, long p);

struct DivisorReport {
  std::vector<long> primes;
  std::vector<std::string> caveats;
};

/* Primes up to the bound at which some rational specialization can meet a
 * branch orbit: root detection on each orbit's two chart polynomials. */
DivisorReport ramifiable_primes(const CoverData& cover, long bound);

enum class CertifyStatus { certified, inconclusive };

struct CertifyReport {
  CertifyStatus status = CertifyStatus::inconclusive;
  Rat t0;
  std::vector<std::string> witnessed; /* class labels, "a|b" for joint ones */
  long primes_used = 0;
  std::vector<std::string> notes;
};

/* Checks the claimed permutation group against the substitution patterns
 * of the specialization at t0, sampled at primes up to the budget.
 * Certification needs the claim to be the full symmetric or alternating
 * group (alternating additionally needs a square discriminant) together
 * with a witnessed set no proper subgroup meets; everything short of that,
 * including patterns impossible in the claim, stays inconclusive with an
 * explanatory note. */
CertifyReport certify_group(const CoverData& cover, const Rat& t0, long prime_budget);

struct VerifyCheck {
  long p = 0;
  std::string kind; /* multiplicity | splitting | quadratic | frobenius */
  bool decided = true;
  bool pass = false;
  std::string expected;
  std::string observed;
};

struct VerifyReport {
  Rat t0;
  bool all_passed = true; /* over decided checks */
  std::vector<VerifyCheck> checks;
  std::vector<std::string> caveats;
};

/* Replays a recipe at t0 = theta + u * modulus: exact multiplicity checks
 * against every placed request, then independent splitting checks through
 * the p-adic oracle (and the valuation criterion for quadratics) where a
 * defining polynomial is available. */
VerifyReport verify_recipe(const CoverData& cover, const Recipe& recipe, long u);

}  // namespace ramiforge

#endif
