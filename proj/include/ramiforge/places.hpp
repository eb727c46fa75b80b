#ifndef RAMIFORGE_PLACES_HPP
#define RAMIFORGE_PLACES_HPP

#include <optional>
#include <string>

#include "ramiforge/polyq.hpp"

namespace ramiforge {

/* A rational point of the projective line, finite or infinite. */
class PointP1 {
 public:
  static PointP1 infinity() { return PointP1(true, Rat(0)); }
  static PointP1 finite(const Rat& v) { return PointP1(false, v); }

  bool is_infinity() const { return inf_; }
  const Rat& value() const {
    if (inf_) fail(errc::internal, "value() of the point at infinity");
    return v_;
  }

  /* 1/t with the conventions 1/0 = inf and 1/inf = 0. */
  PointP1 reciprocal() const;

  bool operator==(const PointP1& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }

  /* v_p(t); v_p(0) = +inf and v_p(inf) = -inf. */
  ExtVal valuation(const Int& p) const;

  std::string str() const { return inf_ ? "inf" : rat_str(v_); }

 private:
  PointP1(bool inf, const Rat& v) : inf_(inf), v_(v) {}
  bool inf_;
  Rat v_;
};

/* A closed point of the projective line over Q: either the point at infinity
 * (minimal polynomial 1 by convention) or the root locus of a monic
 * irreducible polynomial; rational points have the degree-1 polynomial T - a.
 *
 * Irreducibility of user input is proved by degree-pattern sieving across the
 * first 25 primes of good reduction (plus a rational-root scan); if the sieve
 * is inconclusive the point is accepted carrying a user_asserted flag that
 * callers surface as a report caveat. */
class AlgPoint {
 public:
  static AlgPoint infinity();
  static AlgPoint rational(const Rat& a);
  static AlgPoint from_minpoly(const PolyQ& m);
  /* For polynomials already known irreducible (reversals, bundled data);
   * skips the sieve. */
  static AlgPoint irreducible_unchecked(const PolyQ& m, bool user_asserted);

  bool is_infinity() const { return inf_; }
  bool is_rational() const { return !inf_ && minpoly_.degree() == 1; }
  bool is_zero() const { return is_rational() && rational_value() == 0; }
  long degree() const { return inf_ ? 1 : minpoly_.degree(); }
  Rat rational_value() const;

  /* Minimal polynomial; the constant 1 for the point at infinity. */
  const PolyQ& minpoly() const { return minpoly_; }
  bool irreducibility_user_asserted() const { return user_asserted_; }

  bool operator==(const AlgPoint& o) const {
    return inf_ == o.inf_ && minpoly_ == o.minpoly_;
  }

  std::string str() const;

 private:
  AlgPoint() = default;
  bool inf_ = false;
  bool user_asserted_ = false;
  PolyQ minpoly_;
};

/* Minimal polynomial of 1/t: coefficient reversal scaled monic for finite
 * nonzero t; swaps 0 and inf. */
AlgPoint reverse_minpoly(const AlgPoint& t);

/* p-integral minimal polynomial with unit constant term (only meaningful for
 * points other than 0 and inf). */
bool unitizes(const Int& p, const AlgPoint& t);

/* Intersection multiplicity I_p(t0, t1) of a rational point against a closed
 * point: v_p(m(t0)) on the finite chart when v_p(t0) >= 0, the reversed
 * evaluation v_p(m*(1/t0)) when v_p(t0) <= 0.  When both charts apply the two
 * values agree (asserted).  Preconditions: t0 is not a root of m, and m has
 * unit constant term unless t1 = 0 (otherwise the quantity is ill-defined and
 * this throws invalid_input). */
ExtVal intersection_multiplicity(const Int& p, const PointP1& t0, const AlgPoint& t1);

/* True when t0 and (a conjugate of) t1 coincide modulo p.  Positive
 * intersection multiplicity always implies meeting; the converse needs the
 * relevant chart's minimal polynomial to be p-integral, and the call throws
 * invalid_input when that fails rather than guessing. */
bool meets(const Int& p, const PointP1& t0, const AlgPoint& t1);

/* True when some rational t0 has v_p(f(t0)) > 0; for monic p-integral f this
 * happens exactly when f has a root mod p (negative-valuation t0 cannot give
 * positive values). */
bool is_prime_divisor(const Int& p, const PolyQ& f);

/* True when the residue of some conjugate of t1 is rational mod p, i.e. the
 * reduced minimal polynomial has a degree-1 factor.  Requires p to unitize t1
 * unless t1 is rational (0 and inf included). */
bool rationalized_by(const Int& p, const AlgPoint& t1);

/* Degree-pattern irreducibility sieve used by AlgPoint::from_minpoly;
 * exposed for tests.  Returns proof status: true = proven irreducible,
 * false = proven reducible, nullopt = inconclusive. */
std::optional<bool> irreducible_by_sieve(const PolyQ& m, int prime_count = 25);

}  // namespace ramiforge

#endif
