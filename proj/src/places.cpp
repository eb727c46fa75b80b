#include "ramiforge/places.hpp"

#include <algorithm>

#include "ramiforge/polyfp.hpp"

namespace ramiforge {

PointP1 PointP1::reciprocal() const {
  if (inf_) return finite(Rat(0));
  if (v_ == 0) return infinity();
  return finite(1 / v_);
}

ExtVal PointP1::valuation(const Int& p) const {
  if (inf_) return ExtVal::neg_inf();
  return vp(v_, p);
}

AlgPoint AlgPoint::infinity() {
  AlgPoint t;
  t.inf_ = true;
  t.minpoly_ = PolyQ::one();
  return t;
}

AlgPoint AlgPoint::rational(const Rat& a) {
  AlgPoint t;
  t.minpoly_ = PolyQ::linear_root(a);
  return t;
}

AlgPoint AlgPoint::from_minpoly(const PolyQ& m) {
  if (m.degree() < 1) fail(errc::invalid_input, "minimal polynomial must have degree >= 1");
  if (!m.is_monic()) fail(errc::invalid_input, "minimal polynomial must be monic");
  AlgPoint t;
  t.minpoly_ = m;
  if (m.degree() > 1) {
    std::optional<bool> irr = irreducible_by_sieve(m);
    if (irr.has_value() && !irr.value())
      fail(errc::invalid_input, "polynomial " + m.str() + " is reducible over Q");
    t.user_asserted_ = !irr.has_value();
  }
  return t;
}

AlgPoint AlgPoint::irreducible_unchecked(const PolyQ& m, bool user_asserted) {
  if (m.degree() < 1 || !m.is_monic())
    fail(errc::invalid_input, "minimal polynomial must be monic of degree >= 1");
  AlgPoint t;
  t.minpoly_ = m;
  t.user_asserted_ = user_asserted;
  return t;
}

Rat AlgPoint::rational_value() const {
  if (!is_rational()) fail(errc::internal, "rational_value of a non-rational point");
  return -minpoly_.coeff(0);
}

std::string AlgPoint::str() const {
  if (inf_) return "inf";
  if (is_rational()) return rat_str(rational_value());
  return "root of " + minpoly_.str();
}

AlgPoint reverse_minpoly(const AlgPoint& t) {
  if (t.is_infinity()) return AlgPoint::rational(Rat(0));
  if (t.is_zero()) return AlgPoint::infinity();
  if (t.is_rational()) return AlgPoint::rational(1 / t.rational_value());
  const PolyQ& m = t.minpoly();
  Rat a0 = m.coeff(0);
  if (a0 == 0) fail(errc::internal, "nonzero point with vanishing constant term");
  /* The reversal of an irreducible polynomial with a0 != 0 is irreducible,
   * so skip the sieve and keep the source point's user-asserted flag. */
  return AlgPoint::irreducible_unchecked(m.reversed() * (1 / a0),
                                         t.irreducibility_user_asserted());
}

bool unitizes(const Int& p, const AlgPoint& t) {
  if (t.is_infinity() || t.is_zero()) return false;
  const PolyQ& m = t.minpoly();
  if (!m.p_integral(p)) return false;
  return vp(m.coeff(0), p) == ExtVal::finite(0);
}

namespace {

ExtVal rational_vp(const Rat& x, const Int& p) { return vp(x, p); }

}  // namespace

ExtVal intersection_multiplicity(const Int& p, const PointP1& t0, const AlgPoint& t1) {
  if (t0.is_infinity() && t1.is_infinity())
    fail(errc::invalid_input, "intersection multiplicity of inf against itself");
  if (!t1.is_infinity() && !t1.is_zero()) {
    /* Standing normalization: unit constant term, else the quantity is
     * chart-dependent and ill-defined. */
    if (rational_vp(t1.minpoly().coeff(0), p) != ExtVal::finite(0))
      fail(errc::invalid_input, "intersection multiplicity needs v_p(constant term) = 0 for " +
                                    t1.str() + " at p = " + p.get_str());
  }
  ExtVal v0 = t0.valuation(p);

  std::optional<ExtVal> finite_chart;
  if (v0.nonnegative()) {
    Rat val = t1.minpoly().eval(t0.value()); /* t1 = inf gives the constant 1 */
    if (!t1.is_infinity() && val == 0)
      fail(errc::invalid_input, "intersection multiplicity at a root of the minimal polynomial");
    finite_chart = rational_vp(val, p);
  }
  std::optional<ExtVal> reciprocal_chart;
  if (v0.nonpositive()) {
    AlgPoint rt1 = reverse_minpoly(t1);
    PointP1 rt0 = t0.reciprocal();
    Rat val = rt1.minpoly().eval(rt0.value()); /* t0 has v <= 0 so 1/t0 is finite */
    if (!rt1.is_infinity() && val == 0)
      fail(errc::invalid_input, "intersection multiplicity at a root of the minimal polynomial");
    reciprocal_chart = rational_vp(val, p);
  }
  if (finite_chart && reciprocal_chart) {
    if (*finite_chart != *reciprocal_chart)
      fail(errc::internal, "chart disagreement in intersection multiplicity");
    return *finite_chart;
  }
  if (finite_chart) return *finite_chart;
  if (reciprocal_chart) return *reciprocal_chart;
  fail(errc::internal, "unreachable: no chart applies");
}

bool meets(const Int& p, const PointP1& t0, const AlgPoint& t1) {
  if (!t1.is_infinity() && !t1.is_zero() && !t1.minpoly().p_integral(p))
    fail(errc::invalid_input, "meeting undecidable: minimal polynomial of " + t1.str() +
                                  " is not p-integral at p = " + p.get_str());
  return intersection_multiplicity(p, t0, t1).positive();
}

namespace {

bool has_root_mod_p(const PolyFp& f) {
  if (f.degree() < 1) return false;
  if (f.modulus() <= 4096) return !f.roots().empty();
  PolyFp x = PolyFp::monomial(f.modulus(), 1, 1);
  PolyFp xp = x.powmod(Int(static_cast<long>(f.modulus())), f);
  return PolyFp::gcd(xp - x, f).degree() > 0;
}

}  // namespace

bool is_prime_divisor(const Int& p, const PolyQ& f) {
  if (f.is_zero()) fail(errc::invalid_input, "prime divisor test on the zero polynomial");
  if (!f.is_monic()) fail(errc::invalid_input, "prime divisor test needs a monic polynomial");
  if (!f.p_integral(p))
    fail(errc::invalid_input, "prime divisor test needs p-integral coefficients at p = " + p.get_str());
  if (f.degree() == 0) return false;
  if (p.fits_slong_p() == 0) fail(errc::capability, "prime too large for divisor test");
  return has_root_mod_p(PolyFp::from_polyq(f, static_cast<uint64_t>(p.get_si())));
}

bool rationalized_by(const Int& p, const AlgPoint& t1) {
  if (t1.is_infinity() || t1.is_rational()) return true;
  if (!unitizes(p, t1))
    fail(errc::invalid_input, "residue rationality needs p to unitize " + t1.str());
  return is_prime_divisor(p, t1.minpoly());
}

std::optional<bool> irreducible_by_sieve(const PolyQ& m, int prime_count) {
  long n = m.degree();
  if (n < 1) return false;
  if (n == 1) return true;

  /* Rational-root scan; a hit proves reducibility. */
  Int denlcm(1);
  for (const Rat& c : m.coeffs()) mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> intc;
  for (const Rat& c : m.coeffs()) intc.push_back(Int(c * Rat(denlcm)));
  if (intc[0] == 0) return false; /* root at 0 */
  auto divisors_of = [](const Int& n0, size_t cap) {
    std::vector<Int> out;
    Int n1 = abs(n0);
    Int bound(1000000);
    for (Int d(1); d * d <= n1 && d <= bound && out.size() < cap; ++d) {
      if (n1 % d == 0) {
        out.push_back(d);
        out.push_back(n1 / d);
      }
    }
    return out;
  };
  for (const Int& a : divisors_of(intc[0], 4096))
    for (const Int& b : divisors_of(intc.back(), 64)) {
      Rat cand(a, b);
      cand.canonicalize();
      if (m.eval(cand) == 0 || m.eval(-cand) == 0) return false;
    }

  /* Degree patterns mod p constrain the degrees of rational factors to
   * subset sums; if every prime pins them to {0, n}, m is irreducible. */
  uint32_t possible = 0;
  for (long d = 0; d <= n; ++d) possible |= (1u << d);
  int used = 0;
  for (long p = 2; used < prime_count && p < 10000; ++p) {
    if (!is_prime(Int(p))) continue;
    if (!m.p_integral(Int(p))) continue;
    PolyFp mp = PolyFp::from_polyq(m, static_cast<uint64_t>(p));
    if (mp.degree() != n || !mp.is_squarefree()) continue;
    ++used;
    std::vector<long> degs = squarefree_factor_degrees(mp);
    uint32_t sums = 1; /* subset sums achievable from this pattern */
    for (long d : degs) sums |= (sums << d);
    possible &= sums;
    if (possible == ((1u << n) | 1u)) return true;
  }
  return std::nullopt;
}

}  // namespace ramiforge
