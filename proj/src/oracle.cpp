#include "ramiforge/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "ramiforge/polyfp.hpp"

namespace ramiforge {

bool quadratic_ramifies(const Rat& d, long p) {
  if (p == 2) fail(errc::capability, "quadratic ramification criterion needs an odd prime");
  if (!is_prime(Int(p))) fail(errc::invalid_input, std::to_string(p) + " is not prime");
  if (d == 0 || is_rational_square(d))
    fail(errc::invalid_input, "radicand " + rat_str(d) + " does not cut out a quadratic field");
  long v = vp(d, p).value();
  return v % 2 != 0;
}

namespace {

struct HullPoint {
  long j;
  long v;
};

/* Vertices of the lower convex hull, x ascending; consecutive slopes
 * strictly increase. */
std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts) {
  std::vector<HullPoint> h;
  for (const HullPoint& p : pts) {
    while (h.size() >= 2) {
      const HullPoint& a = h[h.size() - 2];
      const HullPoint& b = h.back();
      if ((b.v - a.v) * (p.j - b.j) >= (p.v - b.v) * (b.j - a.j))
        h.pop_back();
      else
        break;
    }
    h.push_back(p);
  }
  return h;
}

/* phi-adic expansion: f = sum a_j phi^j with deg a_j < deg phi. */
std::vector<PolyQ> phi_expansion(const PolyQ& f, const PolyQ& phi) {
  std::vector<PolyQ> a;
  PolyQ cur = f, q, r;
  while (!cur.is_zero()) {
    PolyQ::divrem(cur, phi, q, r);
    a.push_back(r);
    cur = q;
  }
  return a;
}

uint64_t qpow_ui(long p, long k) {
  uint64_t r = 1;
  for (long i = 0; i < k; ++i) r *= static_cast<uint64_t>(p);
  return r;
}

/* Element arithmetic in F_q = F_p[z]/phibar, elements as residues. */
PolyFp fq_mul(const PolyFp& a, const PolyFp& b, const PolyFp& phibar) {
  return (a * b) % phibar;
}

PolyFp fq_inverse(const PolyFp& a, const PolyFp& phibar, const Int& q) {
  return a.powmod(q - 2, phibar);
}

bool fq_is_one(const PolyFp& a) { return a.degree() == 0 && a.coeff(0) == 1; }

/* Analyzes one repeated residue factor of g.  Appends the segments of the
 * corresponding local factors; returns false (with a note) when the side is
 * wild or the residual polynomial resists the available tests. */
bool polygon_segments(const PolyQ& g, const PolyFp& phibar, long mult, long p,
                      std::vector<RamSegment>& segs, std::vector<std::string>& notes) {
  Int P(p);
  const long dphi = phibar.degree();
  std::vector<Rat> lift_coeffs;
  for (uint64_t c : phibar.coeffs()) lift_coeffs.push_back(Rat(static_cast<long>(c)));
  PolyQ phi(std::move(lift_coeffs));

  /* Exact phi factors split off unramified pieces. */
  PolyQ h = g;
  long peeled = 0;
  while (peeled < mult) {
    PolyQ q, r;
    PolyQ::divrem(h, phi, q, r);
    if (!r.is_zero()) break;
    h = q;
    ++peeled;
    segs.push_back({1, dphi});
  }
  long m = mult - peeled;
  if (m == 0) return true;
  if (m == 1) {
    segs.push_back({1, dphi});
    return true;
  }

  std::vector<PolyQ> a = phi_expansion(h, phi);
  std::vector<HullPoint> pts;
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_zero()) continue;
    pts.push_back({static_cast<long>(j), a[j].min_coeff_valuation(P).value()});
  }
  std::vector<HullPoint> hull = lower_hull(pts);

  long span = 0;
  Int q_card(p);
  mpz_pow_ui(q_card.get_mpz_t(), q_card.get_mpz_t(), static_cast<unsigned long>(dphi));

  for (size_t s = 0; s + 1 < hull.size(); ++s) {
    const HullPoint& lo = hull[s];
    const HullPoint& hi = hull[s + 1];
    if (hi.v >= lo.v) break; /* principal part ends at the axis */
    long rise = lo.v - hi.v;
    long run = hi.j - lo.j;
    long g0 = std::gcd(rise, run);
    long hgt = rise / g0;
    long e = run / g0;
    long d = g0;
    span += run;

    if (e % p == 0) {
      notes.push_back("wild side over residue factor " + phibar.str() +
                      " (ramification index divisible by " + std::to_string(p) + ")");
      return false;
    }

    /* Residual coefficients live in F_q; points above the side reduce to 0. */
    std::vector<PolyFp> c(static_cast<size_t>(d) + 1, PolyFp(static_cast<uint64_t>(p)));
    for (long t = 0; t <= d; ++t) {
      size_t idx = static_cast<size_t>(lo.j + t * e);
      long vline = lo.v - t * hgt;
      if (idx >= a.size() || a[idx].is_zero()) continue;
      Rat scale(1);
      for (long i = 0; i < vline; ++i) scale /= p;
      PolyQ u = a[idx] * scale;
      if (u.min_coeff_valuation(P).positive()) continue;
      c[static_cast<size_t>(t)] = PolyFp::from_polyq(u, static_cast<uint64_t>(p));
    }
    if (c.front().is_zero() || c.back().is_zero())
      fail(errc::internal, "residual endpoints must be units");

    if (dphi == 1) {
      std::vector<uint64_t> rc;
      for (const PolyFp& ct : c) rc.push_back(ct.coeff(0));
      PolyFp R(static_cast<uint64_t>(p), std::move(rc));
      if (!R.is_squarefree()) {
        notes.push_back("residual polynomial " + R.str("y") + " not squarefree at slope -" +
                        std::to_string(hgt) + "/" + std::to_string(e));
        return false;
      }
      for (long u : squarefree_factor_degrees(R)) segs.push_back({e, u});
      continue;
    }

    if (d == 1) {
      segs.push_back({e, dphi});
      continue;
    }
    if (d > 2) {
      notes.push_back("residual degree " + std::to_string(d) +
                      " over an extension residue field is out of scope");
      return false;
    }

    /* Quadratic residual over F_q. */
    const PolyFp &c0 = c[0], &c1 = c[1], &c2 = c[2];
    if (p != 2) {
      PolyFp disc = fq_mul(c1, c1, phibar) -
                    fq_mul(PolyFp(static_cast<uint64_t>(p), {4 % static_cast<uint64_t>(p)}),
                           fq_mul(c2, c0, phibar), phibar);
      if (disc.is_zero()) {
        notes.push_back("residual polynomial not squarefree (zero discriminant)");
        return false;
      }
      PolyFp eul = disc.powmod((q_card - 1) / 2, phibar);
      if (fq_is_one(eul)) {
        segs.push_back({e, dphi});
        segs.push_back({e, dphi});
      } else {
        segs.push_back({e, 2 * dphi});
      }
    } else {
      PolyFp c2inv = fq_inverse(c2, phibar, q_card);
      PolyFp b = fq_mul(c1, c2inv, phibar);
      PolyFp c0n = fq_mul(c0, c2inv, phibar);
      if (b.is_zero()) {
        notes.push_back("residual polynomial not squarefree (even characteristic square)");
        return false;
      }
      PolyFp w = fq_mul(c0n, fq_inverse(fq_mul(b, b, phibar), phibar, q_card), phibar);
      PolyFp tr(static_cast<uint64_t>(2));
      PolyFp x = w;
      for (long i = 0; i < dphi; ++i) {
        tr = (tr + x) % phibar;
        x = fq_mul(x, x, phibar);
      }
      if (tr.degree() > 0) fail(errc::internal, "trace landed outside the prime field");
      if (tr.is_zero()) {
        segs.push_back({e, dphi});
        segs.push_back({e, dphi});
      } else {
        segs.push_back({e, 2 * dphi});
      }
    }
  }

  if (span != m) fail(errc::internal, "polygon principal part does not match multiplicity");
  return true;
}

}  // namespace

RamReport tame_splitting_type(const PolyQ& f, long p) {
  if (!is_prime(Int(p))) fail(errc::invalid_input, std::to_string(p) + " is not prime");
  if (f.degree() < 1) fail(errc::invalid_input, "splitting analysis needs degree >= 1");
  if (!f.is_monic()) fail(errc::invalid_input, "splitting analysis needs a monic polynomial");
  if (f.degree() > 8)
    fail(errc::capability, "splitting analysis capped at degree 8, got " +
                               std::to_string(f.degree()));
  if (!f.is_squarefree())
    fail(errc::invalid_input, "splitting analysis needs a squarefree polynomial");

  const long n = f.degree();
  Int P(p);

  /* Scale roots by p^k so every coefficient is p-integral; the extension,
   * hence the splitting data, is unchanged. */
  long k = 0;
  for (long i = 0; i < n; ++i) {
    ExtVal v = vp(f.coeff(static_cast<size_t>(i)), P);
    if (!v.is_finite() || v.value() >= 0) continue;
    long need = (-v.value() + (n - i) - 1) / (n - i);
    k = std::max(k, need);
  }
  PolyQ g = f;
  if (k > 0) {
    std::vector<Rat> powers(static_cast<size_t>(n) + 1, Rat(1));
    for (long i = 1; i <= n; ++i) {
      powers[static_cast<size_t>(i)] = powers[static_cast<size_t>(i - 1)];
      for (long t = 0; t < k; ++t) powers[static_cast<size_t>(i)] *= p;
    }
    std::vector<Rat> gc;
    for (long i = 0; i <= n; ++i)
      gc.push_back(f.coeff(static_cast<size_t>(i)) * powers[static_cast<size_t>(n - i)]);
    g = PolyQ(std::move(gc));
  }
  if (!g.p_integral(P)) fail(errc::internal, "normalization failed to clear denominators");

  RamReport rep;
  FpFactorization fac = factor_mod_p(g, static_cast<uint64_t>(p), 0);
  for (const FpFactor& ff : fac.factors) {
    if (ff.multiplicity == 1) {
      rep.segments.push_back({1, ff.factor.degree()});
      continue;
    }
    if (!polygon_segments(g, ff.factor, ff.multiplicity, p, rep.segments, rep.notes)) {
      rep.verdict = RamVerdict::inconclusive;
      rep.segments.clear();
      rep.e_total = 1;
      return rep;
    }
  }

  long total = 0;
  rep.e_total = 1;
  for (const RamSegment& s : rep.segments) {
    total += s.e * s.cycles;
    rep.e_total = std::lcm(rep.e_total, s.e);
    for (long i = 0; i < s.cycles; ++i) rep.inertia_cycle_type.push_back(static_cast<int>(s.e));
  }
  if (total != n) fail(errc::internal, "segment degrees do not add up");
  std::sort(rep.inertia_cycle_type.begin(), rep.inertia_cycle_type.end());
  std::sort(rep.segments.begin(), rep.segments.end(),
            [](const RamSegment& a, const RamSegment& b) {
              return a.e != b.e ? a.e < b.e : a.cycles < b.cycles;
            });
  rep.verdict = rep.e_total > 1 ? RamVerdict::ramified : RamVerdict::unramified;
  return rep;
}

std::vector<long> frobenius_class(const PolyQ& f, long p) {
  if (!is_prime(Int(p))) fail(errc::invalid_input, std::to_string(p) + " is not prime");
  if (f.degree() < 1 || !f.is_monic())
    fail(errc::invalid_input, "substitution pattern needs a monic polynomial of degree >= 1");
  if (!f.p_integral(Int(p)))
    fail(errc::invalid_input, "substitution pattern needs p-integral coefficients");
  PolyFp fbar = PolyFp::from_polyq(f, static_cast<uint64_t>(p));
  if (!fbar.is_squarefree())
    fail(errc::invalid_input,
         "repeated factors mod " + std::to_string(p) + ": not an unramified prime for this field");
  std::vector<long> degs = squarefree_factor_degrees(fbar);
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace ramiforge
