#ifndef RAMIFORGE_POLYFP_HPP
#define RAMIFORGE_POLYFP_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ramiforge/polyq.hpp"

namespace ramiforge {

/* Dense univariate polynomial over F_p, p an odd-or-even prime < 2^31.
 * Residues are canonical in [0, p).  Products go through 64x64->128 bit
 * multiplication, so no overflow at this modulus bound. */
class PolyFp {
 public:
  PolyFp() : p_(2) {}
  explicit PolyFp(uint64_t p) : p_(p) {}
  PolyFp(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) { trim(); }

  static PolyFp from_polyq(const PolyQ& f, uint64_t p);
  static PolyFp monomial(uint64_t p, uint64_t coeff, size_t k);

  uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<uint64_t>& coeffs() const { return c_; }
  uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint64_t leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  uint64_t eval(uint64_t x) const;

  PolyFp operator+(const PolyFp& o) const;
  PolyFp operator-(const PolyFp& o) const;
  PolyFp operator*(const PolyFp& o) const;
  PolyFp scaled(uint64_t c) const;
  bool operator==(const PolyFp& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const PolyFp& o) const { return !(*this == o); }
  bool operator<(const PolyFp& o) const; /* degree, then lex on coefficients */

  PolyFp derivative() const;
  PolyFp monic_scaled() const;
  static void divrem(const PolyFp& a, const PolyFp& b, PolyFp& q, PolyFp& r);
  PolyFp operator%(const PolyFp& o) const;
  PolyFp operator/(const PolyFp& o) const;
  static PolyFp gcd(const PolyFp& a, const PolyFp& b);

  /* this^e mod m, e >= 0 (arbitrary-precision exponent). */
  PolyFp powmod(const Int& e, const PolyFp& m) const;

  bool is_squarefree() const;
  std::vector<uint64_t> roots() const;

  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  uint64_t p_;
  std::vector<uint64_t> c_;
};

uint64_t mod_inverse(uint64_t a, uint64_t p);
uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t p);

struct FpFactor {
  PolyFp factor; /* monic irreducible */
  long multiplicity;
};

/* Full factorization over F_p: unit * prod factor^multiplicity.
 * Squarefree split, distinct-degree split, then Cantor-Zassenhaus
 * equal-degree split driven by the caller's seed.  Factors come back
 * sorted (degree, then lex), so the result is seed-independent. */
struct FpFactorization {
  uint64_t unit;
  std::vector<FpFactor> factors;
};
FpFactorization factor_mod_p(const PolyFp& f, uint64_t seed);

/* Reduction of a p-integral rational polynomial followed by factorization. */
FpFactorization factor_mod_p(const PolyQ& f, uint64_t p, uint64_t seed);

/* Multiset of irreducible-factor degrees of a squarefree polynomial,
 * ascending.  Cheaper than full factorization (distinct-degree only). */
std::vector<long> squarefree_factor_degrees(const PolyFp& f);

}  // namespace ramiforge

#endif
