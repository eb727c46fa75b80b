#ifndef RAMIFORGE_POLYQ_HPP
#define RAMIFORGE_POLYQ_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "ramiforge/numbers.hpp"

namespace ramiforge {

/* Dense univariate polynomial over Q.  Coefficients ascending by degree,
 * no trailing zeros; the zero polynomial has an empty coefficient vector
 * and degree -1. */
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(const Rat& c) { coeffs_.push_back(c); trim(); }
  explicit PolyQ(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  PolyQ(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

  static PolyQ zero() { return PolyQ(); }
  static PolyQ one() { return PolyQ(Rat(1)); }
  /* The monomial c * T^k. */
  static PolyQ monomial(const Rat& c, size_t k);
  /* T - a. */
  static PolyQ linear_root(const Rat& a) { return PolyQ({-a, Rat(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](size_t i) const { return coeffs_[i]; }
  Rat coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  const Rat& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Rat eval(const Rat& x) const;

  PolyQ operator-() const;
  PolyQ operator+(const PolyQ& o) const;
  PolyQ operator-(const PolyQ& o) const;
  PolyQ operator*(const PolyQ& o) const;
  PolyQ operator*(const Rat& c) const;
  bool operator==(const PolyQ& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const PolyQ& o) const { return coeffs_ != o.coeffs_; }

  PolyQ derivative() const;
  /* Coefficient-reversed polynomial T^deg * f(1/T). */
  PolyQ reversed() const;
  /* f(T + a). */
  PolyQ shift(const Rat& a) const;
  PolyQ monic_scaled() const;

  /* Euclidean division; divisor must be nonzero. */
  static void divrem(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r);
  PolyQ operator/(const PolyQ& o) const;
  PolyQ operator%(const PolyQ& o) const;

  /* Monic gcd. */
  static PolyQ gcd(const PolyQ& a, const PolyQ& b);

  bool is_squarefree() const;

  /* Minimum p-adic valuation over the coefficients; +inf for the zero
   * polynomial (Gauss valuation). */
  ExtVal min_coeff_valuation(const Int& p) const;
  bool p_integral(const Int& p) const { return min_coeff_valuation(p).nonnegative(); }

  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/* Resultant with the convention Res(c, d) = 1 for two constants,
 * Res(f, c) = c^deg f, and Res(f, 0) = 0 when deg f > 0. */
Rat resultant(const PolyQ& f, const PolyQ& g);

/* disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f), n = deg f >= 1. */
Rat discriminant(const PolyQ& f);

}  // namespace ramiforge

#endif
