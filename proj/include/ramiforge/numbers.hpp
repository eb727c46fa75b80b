#ifndef RAMIFORGE_NUMBERS_HPP
#define RAMIFORGE_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramiforge {

using Int = mpz_class;
using Rat = mpq_class;

/* Error taxonomy shared by the whole library.  The CLI maps kinds to exit
 * codes: invalid_input/capability -> 2, verification mismatch -> 3. */
enum class errc {
  invalid_input,
  capability,
  verification,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

/* Valuation value: an integer extended by +infinity (valuation of 0) and
 * -infinity (valuation of the point at infinity). */
class ExtVal {
 public:
  static ExtVal finite(long v) { return ExtVal(v, 0); }
  static ExtVal pos_inf() { return ExtVal(0, +1); }
  static ExtVal neg_inf() { return ExtVal(0, -1); }

  bool is_finite() const { return inf_ == 0; }
  bool is_pos_inf() const { return inf_ > 0; }
  bool is_neg_inf() const { return inf_ < 0; }

  /* Finite value; caller must check is_finite() first. */
  long value() const {
    if (!is_finite()) fail(errc::internal, "ExtVal::value on infinite valuation");
    return v_;
  }

  bool operator==(const ExtVal& o) const { return inf_ == o.inf_ && (inf_ != 0 || v_ == o.v_); }
  bool operator!=(const ExtVal& o) const { return !(*this == o); }
  bool operator<(const ExtVal& o) const {
    if (inf_ != o.inf_) return inf_ < o.inf_;
    return inf_ == 0 && v_ < o.v_;
  }
  bool operator>(const ExtVal& o) const { return o < *this; }
  bool operator<=(const ExtVal& o) const { return !(o < *this); }
  bool operator>=(const ExtVal& o) const { return !(*this < o); }

  bool positive() const { return is_pos_inf() || (is_finite() && v_ > 0); }
  bool nonnegative() const { return is_pos_inf() || (is_finite() && v_ >= 0); }
  bool nonpositive() const { return is_neg_inf() || (is_finite() && v_ <= 0); }

  std::string str() const {
    if (is_pos_inf()) return "+inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(v_);
  }

 private:
  ExtVal(long v, int inf) : v_(v), inf_(inf) {}
  long v_;
  int inf_; /* 0 finite, +1 = +inf, -1 = -inf */
};

/* p-adic valuation of a nonzero integer. */
long vp_int(const Int& n, const Int& p);

/* p-adic valuation of a rational; vp(0) = +inf. */
ExtVal vp(const Rat& r, const Int& p);

inline ExtVal vp(const Rat& r, long p) { return vp(r, Int(p)); }

bool is_prime(const Int& n);

/* Primes <= bound, ascending. */
std::vector<long> primes_up_to(long bound);

/* True when r is the square of a rational. */
bool is_rational_square(const Rat& r);

/* Kronecker symbol (a|n). */
int kronecker(const Int& a, const Int& n);

/* Parses "n", "n/d", or "inf" / "oo".  Throws invalid_input on anything else. */
struct ParsedPoint {
  bool infinite = false;
  Rat value; /* meaningful when !infinite */
};
ParsedPoint parse_point(const std::string& s);

Rat parse_rational(const std::string& s);
std::string rat_str(const Rat& r);

}  // namespace ramiforge

#endif
