#include "ramiforge/numbers.hpp"

#include <algorithm>
#include <cctype>

namespace ramiforge {

long vp_int(const Int& n, const Int& p) {
  if (n == 0) fail(errc::internal, "vp_int of zero");
  Int rem;
  return static_cast<long>(mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

ExtVal vp(const Rat& r, const Int& p) {
  if (p < 2 || !is_prime(p)) fail(errc::invalid_input, "vp: modulus " + p.get_str() + " is not prime");
  if (r == 0) return ExtVal::pos_inf();
  long vnum = vp_int(r.get_num(), p);
  long vden = vp_int(r.get_den(), p);
  return ExtVal::finite(vnum - vden);
}

bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
  for (long i = 2; i <= bound; ++i) {
    if (composite[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * 2; j <= bound; j += i) composite[static_cast<size_t>(j)] = true;
  }
  return out;
}

bool is_rational_square(const Rat& r) {
  if (r < 0) return false;
  return mpz_perfect_square_p(r.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(r.get_den().get_mpz_t()) != 0;
}

int kronecker(const Int& a, const Int& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) fail(errc::invalid_input, "empty rational literal");
  size_t slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) fail(errc::invalid_input, "bad rational literal '" + s + "'");
    size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) fail(errc::invalid_input, "bad rational literal '" + s + "'");
    for (size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        fail(errc::invalid_input, "bad rational literal '" + s + "'");
  };
  try {
    if (slash == std::string::npos) {
      check_int(s);
      Rat r(s);
      r.canonicalize();
      return r;
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (Int(den) == 0) fail(errc::invalid_input, "zero denominator in '" + s + "'");
    Rat r(num + "/" + den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(errc::invalid_input, "bad rational literal '" + s + "'");
  }
}

ParsedPoint parse_point(const std::string& s) {
  ParsedPoint pt;
  if (s == "inf" || s == "oo" || s == "Inf" || s == "INF") {
    pt.infinite = true;
    return pt;
  }
  pt.value = parse_rational(s);
  return pt;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace ramiforge
