#include "ramiforge/polyfp.hpp"

#include <algorithm>
#include <sstream>

namespace ramiforge {

namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

}  // namespace

uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t mod_inverse(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) fail(errc::internal, "mod_inverse of zero");
  /* p prime: a^(p-2). */
  return mod_pow(a, p - 2, p);
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp PolyFp::from_polyq(const PolyQ& f, uint64_t p) {
  Int P(static_cast<long>(p));
  std::vector<uint64_t> v;
  v.reserve(f.coeffs().size());
  for (const Rat& c : f.coeffs()) {
    if (!vp(c, P).nonnegative())
      fail(errc::invalid_input, "reduction mod " + std::to_string(p) + " of non-p-integral coefficient " + rat_str(c));
    Int den_inv;
    Int den = c.get_den() % P;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t()) == 0)
      fail(errc::internal, "non-invertible denominator mod p");
    Int r = ((c.get_num() % P) * den_inv) % P;
    if (r < 0) r += P;
    v.push_back(r.get_ui());
  }
  return PolyFp(p, std::move(v));
}

PolyFp PolyFp::monomial(uint64_t p, uint64_t coeff, size_t k) {
  std::vector<uint64_t> v(k + 1, 0);
  v[k] = coeff % p;
  return PolyFp(p, std::move(v));
}

uint64_t PolyFp::leading() const {
  if (is_zero()) fail(errc::internal, "leading coefficient of zero polynomial");
  return c_.back();
}

uint64_t PolyFp::eval(uint64_t x) const {
  uint64_t acc = 0;
  x %= p_;
  for (size_t i = c_.size(); i-- > 0;) acc = (mulmod(acc, x, p_) + c_[i]) % p_;
  return acc;
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
  std::vector<uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] = (v[i] + o.c_[i]) % p_;
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
  std::vector<uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] = submod(v[i], o.c_[i], p_);
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
  if (is_zero() || o.is_zero()) return PolyFp(p_);
  std::vector<uint64_t> v(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      v[i + j] = (v[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
  }
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::scaled(uint64_t c) const {
  c %= p_;
  std::vector<uint64_t> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = mulmod(c_[i], c, p_);
  return PolyFp(p_, std::move(v));
}

bool PolyFp::operator<(const PolyFp& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

PolyFp PolyFp::derivative() const {
  if (c_.size() <= 1) return PolyFp(p_);
  std::vector<uint64_t> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = mulmod(c_[i], i % p_, p_);
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::monic_scaled() const { return scaled(mod_inverse(leading(), p_)); }

void PolyFp::divrem(const PolyFp& a, const PolyFp& b, PolyFp& q, PolyFp& r) {
  if (b.is_zero()) fail(errc::internal, "polynomial division by zero");
  uint64_t p = a.p_;
  std::vector<uint64_t> rem = a.c_;
  long db = b.degree(), da = a.degree();
  if (da < db) {
    q = PolyFp(p);
    r = a;
    return;
  }
  uint64_t lcinv = mod_inverse(b.leading(), p);
  std::vector<uint64_t> quot(static_cast<size_t>(da - db) + 1, 0);
  for (long k = da; k >= db; --k) {
    uint64_t c = mulmod(rem[static_cast<size_t>(k)], lcinv, p);
    if (c == 0) continue;
    quot[static_cast<size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j) {
      size_t idx = static_cast<size_t>(k - db + j);
      rem[idx] = submod(rem[idx], mulmod(c, b.c_[static_cast<size_t>(j)], p), p);
    }
  }
  q = PolyFp(p, std::move(quot));
  r = PolyFp(p, std::move(rem));
}

PolyFp PolyFp::operator%(const PolyFp& o) const {
  PolyFp q, r;
  divrem(*this, o, q, r);
  return r;
}

PolyFp PolyFp::operator/(const PolyFp& o) const {
  PolyFp q, r;
  divrem(*this, o, q, r);
  return q;
}

PolyFp PolyFp::gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp f = a, g = b;
  while (!g.is_zero()) {
    PolyFp r = f % g;
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  return f.monic_scaled();
}

PolyFp PolyFp::powmod(const Int& e, const PolyFp& m) const {
  if (e < 0) fail(errc::internal, "negative exponent in powmod");
  PolyFp base = *this % m;
  PolyFp acc(p_, {1});
  acc = acc % m;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (size_t i = bits; i-- > 0;) {
    acc = (acc * acc) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * base) % m;
  }
  return acc;
}

bool PolyFp::is_squarefree() const {
  if (is_zero()) return false;
  if (degree() == 0) return true;
  PolyFp d = derivative();
  if (d.is_zero()) return false; /* p-th power structure */
  return gcd(*this, d).degree() == 0;
}

std::vector<uint64_t> PolyFp::roots() const {
  std::vector<uint64_t> out;
  if (is_zero()) fail(errc::internal, "roots of zero polynomial");
  if (p_ <= 100000) {
    for (uint64_t x = 0; x < p_; ++x)
      if (eval(x) == 0) out.push_back(x);
    return out;
  }
  /* Large p: split off the linear part with gcd(T^p - T, f), then find
   * roots by equal-degree bisection on (T + a)^((p-1)/2) - 1. */
  PolyFp f = monic_scaled();
  PolyFp x = monomial(p_, 1, 1);
  PolyFp xp = x.powmod(Int(static_cast<long>(p_)), f);
  PolyFp lin = gcd(xp - x, f);
  std::vector<PolyFp> stack{lin};
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  while (!stack.empty()) {
    PolyFp g = stack.back();
    stack.pop_back();
    if (g.degree() <= 0) continue;
    if (g.degree() == 1) {
      out.push_back(submod(0, mulmod(g.coeff(0), mod_inverse(g.coeff(1), p_), p_), p_));
      continue;
    }
    PolyFp shifted = monomial(p_, 1, 1) + PolyFp(p_, {static_cast<uint64_t>(rng() % p_)});
    PolyFp h = shifted.powmod(Int((static_cast<long>(p_) - 1) / 2), g) - PolyFp(p_, {1});
    PolyFp d = gcd(h, g);
    if (d.degree() == 0 || d.degree() == g.degree()) {
      stack.push_back(g);
      continue;
    }
    stack.push_back(d);
    stack.push_back(g / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string PolyFp::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

/* Squarefree decomposition in characteristic p: returns (g, k) parts with
 * f = unit * prod g_i^{k_i}, each g_i squarefree, handling f' = 0 via
 * p-th-root recursion. */
void squarefree_parts(const PolyFp& f, long mult, std::vector<std::pair<PolyFp, long>>& out) {
  uint64_t p = f.modulus();
  if (f.degree() <= 0) return;
  PolyFp d = f.derivative();
  if (d.is_zero()) {
    /* f = g(T^p); pull out the p-th root and recurse. */
    std::vector<uint64_t> root;
    for (size_t i = 0; i <= static_cast<size_t>(f.degree()); i += p)
      root.push_back(f.coeff(i)); /* c^(1/p) = c^(p^(e-1)) = c over F_p */
    squarefree_parts(PolyFp(p, std::move(root)), mult * static_cast<long>(p), out);
    return;
  }
  PolyFp g = PolyFp::gcd(f, d);
  PolyFp w = f / g;
  long i = 1;
  while (w.degree() > 0) {
    PolyFp y = PolyFp::gcd(w, g);
    PolyFp part = w / y;
    if (part.degree() > 0) out.emplace_back(part.monic_scaled(), mult * i);
    g = g / y;
    w = y;
    ++i;
  }
  if (g.degree() > 0) squarefree_parts(g, mult, out);
}

/* Distinct-degree split of a squarefree monic f: list of (product, d). */
std::vector<std::pair<PolyFp, long>> distinct_degree(const PolyFp& f) {
  uint64_t p = f.modulus();
  std::vector<std::pair<PolyFp, long>> out;
  PolyFp rest = f;
  PolyFp x = PolyFp::monomial(p, 1, 1);
  PolyFp h = x;
  long d = 0;
  while (rest.degree() > 0) {
    ++d;
    if (2 * d > rest.degree()) {
      out.emplace_back(rest, rest.degree());
      break;
    }
    h = h.powmod(Int(static_cast<long>(p)), rest);
    PolyFp g = PolyFp::gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  return out;
}

/* Cantor-Zassenhaus equal-degree split of monic squarefree f whose
 * irreducible factors all have degree d. */
void equal_degree(const PolyFp& f, long d, std::mt19937_64& rng, std::vector<PolyFp>& out) {
  uint64_t p = f.modulus();
  if (f.degree() == d) {
    out.push_back(f.monic_scaled());
    return;
  }
  PolyFp splitter(p);
  while (true) {
    std::vector<uint64_t> rc(static_cast<size_t>(2 * d), 0);
    for (auto& c : rc) c = rng() % p;
    PolyFp a(p, std::move(rc));
    if (a.degree() < 1) continue;
    PolyFp g = PolyFp::gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      splitter = g;
      break;
    }
    PolyFp b(p);
    if (p == 2) {
      /* Trace map sum_{i<d} a^(2^i) mod f. */
      PolyFp t = a % f;
      PolyFp acc = t;
      for (long i = 1; i < d; ++i) {
        t = (t * t) % f;
        acc = acc + t;
      }
      b = acc;
    } else {
      Int e(static_cast<long>(p));
      mpz_pow_ui(e.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = a.powmod(e, f) - PolyFp(p, {1});
    }
    PolyFp g2 = PolyFp::gcd(b, f);
    if (g2.degree() > 0 && g2.degree() < f.degree()) {
      splitter = g2;
      break;
    }
  }
  equal_degree(splitter, d, rng, out);
  equal_degree(f / splitter, d, rng, out);
}

}  // namespace

FpFactorization factor_mod_p(const PolyFp& f, uint64_t seed) {
  if (f.is_zero()) fail(errc::invalid_input, "factorization of the zero polynomial");
  FpFactorization out;
  out.unit = f.leading();
  if (f.degree() == 0) return out;
  PolyFp monic = f.monic_scaled();

  std::vector<std::pair<PolyFp, long>> sqf;
  squarefree_parts(monic, 1, sqf);

  std::mt19937_64 rng(seed ^ (0xa076'1d64'78bd'642fULL + f.modulus() * 0x9e37ULL));
  for (const auto& [part, mult] : sqf) {
    for (const auto& [prod, d] : distinct_degree(part)) {
      std::vector<PolyFp> irred;
      equal_degree(prod, d, rng, irred);
      for (PolyFp& g : irred) out.factors.push_back({std::move(g), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FpFactor& a, const FpFactor& b) { return a.factor < b.factor; });
  return out;
}

FpFactorization factor_mod_p(const PolyQ& f, uint64_t p, uint64_t seed) {
  return factor_mod_p(PolyFp::from_polyq(f, p), seed);
}

std::vector<long> squarefree_factor_degrees(const PolyFp& f) {
  if (!f.is_squarefree()) fail(errc::internal, "degree pattern of non-squarefree polynomial");
  std::vector<long> out;
  for (const auto& [prod, d] : distinct_degree(f.monic_scaled()))
    for (long i = 0; i < prod.degree() / d; ++i) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ramiforge
