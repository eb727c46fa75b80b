#include "ramiforge/polyq.hpp"

#include <sstream>

namespace ramiforge {

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyQ PolyQ::monomial(const Rat& c, size_t k) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return PolyQ(std::move(v));
}

const Rat& PolyQ::leading() const {
  if (is_zero()) fail(errc::internal, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rat PolyQ::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

PolyQ PolyQ::operator-() const {
  std::vector<Rat> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return PolyQ(std::move(v));
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return PolyQ(std::move(v));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator*(const PolyQ& o) const {
  if (is_zero() || o.is_zero()) return PolyQ();
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return PolyQ(std::move(v));
}

PolyQ PolyQ::operator*(const Rat& c) const {
  std::vector<Rat> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
  return PolyQ(std::move(v));
}

PolyQ PolyQ::derivative() const {
  if (coeffs_.size() <= 1) return PolyQ();
  std::vector<Rat> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return PolyQ(std::move(v));
}

PolyQ PolyQ::reversed() const {
  std::vector<Rat> v(coeffs_.rbegin(), coeffs_.rend());
  return PolyQ(std::move(v));
}

PolyQ PolyQ::shift(const Rat& a) const {
  /* Horner on f(T+a): fold coefficients from the top against (T + a). */
  PolyQ acc;
  PolyQ t_plus_a({a, Rat(1)});
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t_plus_a + PolyQ(coeffs_[i]);
  return acc;
}

PolyQ PolyQ::monic_scaled() const {
  if (is_zero()) fail(errc::internal, "monic rescale of zero polynomial");
  return *this * (Rat(1) / leading());
}

void PolyQ::divrem(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r) {
  if (b.is_zero()) fail(errc::internal, "polynomial division by zero");
  std::vector<Rat> rem = a.coeffs_;
  long db = b.degree();
  long da = a.degree();
  if (da < db) {
    q = PolyQ();
    r = a;
    return;
  }
  std::vector<Rat> quot(static_cast<size_t>(da - db) + 1, Rat(0));
  for (long k = da; k >= db; --k) {
    Rat c = rem[static_cast<size_t>(k)] / b.leading();
    if (c == 0) continue;
    quot[static_cast<size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<size_t>(k - db + j)] -= c * b.coeffs_[static_cast<size_t>(j)];
  }
  q = PolyQ(std::move(quot));
  r = PolyQ(std::move(rem));
}

PolyQ PolyQ::operator/(const PolyQ& o) const {
  PolyQ q, r;
  divrem(*this, o, q, r);
  return q;
}

PolyQ PolyQ::operator%(const PolyQ& o) const {
  PolyQ q, r;
  divrem(*this, o, q, r);
  return r;
}

PolyQ PolyQ::gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ f = a, g = b;
  while (!g.is_zero()) {
    PolyQ r = f % g;
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  return f.monic_scaled();
}

bool PolyQ::is_squarefree() const {
  if (is_zero()) return false;
  if (degree() == 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

ExtVal PolyQ::min_coeff_valuation(const Int& p) const {
  ExtVal best = ExtVal::pos_inf();
  for (const Rat& c : coeffs_) {
    ExtVal v = vp(c, p);
    if (v < best) best = v;
  }
  return best;
}

std::string PolyQ::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool unit = (a == 1);
    if (i == 0) {
      os << rat_str(a);
    } else {
      if (!unit) os << rat_str(a) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Rat resultant(const PolyQ& f0, const PolyQ& g0) {
  if (f0.is_zero() || g0.is_zero()) {
    /* Res(f, 0) = 0 when deg f > 0; two constants give 1 by convention. */
    const PolyQ& other = f0.is_zero() ? g0 : f0;
    return other.degree() <= 0 ? Rat(1) : Rat(0);
  }
  if (f0.degree() == 0 && g0.degree() == 0) return Rat(1);
  PolyQ f = f0, g = g0;
  Rat acc(1);
  if (f.degree() == 0) {
    Rat c = f.leading();
    Rat out(1);
    for (long i = 0; i < g.degree(); ++i) out *= c;
    return out;
  }
  while (g.degree() > 0) {
    PolyQ r = f % g;
    if (r.is_zero()) return Rat(0);
    long df = f.degree(), dg = g.degree(), dr = r.degree();
    /* Res(f, g) = (-1)^(df*dg) * lc(g)^(df - dr) * Res(g, r). */
    if ((df % 2) && (dg % 2)) acc = -acc;
    Rat lc = g.leading();
    for (long i = 0; i < df - dr; ++i) acc *= lc;
    f = g;
    g = r;
  }
  Rat c = g.leading();
  for (long i = 0; i < f.degree(); ++i) acc *= c;
  return acc;
}

Rat discriminant(const PolyQ& f) {
  long n = f.degree();
  if (n < 1) fail(errc::invalid_input, "discriminant needs degree >= 1");
  Rat res = resultant(f, f.derivative());
  Rat d = res / f.leading();
  if (((n * (n - 1)) / 2) % 2) d = -d;
  return d;
}

}  // namespace ramiforge
