#include "ramiforge/crt.hpp"

namespace ramiforge {

Int rational_mod(const Rat& r, const Int& m) {
  if (m <= 1) fail(errc::invalid_input, "crt modulus must exceed 1");
  Int den_inv;
  Int den = r.get_den() % m;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(errc::invalid_input,
         "residue " + rat_str(r) + " has denominator not coprime to modulus " + m.get_str());
  Int res = ((r.get_num() % m) * den_inv) % m;
  if (res < 0) res += m;
  return res;
}

Int crt(const std::vector<Congruence>& congruences) {
  if (congruences.empty()) fail(errc::invalid_input, "crt needs at least one congruence");
  for (size_t i = 0; i < congruences.size(); ++i)
    for (size_t j = i + 1; j < congruences.size(); ++j) {
      Int g;
      mpz_gcd(g.get_mpz_t(), congruences[i].modulus.get_mpz_t(), congruences[j].modulus.get_mpz_t());
      if (g != 1)
        fail(errc::invalid_input, "crt moduli " + congruences[i].modulus.get_str() + " and " +
                                      congruences[j].modulus.get_str() + " are not coprime");
    }
  Int t = rational_mod(congruences[0].residue, congruences[0].modulus);
  Int m = congruences[0].modulus;
  for (size_t i = 1; i < congruences.size(); ++i) {
    const Int& mi = congruences[i].modulus;
    Int ri = rational_mod(congruences[i].residue, mi);
    /* t + m*k = ri (mod mi)  =>  k = (ri - t) / m (mod mi). */
    Int minv;
    Int mm = m % mi;
    if (mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), mi.get_mpz_t()) == 0)
      fail(errc::internal, "crt accumulator not invertible");
    Int k = (((ri - t) % mi) * minv) % mi;
    if (k < 0) k += mi;
    t += m * k;
    m *= mi;
  }
  t %= m;
  if (t < 0) t += m;
  return t;
}

}  // namespace ramiforge
