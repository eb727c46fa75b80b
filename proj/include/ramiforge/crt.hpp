#ifndef RAMIFORGE_CRT_HPP
#define RAMIFORGE_CRT_HPP

#include <vector>

#include "ramiforge/numbers.hpp"

namespace ramiforge {

struct Congruence {
  Rat residue;  /* denominator must be coprime to the modulus */
  Int modulus;  /* > 1; moduli must be pairwise coprime */
};

/* Smallest nonnegative integer t with t = residue_i (mod modulus_i) for all i,
 * i.e. v_p(t - residue_i) >= e for every prime power p^e dividing modulus_i. */
Int crt(const std::vector<Congruence>& congruences);

/* Canonical residue of a rational with denominator coprime to m. */
Int rational_mod(const Rat& r, const Int& m);

}  // namespace ramiforge

#endif
