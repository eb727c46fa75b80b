#ifndef RAMIFORGE_ORACLE_HPP
#define RAMIFORGE_ORACLE_HPP

#include <string>
#include <vector>

#include "ramiforge/polyq.hpp"

namespace ramiforge {

/* True when Q(sqrt(d))/Q ramifies at the odd prime p, i.e. v_p(d) is odd.
 * d must be a non-square nonzero rational; p = 2 is out of scope. */
bool quadratic_ramifies(const Rat& d, long p);

enum class RamVerdict { unramified, ramified, inconclusive };

/* One block of local factors sharing a ramification index: the inertia
 * generator acts with `cycles` cycles of length e on their roots. */
struct RamSegment {
  long e = 1;
  long cycles = 0;
};

struct RamReport {
  RamVerdict verdict = RamVerdict::inconclusive;
  long e_total = 1;
  std::vector<RamSegment> segments;
  std::vector<int> inertia_cycle_type; /* ascending, fixed points included */
  std::vector<std::string> notes;      /* why the analysis stopped, if it did */

  bool decided() const { return verdict != RamVerdict::inconclusive; }
};

/* Splitting analysis of a monic squarefree polynomial over the p-adic
 * numbers, by residue factorization and one round of polygon + residual
 * analysis per repeated residue factor.  Decides exactly the regular tame
 * cases; wild or irregular inputs come back inconclusive, never wrong.
 * Degree is capped at 8. */
RamReport tame_splitting_type(const PolyQ& f, long p);

/* Irreducible-factor degree pattern of f mod p (ascending); this is the
 * cycle type of the Frobenius substitution at an unramified prime.
 * Requires f monic, p-integral, and squarefree mod p. */
std::vector<long> frobenius_class(const PolyQ& f, long p);

}  // namespace ramiforge

#endif
