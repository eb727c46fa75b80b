#pragma once

#include <string>
#include <vector>

#include "ramiforge/cover.hpp"

namespace ramiforge {

struct ClosureReport {
  std::vector<std::string> closure;
  std::vector<std::string> outside;
  bool full = false;
  std::vector<std::string> notes;
};

/* Power closure of the branch classes: class_power(C, k) for every branch
 * class C and 1 <= k <= order(C).  outside lists the group classes the
 * closure misses. */
ClosureReport inertia_closure(const CoverData& cover);

enum class Hypothesis { inertia, branch_point };

struct HypothesisVerdict {
  Hypothesis hypothesis = Hypothesis::inertia;
  bool holds = false;
  bool exact = false; /* false: window evidence only */
  long window = 0;    /* prime window consulted when not exact */
  std::vector<std::string> witness_classes; /* inertia: first-cover classes off the closure */
  std::vector<long> witness_primes;         /* branch_point: separating primes */
  long modulus = 0;                         /* branch_point exact mode */
  std::vector<long> residues;               /* separating residue classes mod modulus */
  std::vector<long> excluded_primes;        /* bad for either cover inside the window */
  std::string consequence;
  std::vector<std::string> notes;
};

/* Tests whether some branch class of the first cover lies outside the power
 * closure of the second cover's branch classes.  Both covers must carry the
 * same group, matched by order and class labels; always exact. */
HypothesisVerdict check_inertia_hypothesis(const CoverData& c1, const CoverData& c2);

/* Looks for primes at which a rational point can meet a branch orbit of the
 * first cover but never one of the second.  Residue-class analysis decides
 * the question exactly when every branch orbit of both covers has degree at
 * most 2; otherwise a window scan collects evidence. */
HypothesisVerdict check_branch_point_hypothesis(const CoverData& c1, const CoverData& c2,
                                                long prime_window);

struct CorollaryVerdict {
  bool applies = true;
  bool holds = false;
  std::string witness;
  std::vector<std::string> notes;
};

/* True when the cover has exactly four geometric branch points and none of
 * them is rational (the point at infinity counts as rational). */
CorollaryVerdict check_four_branch(const CoverData& cover);

/* For covers with the full symmetric group of degree n >= 3: true when the
 * branch classes miss the full cycle or miss some product of two coprime
 * cycles spanning all points; the witness is a missing label. */
CorollaryVerdict check_symmetric_shape(const CoverData& cover);

}  // namespace ramiforge
