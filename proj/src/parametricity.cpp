#include "ramiforge/parametricity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ramiforge/prescriber.hpp"

namespace ramiforge {

namespace {

std::vector<std::string> all_class_labels(const GroupModel& g) {
  std::vector<std::string> out;
  if (g.concrete()) {
    for (const ConjClass& c : g.perm().conjugacy_classes()) out.push_back(c.label);
  } else {
    for (const AbstractClass& c : g.abstract().classes) out.push_back(c.label);
  }
  return out;
}

bool same_group(const GroupModel& a, const GroupModel& b) {
  if (a.order() != b.order()) return false;
  std::vector<std::string> la = all_class_labels(a);
  std::vector<std::string> lb = all_class_labels(b);
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return la == lb;
}

bool closure_complete(const ClosureReport& cl) {
  return std::none_of(cl.notes.begin(), cl.notes.end(), [](const std::string& n) {
    return n.find("not computable") != std::string::npos;
  });
}

}  // namespace

ClosureReport inertia_closure(const CoverData& cover) {
  ClosureReport rep;
  const GroupModel& g = cover.group;
  std::set<std::string> closure;
  bool complete = true;
  for (const BranchOrbit& orb : cover.orbits) {
    long ord = g.class_element_order(orb.class_label);
    for (long k = 1; k <= ord; ++k) {
      try {
        closure.insert(g.class_power(orb.class_label, k));
      } catch (const error& e) {
        if (e.kind() != errc::capability) throw;
        complete = false;
        rep.notes.push_back("power " + std::to_string(k) + " of " + orb.class_label +
                            " is not computable for this group model");
      }
    }
  }
  rep.closure.assign(closure.begin(), closure.end());
  for (const std::string& label : all_class_labels(g))
    if (!closure.count(label)) rep.outside.push_back(label);
  std::sort(rep.outside.begin(), rep.outside.end());
  rep.full = rep.outside.empty() && complete;
  if (!complete)
    rep.notes.push_back("closure is a lower bound; classes listed outside may be reachable");
  if (!g.concrete())
    rep.notes.push_back("closure computed over the declared classes only");
  return rep;
}

HypothesisVerdict check_inertia_hypothesis(const CoverData& c1, const CoverData& c2) {
  if (!same_group(c1.group, c2.group))
    fail(errc::invalid_input, "'" + c1.name + "' and '" + c2.name +
                                  "' carry different groups; class comparison needs one group");
  HypothesisVerdict v;
  v.hypothesis = Hypothesis::inertia;
  v.exact = true;

  ClosureReport cl = inertia_closure(c2);
  if (!closure_complete(cl))
    fail(errc::capability,
         "class powers are not computable for this group model, so the closure is incomplete");

  std::set<std::string> closure(cl.closure.begin(), cl.closure.end());
  std::set<std::string> seen;
  for (const BranchOrbit& orb : c1.orbits)
    if (!closure.count(orb.class_label) && seen.insert(orb.class_label).second)
      v.witness_classes.push_back(orb.class_label);
  std::sort(v.witness_classes.begin(), v.witness_classes.end());
  v.holds = !v.witness_classes.empty();
  if (v.holds) {
    v.consequence = "a specialization of '" + c1.name + "' whose inertia falls in " +
                    v.witness_classes.front() +
                    " at a suitable prime is not a specialization of '" + c2.name + "'";
  } else {
    v.notes.push_back("every branch class of '" + c1.name +
                      "' is a power of a branch class of '" + c2.name + "'");
  }
  return v;
}

namespace {

struct ChartSummary {
  bool always_root = false;
  std::vector<Int> discs;
  bool exact_ok = true;
};

ChartSummary summarize_charts(const CoverData& cover) {
  ChartSummary s;
  for (const BranchOrbit& orb : cover.orbits) {
    const AlgPoint& t = orb.point;
    if (t.is_infinity() || t.is_rational()) {
      s.always_root = true;
    } else if (t.degree() == 2) {
      Rat d = discriminant(t.minpoly());
      s.discs.push_back(d.get_num() * d.get_den());
    } else {
      s.exact_ok = false;
    }
  }
  return s;
}

std::vector<long> sorted_bad_primes(const CoverData& a, const CoverData& b, long scan) {
  std::set<long> bad;
  for (long p : primes_up_to(scan)) {
    if (!classify_prime(a, p).good || !classify_prime(b, p).good) bad.insert(p);
  }
  return {bad.begin(), bad.end()};
}

}  // namespace

HypothesisVerdict check_branch_point_hypothesis(const CoverData& c1, const CoverData& c2,
                                                long prime_window) {
  if (prime_window < 10) fail(errc::invalid_input, "window must be at least 10");
  HypothesisVerdict v;
  v.hypothesis = Hypothesis::branch_point;

  ChartSummary ram = summarize_charts(c1);
  ChartSummary unram = summarize_charts(c2);

  if (unram.always_root) {
    v.exact = true;
    v.notes.push_back("'" + c2.name +
                      "' has a rational branch point, so a rational point meets a branch orbit "
                      "at every good prime; no separating prime can exist");
    return v;
  }

  bool exact_mode = ram.exact_ok && unram.exact_ok;
  Int modulus_big(4);
  if (exact_mode) {
    for (const Int& d : ram.discs) modulus_big *= abs(d);
    for (const Int& d : unram.discs) modulus_big *= abs(d);
    if (!mpz_fits_slong_p(modulus_big.get_mpz_t()) || modulus_big > 2000000) {
      exact_mode = false;
      v.notes.push_back("discriminant modulus too large for residue-class analysis");
    }
  } else {
    v.notes.push_back(
        "a branch orbit of degree 3 or more blocks residue-class analysis; window scan only");
  }

  if (exact_mode) {
    long M = modulus_big.get_si();
    std::vector<long> accepted;
    for (long r = 1; r < M; ++r) {
      if (std::gcd(r, M) != 1) continue;
      bool ram_ok = ram.always_root;
      for (const Int& d : ram.discs)
        if (kronecker(d, Int(r)) == 1) ram_ok = true;
      bool never_ok = true;
      for (const Int& d : unram.discs)
        if (kronecker(d, Int(r)) != -1) never_ok = false;
      if (ram_ok && never_ok) accepted.push_back(r);
    }

    v.exact = true;
    if (accepted.empty()) {
      v.notes.push_back("no residue class separates the two covers");
      return v;
    }

    long best = M;
    std::vector<long> best_classes(accepted);
    for (long m = 1; m < M; ++m) {
      if (M % m != 0) continue;
      std::map<long, bool> verdicts;
      bool consistent = true;
      std::set<long> acc(accepted.begin(), accepted.end());
      for (long r = 1; r < M && consistent; ++r) {
        if (std::gcd(r, M) != 1) continue;
        bool in = acc.count(r) > 0;
        auto [it, inserted] = verdicts.try_emplace(r % m, in);
        if (!inserted && it->second != in) consistent = false;
      }
      if (consistent) {
        best = m;
        best_classes.clear();
        for (const auto& [cls, in] : verdicts)
          if (in) best_classes.push_back(cls);
        break;
      }
    }
    v.holds = true;
    v.modulus = best;
    v.residues = best_classes;
    v.excluded_primes = sorted_bad_primes(c1, c2, prime_window);

    for (long p : primes_up_to(std::max<long>(prime_window, 200))) {
      if (v.witness_primes.size() >= 5) break;
      if (M % p == 0) continue;
      if (!classify_prime(c1, p).good) continue;
      if (!classify_prime(c2, p).good) continue;
      if (!std::count(v.residues.begin(), v.residues.end(), p % best)) continue;
      WitnessReport w1 = ramification_witness(c1, p);
      WitnessReport w2 = ramification_witness(c2, p);
      if (w1.never_ramifies || !w2.never_ramifies)
        fail(errc::internal, "residue-class analysis contradicts the witness construction");
      v.witness_primes.push_back(p);
    }
    v.notes.push_back("infinitely many primes fall in the listed residue classes");
    if (v.witness_primes.empty())
      v.notes.push_back("holds, but no admissible witness prime in the scanned range");
    v.consequence = "infinitely many primes admit a rational point meeting a branch orbit of '" +
                    c1.name + "' while no rational point meets one of '" + c2.name + "'";
    return v;
  }

  DivisorReport d1 = ramifiable_primes(c1, prime_window);
  DivisorReport d2 = ramifiable_primes(c2, prime_window);
  v.notes.insert(v.notes.end(), d1.caveats.begin(), d1.caveats.end());
  v.notes.insert(v.notes.end(), d2.caveats.begin(), d2.caveats.end());
  std::set<long> second(d2.primes.begin(), d2.primes.end());
  for (long p : d1.primes) {
    if (second.count(p)) continue;
    if (!classify_prime(c1, p).good || !classify_prime(c2, p).good) {
      v.excluded_primes.push_back(p);
      continue;
    }
    v.witness_primes.push_back(p);
  }
  v.window = prime_window;
  v.holds = !v.witness_primes.empty();
  v.notes.push_back("window scan: " + std::to_string(d1.primes.size()) + " divisor primes for '" +
                    c1.name + "', " + std::to_string(d2.primes.size()) + " for '" + c2.name +
                    "', " + std::to_string(v.witness_primes.size()) +
                    " separating and good for both");
  v.notes.push_back("window evidence only; no finiteness conclusion");
  if (v.holds)
    v.consequence = "inside the window, the listed primes admit a rational point meeting a "
                    "branch orbit of '" +
                    c1.name + "' while no rational point meets one of '" + c2.name + "'";
  return v;
}

CorollaryVerdict check_four_branch(const CoverData& cover) {
  CorollaryVerdict v;
  long geometric_points = 0;
  bool rational_branch = false;
  for (const BranchOrbit& orb : cover.orbits) {
    geometric_points += static_cast<long>(orb.point.degree());
    if (orb.point.is_rational() || orb.point.is_infinity()) rational_branch = true;
  }
  v.holds = geometric_points == 4 && !rational_branch;
  if (v.holds) {
    v.witness = std::to_string(geometric_points) + " geometric branch points, none rational";
  } else if (geometric_points != 4) {
    v.notes.push_back("cover has " + std::to_string(geometric_points) +
                      " geometric branch points, not 4");
  } else {
    v.notes.push_back("some branch point is rational");
  }
  return v;
}

CorollaryVerdict check_symmetric_shape(const CoverData& cover) {
  CorollaryVerdict v;
  if (!cover.group.concrete()) {
    v.applies = false;
    v.notes.push_back("criterion needs a concrete permutation group");
    return v;
  }
  const PermGroup& g = cover.group.perm();
  int n = static_cast<int>(g.degree());
  Int nfact(1);
  for (int i = 2; i <= n; ++i) nfact *= i;
  if (Int(g.order()) != nfact || n < 3) {
    v.applies = false;
    v.notes.push_back("criterion applies to full symmetric groups of degree at least 3");
    return v;
  }

  std::set<std::vector<int>> branch_types;
  for (const BranchOrbit& orb : cover.orbits)
    branch_types.insert(g.class_by_label(orb.class_label).type);

  auto label_of = [&](std::vector<int> type) {
    std::sort(type.begin(), type.end());
    return cycle_type_label(type);
  };

  if (!branch_types.count({n})) {
    v.holds = true;
    v.witness = label_of({n});
    return v;
  }
  for (int m = 1; 2 * m <= n; ++m) {
    if (std::gcd(m, n - m) != 1) continue;
    std::vector<int> type = m == n - m ? std::vector<int>{m, m} : std::vector<int>{m, n - m};
    std::sort(type.begin(), type.end());
    if (!branch_types.count(type)) {
      v.holds = true;
      v.witness = label_of(type);
      return v;
    }
  }
  v.notes.push_back("the branch classes contain the full cycle and every coprime two-cycle "
                    "product; no missing label");
  return v;
}

}  // namespace ramiforge
