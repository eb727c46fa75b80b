#include "ramiforge/sweep.hpp"

#include <exception>
#include <set>

#include "ramiforge/prescriber.hpp"
#include "ramiforge/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramiforge {

namespace {

AgreementReport agreement_for_prime(const CoverData& cover, long p,
                                    const std::vector<Rat>& points) {
  AgreementReport r;
  if (!classify_prime(cover, p).good) return r;
  const PermGroup& g = cover.group.perm();
  for (const Rat& t0 : points) {
    PointP1 pt = PointP1::finite(t0);
    if (is_branch_point(cover, pt)) continue;
    InertiaPrediction pred = predict_inertia(cover, p, pt);
    if (pred.status != InertiaStatus::decided) {
      ++r.undecided;
      continue;
    }
    PolyQ f;
    try {
      f = specialize_defining_poly(cover, t0);
    } catch (const error& e) {
      if (e.kind() != errc::invalid_input) throw;
      ++r.undecided;
      continue;
    }
    if (f.degree() > 8) {
      ++r.undecided;
      continue;
    }
    RamReport orc = tame_splitting_type(f, p);
    if (!orc.decided()) {
      ++r.undecided;
      continue;
    }
    ++r.pairs_checked;
    std::vector<int> want = g.class_by_label(pred.class_label).type;
    if (orc.inertia_cycle_type != want)
      r.mismatches.push_back({p, t0, pred.class_label, cycle_type_label(orc.inertia_cycle_type)});
  }
  return r;
}

void require_oracle_ready(const CoverData& cover) {
  if (!cover.group.concrete() || !cover.defining_poly)
    fail(errc::capability,
         "the agreement sweep needs a concrete permutation group and a defining polynomial");
}

AgreementReport merge(std::vector<AgreementReport>& parts) {
  AgreementReport total;
  for (AgreementReport& part : parts) {
    total.pairs_checked += part.pairs_checked;
    total.undecided += part.undecided;
    total.mismatches.insert(total.mismatches.end(), part.mismatches.begin(),
                            part.mismatches.end());
  }
  return total;
}

}  // namespace

std::vector<PrimeVerdict> classify_window_serial(const CoverData& cover, long bound) {
  std::vector<PrimeVerdict> out;
  for (long p : primes_up_to(bound)) out.push_back(classify_prime(cover, p));
  return out;
}

std::vector<PrimeVerdict> classify_window(const CoverData& cover, long bound) {
#ifndef _OPENMP
  return classify_window_serial(cover, bound);
#else
  std::vector<long> ps = primes_up_to(bound);
  std::vector<PrimeVerdict> out(ps.size());
  std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(ps.size()); ++i) {
    try {
      out[static_cast<size_t>(i)] = classify_prime(cover, ps[static_cast<size_t>(i)]);
    } catch (...) {
#pragma omp critical(ramiforge_sweep_error)
      {
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
#endif
}

std::vector<Rat> agreement_points(long count) {
  if (count < 1) fail(errc::invalid_input, "point count must be positive");
  std::set<Rat> s;
  s.insert(Rat(0));
  for (long k = 1; static_cast<long>(s.size()) < count; ++k) {
    s.insert(Rat(k));
    s.insert(Rat(-k));
    s.insert(Rat(k) / 2);
    s.insert(Rat(-k) / 3);
  }
  std::vector<Rat> out(s.begin(), s.end());
  out.resize(static_cast<size_t>(count));
  return out;
}

AgreementReport agreement_window_serial(const CoverData& cover, long prime_bound,
                                        const std::vector<Rat>& points) {
  require_oracle_ready(cover);
  std::vector<long> ps = primes_up_to(prime_bound);
  std::vector<AgreementReport> parts(ps.size());
  for (size_t i = 0; i < ps.size(); ++i) parts[i] = agreement_for_prime(cover, ps[i], points);
  return merge(parts);
}

AgreementReport agreement_window(const CoverData& cover, long prime_bound,
                                 const std::vector<Rat>& points) {
#ifndef _OPENMP
  return agreement_window_serial(cover, prime_bound, points);
#else
  require_oracle_ready(cover);
  std::vector<long> ps = primes_up_to(prime_bound);
  std::vector<AgreementReport> parts(ps.size());
  std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(ps.size()); ++i) {
    try {
      parts[static_cast<size_t>(i)] =
          agreement_for_prime(cover, ps[static_cast<size_t>(i)], points);
    } catch (...) {
#pragma omp critical(ramiforge_sweep_error)
      {
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return merge(parts);
#endif
}

}  // namespace ramiforge
