#ifndef RAMIFORGE_COVER_HPP
#define RAMIFORGE_COVER_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramiforge/perm.hpp"
#include "ramiforge/places.hpp"

namespace ramiforge {

/* Polynomial in T and X, stored as X-degree -> coefficient polynomial in T.
 * Must be monic in X wherever the library requires a defining polynomial. */
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<PolyQ> x_coeffs) : c_(std::move(x_coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  long x_degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<PolyQ>& x_coeffs() const { return c_; }
  PolyQ x_coeff(size_t i) const { return i < c_.size() ? c_[i] : PolyQ(); }
  bool monic_in_x() const { return !is_zero() && c_.back() == PolyQ::one(); }

  /* Specialize T = t0; the result is a polynomial in X. */
  PolyQ at_t(const Rat& t0) const;

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<PolyQ> c_;
};

/* Conjugacy class data for groups too large to enumerate (stored by name,
 * element order, and whether the class is closed under powers coprime to
 * the element order). */
struct AbstractClass {
  std::string label;
  long element_order = 0;
  bool rational = false;
};

struct AbstractGroup {
  std::string name;
  Int order;
  std::vector<long> prime_divisors;
  std::vector<AbstractClass> classes;
};

/* Group attached to a cover: a concrete permutation group when the degree is
 * small, otherwise abstract class data. */
class GroupModel {
 public:
  explicit GroupModel(PermGroup g);
  explicit GroupModel(AbstractGroup g);

  bool concrete() const { return perm_ != nullptr; }
  const PermGroup& perm() const;
  const AbstractGroup& abstract() const;

  Int order() const;
  bool divides_order(const Int& p) const;
  bool has_class(const std::string& label) const;
  long class_element_order(const std::string& label) const;
  /* Label of C^a; identity handling works for both models, rationality
   * is required for abstract nontrivial powers. */
  std::string class_power(const std::string& label, long a) const;
  std::string identity_label() const;

 private:
  std::shared_ptr<PermGroup> perm_;
  std::shared_ptr<AbstractGroup> abstract_;
};

struct BranchOrbit {
  AlgPoint point;
  std::string class_label;
};

struct CoverData {
  std::string name;
  GroupModel group;
  std::vector<BranchOrbit> orbits;
  std::optional<BivarPoly> defining_poly;
  std::set<long> vertical_ram_primes;
  bool centerless = false;
  std::vector<std::string> caveats; /* advisory notes surfaced in reports */

  /* Branch point count over the algebraic closure. */
  long branch_point_count() const;
  bool has_rational_branch_point() const;
  const BranchOrbit& orbit(size_t i) const;
};

struct PrimeVerdict {
  long p = 0;
  bool good = false;
  std::vector<std::string> reasons; /* nonempty exactly when bad */
};

/* Good/bad classification of a prime for a cover: bad when p divides the
 * group order, when two distinct branch points (conjugates included) meet
 * mod p, when p carries declared vertical ramification, or when the
 * minimal-polynomial integrality needed to decide meetings fails. */
PrimeVerdict classify_prime(const CoverData& cover, long p);

/* Specialized defining polynomial P(t0, X); requires separability. */
PolyQ specialize_defining_poly(const CoverData& cover, const Rat& t0);

/* True when t0 coincides with a rational branch point or is a root of an
 * orbit minimal polynomial. */
bool is_branch_point(const CoverData& cover, const PointP1& t0);

/* Bundled families. */
CoverData make_trinomial_cover(long n, long m, long q, long r);
CoverData make_quadratic_cover(const std::vector<PolyQ>& radicand_factors, const std::string& name);
CoverData make_monster_cover();
CoverData make_mestre_a5_cover();
/* Synthetic cover: class data only (no defining polynomial), for
 * hypothesis checks that need a named class family. */
CoverData make_synthetic_cover(const std::string& name, PermGroup group,
                               const std::vector<std::pair<Rat, std::string>>& rational_orbits);

/* JSON cover-file round trip. */
CoverData load_cover_json(const std::string& json_text);
std::string save_cover_json(const CoverData& cover);
CoverData load_cover_file(const std::string& path);

}  // namespace ramiforge

#endif
