#ifndef RAMIFORGE_PERM_HPP
#define RAMIFORGE_PERM_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ramiforge/numbers.hpp"

namespace ramiforge {

/* Permutation on {0, ..., n-1} stored as an image vector. */
class Perm {
 public:
  Perm() = default;
  explicit Perm(size_t n);                       /* identity */
  explicit Perm(std::vector<int> images);        /* validated */
  /* 1-based disjoint-or-not cycle list, e.g. {{1,2},{3,4,5}} on n points. */
  static Perm from_cycles(size_t n, const std::vector<std::vector<int>>& cycles);

  size_t degree() const { return img_.size(); }
  int operator()(int x) const { return img_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& o) const; /* (this*o)(x) = this(o(x)) */
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const; /* g * this * g^-1 */
  Perm power(long k) const;

  bool is_identity() const;
  long order() const;
  /* Cycle lengths >= 1, ascending, including fixed points. */
  std::vector<int> cycle_type() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string str() const; /* cycle notation, 1-based */

 private:
  std::vector<int> img_;
};

/* Canonical cycle-type label "[1^a 2^b ...]" for an ascending-length
 * cycle-length multiset. */
std::string cycle_type_label(const std::vector<int>& lengths);

struct ConjClass {
  std::string label;       /* cycle-type label, "@k"-suffixed on collision */
  Perm representative;     /* minimal element of the class */
  long size = 0;
  long element_order = 0;
  std::vector<int> type;   /* ascending cycle lengths */
};

/* Finite permutation group given by generators.  Elements are enumerated
 * eagerly; refuses orders beyond 10^4. */
class PermGroup {
 public:
  PermGroup(size_t degree, std::vector<Perm> generators);

  size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  long order() const { return static_cast<long>(elements_.size()); }

  const std::vector<ConjClass>& conjugacy_classes() const { return classes_; }
  const ConjClass& class_of(const Perm& g) const;
  const ConjClass& class_by_label(const std::string& label) const;
  bool has_class(const std::string& label) const;
  std::string identity_label() const;

  /* Label of C^a: the class of g^a for g in C. */
  std::string class_power(const std::string& label, long a) const;

  bool is_centerless() const;

  /* All subgroups as sorted element-index sets; exact enumeration, used by
   * g-completeness.  Guarded to |G| <= 360. */
  const std::vector<std::vector<int>>& subgroups() const;

 private:
  void enumerate();
  void build_classes();

  size_t degree_;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_; /* sorted */
  std::map<Perm, int> class_index_of_;
  std::vector<ConjClass> classes_;
  mutable std::vector<std::vector<int>> subgroups_;
  mutable bool subgroups_built_ = false;
};

enum class Tri { no, yes, unknown };

/* A class set is g-complete when no proper subgroup meets every class in it.
 * Exact via the subgroup lattice for |G| <= 360; unknown above. */
Tri is_g_complete(const PermGroup& g, const std::vector<std::string>& class_labels);

/* Disjunctive form: each witness is a set of alternative labels, met by a
 * subgroup that intersects any one of them.  Cycle-type observations that
 * match several classes enter as one witness listing them all. */
Tri is_g_complete_any(const PermGroup& g,
                      const std::vector<std::vector<std::string>>& witnesses);

}  // namespace ramiforge

#endif
