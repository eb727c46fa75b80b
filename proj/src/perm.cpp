#include "ramiforge/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ramiforge {

Perm::Perm(size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || static_cast<size_t>(v) >= img_.size() || seen[static_cast<size_t>(v)])
      fail(errc::invalid_input, "invalid permutation image vector");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::from_cycles(size_t n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    if (cyc.empty()) continue;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i] - 1;
      int b = cyc[(i + 1) % cyc.size()] - 1;
      if (a < 0 || b < 0 || static_cast<size_t>(a) >= n || static_cast<size_t>(b) >= n)
        fail(errc::invalid_input, "cycle entry out of range 1.." + std::to_string(n));
      img[static_cast<size_t>(a)] = b;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree()) fail(errc::internal, "degree mismatch in permutation product");
  std::vector<int> img(degree());
  for (size_t x = 0; x < degree(); ++x) img[x] = img_[static_cast<size_t>(o.img_[x])];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(degree());
  for (size_t x = 0; x < degree(); ++x) img[static_cast<size_t>(img_[x])] = static_cast<int>(x);
  return Perm(std::move(img));
}

Perm Perm::conjugated_by(const Perm& g) const { return g * (*this) * g.inverse(); }

Perm Perm::power(long k) const {
  long n = order();
  k %= n;
  if (k < 0) k += n;
  Perm acc(degree());
  Perm base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (size_t x = 0; x < degree(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

long Perm::order() const {
  long ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, static_cast<long>(len));
  return ord;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<bool> seen(degree(), false);
  std::vector<int> lens;
  for (size_t x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    size_t y = x;
    while (!seen[y]) {
      seen[y] = true;
      y = static_cast<size_t>(img_[y]);
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::string Perm::str() const {
  std::vector<bool> seen(degree(), false);
  std::ostringstream os;
  bool any = false;
  for (size_t x = 0; x < degree(); ++x) {
    if (seen[x] || img_[x] == static_cast<int>(x)) {
      seen[x] = true;
      continue;
    }
    os << "(";
    size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) os << " ";
      os << (y + 1);
      first = false;
      y = static_cast<size_t>(img_[y]);
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

std::string cycle_type_label(const std::vector<int>& lengths) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (size_t i = 0; i < lengths.size();) {
    size_t j = i;
    while (j < lengths.size() && lengths[j] == lengths[i]) ++j;
    if (!first) os << " ";
    os << lengths[i] << "^" << (j - i);
    first = false;
    i = j;
  }
  os << "]";
  return os.str();
}

PermGroup::PermGroup(size_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_) fail(errc::invalid_input, "generator degree mismatch");
  if (gens_.empty()) gens_.push_back(Perm(degree_));
  enumerate();
  build_classes();
}

void PermGroup::enumerate() {
  const size_t cap = 10000;
  std::set<Perm> closed;
  std::vector<Perm> queue{Perm(degree_)};
  closed.insert(queue[0]);
  while (!queue.empty()) {
    Perm g = queue.back();
    queue.pop_back();
    for (const Perm& s : gens_) {
      Perm h = g * s;
      if (closed.insert(h).second) {
        if (closed.size() > cap)
          fail(errc::capability, "group order exceeds the 10^4 enumeration cap");
        queue.push_back(h);
      }
    }
  }
  elements_.assign(closed.begin(), closed.end());
}

void PermGroup::build_classes() {
  std::set<Perm> remaining(elements_.begin(), elements_.end());
  std::vector<ConjClass> classes;
  std::vector<std::set<Perm>> members;
  while (!remaining.empty()) {
    Perm seed = *remaining.begin();
    std::set<Perm> orbit{seed};
    std::vector<Perm> queue{seed};
    while (!queue.empty()) {
      Perm g = queue.back();
      queue.pop_back();
      for (const Perm& s : gens_) {
        Perm h = g.conjugated_by(s);
        if (orbit.insert(h).second) queue.push_back(h);
      }
    }
    ConjClass c;
    c.representative = *orbit.begin();
    c.size = static_cast<long>(orbit.size());
    c.element_order = c.representative.order();
    c.type = c.representative.cycle_type();
    c.label = cycle_type_label(c.type);
    classes.push_back(c);
    members.push_back(orbit);
    for (const Perm& g : orbit) remaining.erase(g);
  }
  /* Deterministic order: by minimal representative.  Cycle-type label
   * collisions (possible outside symmetric groups) get an "@k" suffix. */
  std::vector<size_t> idx(classes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return classes[a].representative < classes[b].representative;
  });
  std::map<std::string, int> label_uses;
  for (size_t i : idx) label_uses[classes[i].label]++;
  std::map<std::string, int> label_seen;
  for (size_t i : idx) {
    std::string base = classes[i].label;
    int k = ++label_seen[base];
    if (label_uses[base] > 1) classes[i].label = base + "@" + std::to_string(k);
  }
  for (size_t i : idx) {
    int ci = static_cast<int>(classes_.size());
    classes_.push_back(classes[i]);
    for (const Perm& g : members[i]) class_index_of_[g] = ci;
  }
}

const ConjClass& PermGroup::class_of(const Perm& g) const {
  auto it = class_index_of_.find(g);
  if (it == class_index_of_.end()) fail(errc::invalid_input, "element not in group");
  return classes_[static_cast<size_t>(it->second)];
}

const ConjClass& PermGroup::class_by_label(const std::string& label) const {
  for (const ConjClass& c : classes_)
    if (c.label == label) return c;
  fail(errc::invalid_input, "no conjugacy class labeled '" + label + "'");
}

bool PermGroup::has_class(const std::string& label) const {
  for (const ConjClass& c : classes_)
    if (c.label == label) return true;
  return false;
}

std::string PermGroup::identity_label() const { return class_of(Perm(degree_)).label; }

std::string PermGroup::class_power(const std::string& label, long a) const {
  const ConjClass& c = class_by_label(label);
  return class_of(c.representative.power(a)).label;
}

bool PermGroup::is_centerless() const {
  for (const Perm& g : elements_) {
    if (g.is_identity()) continue;
    bool central = true;
    for (const Perm& s : gens_)
      if (!(g * s == s * g)) {
        central = false;
        break;
      }
    if (central) return false;
  }
  return true;
}

const std::vector<std::vector<int>>& PermGroup::subgroups() const {
  if (subgroups_built_) return subgroups_;
  int n = static_cast<int>(order());
  if (n > 360) fail(errc::capability, "subgroup lattice enumeration capped at |G| <= 360");
  std::map<Perm, int> index;
  for (size_t i = 0; i < elements_.size(); ++i) index[elements_[i]] = static_cast<int>(i);

  /* Multiplication table keeps the closure loop on plain integers. */
  std::vector<int> mul(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
          index.at(elements_[static_cast<size_t>(a)] * elements_[static_cast<size_t>(b)]);
  auto times = [&](int a, int b) {
    return mul[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)];
  };

  /* Only elements of prime-power order are needed as extension candidates:
   * every element is a product of its own prime-power-order powers. */
  std::vector<bool> candidate(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    long o = elements_[static_cast<size_t>(i)].order();
    int distinct = 0;
    for (long q = 2; q <= o; ++q)
      if (o % q == 0 && is_prime(Int(q))) {
        ++distinct;
        while (o % q == 0) o /= q;
      }
    candidate[static_cast<size_t>(i)] = (distinct <= 1);
  }

  auto closure = [&](std::vector<int> seed) {
    std::vector<bool> in(static_cast<size_t>(n), false);
    std::vector<int> members;
    std::vector<int> queue;
    for (int s : seed)
      if (!in[static_cast<size_t>(s)]) {
        in[static_cast<size_t>(s)] = true;
        members.push_back(s);
        queue.push_back(s);
      }
    while (!queue.empty()) {
      int a = queue.back();
      queue.pop_back();
      for (size_t i = 0; i < members.size(); ++i) {
        int b = members[i];
        for (int c : {times(a, b), times(b, a)}) {
          if (!in[static_cast<size_t>(c)]) {
            in[static_cast<size_t>(c)] = true;
            members.push_back(c);
            queue.push_back(c);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  };

  int id_idx = index.at(Perm(degree_));
  std::set<std::vector<int>> found;
  found.insert({id_idx});
  std::vector<std::vector<int>> work{{id_idx}};
  while (!work.empty()) {
    std::vector<int> h = work.back();
    work.pop_back();
    std::vector<bool> in_h(static_cast<size_t>(n), false);
    for (int e : h) in_h[static_cast<size_t>(e)] = true;
    /* <H, g> depends only on the coset Hg, so extend once per coset, seeded
     * by any prime-power-order element the coset contains. */
    std::vector<bool> coset_done = in_h;
    for (int gi = 0; gi < n; ++gi) {
      if (coset_done[static_cast<size_t>(gi)]) continue;
      int pick = -1;
      for (int e : h) {
        int c = times(e, gi);
        coset_done[static_cast<size_t>(c)] = true;
        if (pick < 0 && candidate[static_cast<size_t>(c)]) pick = c;
      }
      if (pick < 0) continue;
      std::vector<int> seed = h;
      seed.push_back(pick);
      std::vector<int> k = closure(std::move(seed));
      if (found.insert(k).second) work.push_back(k);
    }
  }
  subgroups_.assign(found.begin(), found.end());
  subgroups_built_ = true;
  return subgroups_;
}

Tri is_g_complete_any(const PermGroup& g,
                      const std::vector<std::vector<std::string>>& witnesses) {
  for (const std::vector<std::string>& w : witnesses) {
    if (w.empty()) fail(errc::invalid_input, "empty witness alternative set");
    for (const std::string& label : w) g.class_by_label(label); /* validates */
  }
  if (g.order() > 360) return Tri::unknown;
  if (witnesses.size() > 64)
    fail(errc::capability, "witness count beyond the subgroup scan mask width");

  uint64_t full = witnesses.size() == 64 ? ~0ull : (1ull << witnesses.size()) - 1;
  std::vector<uint64_t> emask(g.elements().size(), 0);
  for (size_t i = 0; i < g.elements().size(); ++i) {
    const std::string& l = g.class_of(g.elements()[i]).label;
    for (size_t wi = 0; wi < witnesses.size(); ++wi)
      if (std::find(witnesses[wi].begin(), witnesses[wi].end(), l) != witnesses[wi].end())
        emask[i] |= 1ull << wi;
  }
  for (const std::vector<int>& sub : g.subgroups()) {
    if (sub.size() == static_cast<size_t>(g.order())) continue; /* whole group */
    uint64_t got = 0;
    for (int ei : sub) {
      got |= emask[static_cast<size_t>(ei)];
      if (got == full) break;
    }
    if (got == full) return Tri::no;
  }
  return Tri::yes;
}

Tri is_g_complete(const PermGroup& g, const std::vector<std::string>& class_labels) {
  std::vector<std::vector<std::string>> witnesses;
  for (const std::string& label : class_labels) witnesses.push_back({label});
  return is_g_complete_any(g, witnesses);
}

}  // namespace ramiforge
