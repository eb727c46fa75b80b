#include "ramiforge/cover.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "ramiforge/polyfp.hpp"

namespace ramiforge {

PolyQ BivarPoly::at_t(const Rat& t0) const {
  std::vector<Rat> out;
  out.reserve(c_.size());
  for (const PolyQ& ct : c_) out.push_back(ct.eval(t0));
  return PolyQ(std::move(out));
}

std::string BivarPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].str("T") << ")";
    if (i > 0) {
      os << "*X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

GroupModel::GroupModel(PermGroup g) : perm_(std::make_shared<PermGroup>(std::move(g))) {}

GroupModel::GroupModel(AbstractGroup g) : abstract_(std::make_shared<AbstractGroup>(std::move(g))) {
  bool has_identity = false;
  for (const AbstractClass& c : abstract_->classes)
    if (c.element_order == 1) has_identity = true;
  if (!has_identity) abstract_->classes.insert(abstract_->classes.begin(), {"1A", 1, true});
}

const PermGroup& GroupModel::perm() const {
  if (!perm_) fail(errc::capability, "operation needs a concrete permutation group");
  return *perm_;
}

const AbstractGroup& GroupModel::abstract() const {
  if (!abstract_) fail(errc::internal, "abstract() on a concrete group");
  return *abstract_;
}

Int GroupModel::order() const {
  if (perm_) return Int(perm_->order());
  return abstract_->order;
}

bool GroupModel::divides_order(const Int& p) const {
  if (perm_) return Int(perm_->order()) % p == 0;
  return abstract_->order % p == 0;
}

bool GroupModel::has_class(const std::string& label) const {
  if (perm_) return perm_->has_class(label);
  for (const AbstractClass& c : abstract_->classes)
    if (c.label == label) return true;
  return false;
}

long GroupModel::class_element_order(const std::string& label) const {
  if (perm_) return perm_->class_by_label(label).element_order;
  for (const AbstractClass& c : abstract_->classes)
    if (c.label == label) return c.element_order;
  fail(errc::invalid_input, "no conjugacy class labeled '" + label + "'");
}

std::string GroupModel::identity_label() const {
  if (perm_) return perm_->identity_label();
  for (const AbstractClass& c : abstract_->classes)
    if (c.element_order == 1) return c.label;
  fail(errc::internal, "abstract group lost its identity class");
}

std::string GroupModel::class_power(const std::string& label, long a) const {
  if (perm_) return perm_->class_power(label, a);
  long ord = class_element_order(label);
  long r = ((a % ord) + ord) % ord;
  if (r == 0) return identity_label();
  long g = std::gcd(r, ord);
  if (g == 1) {
    for (const AbstractClass& c : abstract_->classes)
      if (c.label == label && c.rational) return label;
    fail(errc::capability, "class power of non-rational abstract class '" + label + "'");
  }
  fail(errc::capability,
       "class power with proper divisor exponent unavailable for abstract class '" + label + "'");
}

long CoverData::branch_point_count() const {
  long n = 0;
  for (const BranchOrbit& o : orbits) n += o.point.degree();
  return n;
}

bool CoverData::has_rational_branch_point() const {
  for (const BranchOrbit& o : orbits)
    if (o.point.is_infinity() || o.point.is_rational()) return true;
  return false;
}

const BranchOrbit& CoverData::orbit(size_t i) const {
  if (i >= orbits.size()) fail(errc::invalid_input, "orbit index out of range");
  return orbits[i];
}

namespace {

/* Finite-chart minimal polynomial with the 0/inf conventions. */
PolyQ chart_poly(const AlgPoint& t) {
  if (t.is_infinity()) return PolyQ::one();
  return t.minpoly();
}

PolyQ reverse_chart_poly(const AlgPoint& t) { return chart_poly(reverse_minpoly(t)); }

/* Common nonzero residue root of a (p-integral) and the reciprocal locus of
 * b (p-integral, monic): detects meetings between a v>=0 orbit and a
 * reciprocal-integral orbit, where any meeting forces unit residues. */
bool mixed_meeting(const PolyQ& a, const PolyQ& b, long p) {
  PolyFp ar = PolyFp::from_polyq(a, static_cast<uint64_t>(p));
  PolyFp br = PolyFp::from_polyq(b, static_cast<uint64_t>(p));
  std::vector<uint64_t> rev(br.coeffs().rbegin(), br.coeffs().rend());
  PolyFp brev(static_cast<uint64_t>(p), std::move(rev));
  PolyFp g = PolyFp::gcd(ar, brev);
  /* strip the root at zero */
  PolyFp t = PolyFp::monomial(static_cast<uint64_t>(p), 1, 1);
  while (g.degree() > 0 && g.coeff(0) == 0) g = g / t;
  return g.degree() > 0;
}

bool positive_vp(const Rat& x, long p) { return vp(x, Int(p)).positive(); }

}  // namespace

PrimeVerdict classify_prime(const CoverData& cover, long p) {
  if (p < 2 || !is_prime(Int(p))) fail(errc::invalid_input, std::to_string(p) + " is not prime");
  PrimeVerdict verdict;
  verdict.p = p;
  Int P(p);

  if (cover.group.divides_order(P))
    verdict.reasons.push_back("divides the group order");

  if (!cover.centerless && cover.vertical_ram_primes.count(p))
    verdict.reasons.push_back("vertical ramification declared at " + std::to_string(p));

  /* Chart integrality per orbit; both charts failing blocks the meeting
   * analysis and the ramified-constant-field criterion alike. */
  size_t k = cover.orbits.size();
  std::vector<PolyQ> m(k), mr(k);
  std::vector<bool> im(k), imr(k);
  bool undecided = false;
  for (size_t i = 0; i < k; ++i) {
    m[i] = chart_poly(cover.orbits[i].point);
    mr[i] = reverse_chart_poly(cover.orbits[i].point);
    im[i] = m[i].p_integral(P);
    imr[i] = mr[i].p_integral(P);
    if (!im[i] && !imr[i]) undecided = true;
  }
  if (undecided) {
    verdict.reasons.push_back("(4) undecided, conservatively bad");
    verdict.good = false;
    return verdict;
  }

  auto meet_reason = [&](size_t i, size_t j) {
    verdict.reasons.push_back("branch points meet mod " + std::to_string(p) + ": " +
                              cover.orbits[i].point.str() + " and " + cover.orbits[j].point.str());
  };

  for (size_t i = 0; i < k; ++i) {
    /* conjugate meetings inside one orbit */
    if (m[i].degree() >= 2) {
      bool meet;
      if (im[i])
        meet = positive_vp(discriminant(m[i]), p);
      else
        meet = positive_vp(discriminant(mr[i]), p);
      if (meet) meet_reason(i, i);
    }
    for (size_t j = i + 1; j < k; ++j) {
      bool meet;
      if (im[i] && im[j]) {
        Rat res = resultant(m[i], m[j]);
        if (res == 0) fail(errc::invalid_input, "duplicate branch points in cover");
        meet = positive_vp(res, p);
      } else if (imr[i] && imr[j]) {
        Rat res = resultant(mr[i], mr[j]);
        if (res == 0) fail(errc::invalid_input, "duplicate branch points in cover");
        meet = positive_vp(res, p);
      } else if (im[i] && imr[j]) {
        meet = mixed_meeting(m[i], mr[j], p);
      } else if (im[j] && imr[i]) {
        meet = mixed_meeting(m[j], mr[i], p);
      } else {
        fail(errc::internal, "unreachable chart combination");
      }
      if (meet) meet_reason(i, j);
    }
  }

  verdict.good = verdict.reasons.empty();
  return verdict;
}

PolyQ specialize_defining_poly(const CoverData& cover, const Rat& t0) {
  if (!cover.defining_poly)
    fail(errc::capability, "cover '" + cover.name + "' has no defining polynomial");
  if (is_branch_point(cover, PointP1::finite(t0)))
    fail(errc::invalid_input, "specialization at branch point " + rat_str(t0));
  PolyQ f = cover.defining_poly->at_t(t0);
  if (f.degree() != cover.defining_poly->x_degree())
    fail(errc::internal, "specialization dropped the leading coefficient");
  if (!f.is_squarefree())
    fail(errc::invalid_input,
         "specialized polynomial at t0 = " + rat_str(t0) + " is inseparable");
  return f;
}

bool is_branch_point(const CoverData& cover, const PointP1& t0) {
  for (const BranchOrbit& o : cover.orbits) {
    if (o.point.is_infinity()) {
      if (t0.is_infinity()) return true;
      continue;
    }
    if (t0.is_infinity()) continue;
    if (o.point.minpoly().eval(t0.value()) == 0) return true;
  }
  return false;
}

namespace {

void validate_cover(CoverData& cover) {
  if (cover.orbits.empty()) fail(errc::invalid_input, "cover needs at least one branch orbit");
  for (size_t i = 0; i < cover.orbits.size(); ++i) {
    const BranchOrbit& o = cover.orbits[i];
    if (!cover.group.has_class(o.class_label))
      fail(errc::invalid_input, "orbit class '" + o.class_label + "' not in the group");
    if (cover.group.class_element_order(o.class_label) == 1)
      fail(errc::invalid_input, "inertia class at a branch point must be nontrivial");
    for (size_t j = i + 1; j < cover.orbits.size(); ++j)
      if (o.point == cover.orbits[j].point)
        fail(errc::invalid_input, "branch orbits must be pairwise distinct");
    if (o.point.irreducibility_user_asserted())
      cover.caveats.push_back("irreducibility of " + o.point.minpoly().str() +
                              " is user-asserted (sieve inconclusive)");
  }
  if (cover.defining_poly) {
    if (!cover.defining_poly->monic_in_x())
      fail(errc::invalid_input, "defining polynomial must be monic in X");
    if (cover.group.concrete() &&
        cover.defining_poly->x_degree() != static_cast<long>(cover.group.perm().degree()))
      fail(errc::invalid_input, "defining polynomial X-degree must match the group degree");
  }
  if (cover.group.concrete()) {
    bool actual = cover.group.perm().is_centerless();
    if (cover.centerless != actual)
      fail(errc::invalid_input, std::string("centerless flag is ") +
                                    (cover.centerless ? "set" : "clear") + " but the group " +
                                    (actual ? "is" : "is not") + " centerless");
  }
  if (!cover.centerless && cover.vertical_ram_primes.empty())
    cover.caveats.push_back("vertical ramification assumed absent (user-declared)");
}

}  // namespace

CoverData make_trinomial_cover(long n, long m, long q, long r) {
  if (n < 2 || m < 1 || m >= n) fail(errc::invalid_input, "trinomial family needs 1 <= m < n");
  if (std::gcd(m, n) != 1) fail(errc::invalid_input, "trinomial family needs gcd(m, n) = 1");
  if (q < 1 || r < 1 || q * (n - m) - r * n != 1)
    fail(errc::invalid_input, "trinomial family needs q(n-m) - rn = 1 with q, r >= 1");
  if (n > 7) fail(errc::capability, "trinomial family capped at n <= 7 (group enumeration)");

  std::vector<int> ncycle(static_cast<size_t>(n));
  std::iota(ncycle.begin(), ncycle.end(), 1);
  PermGroup sn(static_cast<size_t>(n),
               {Perm::from_cycles(static_cast<size_t>(n), {{1, 2}}),
                Perm::from_cycles(static_cast<size_t>(n), {ncycle})});

  auto label_of = [&](std::vector<int> lens) {
    std::sort(lens.begin(), lens.end());
    return cycle_type_label(lens);
  };
  std::vector<int> type_zero;
  if (m == 1)
    type_zero = {1, static_cast<int>(n - m)};
  else
    type_zero = {static_cast<int>(m), static_cast<int>(n - m)};
  std::vector<int> type_third(static_cast<size_t>(n - 2), 1);
  type_third.push_back(2);

  /* third branch point m^m (n-m)^(n-m) / n^n */
  Rat c(1);
  for (long i = 0; i < m; ++i) c *= m;
  for (long i = 0; i < n - m; ++i) c *= (n - m);
  for (long i = 0; i < n; ++i) c /= n;

  CoverData cover{/*name=*/"trinomial(" + std::to_string(n) + "," + std::to_string(m) + "," +
                      std::to_string(q) + "," + std::to_string(r) + ")",
                  GroupModel(std::move(sn)),
                  {},
                  std::nullopt,
                  {},
                  n >= 3};
  cover.orbits.push_back({AlgPoint::rational(Rat(0)), label_of(type_zero)});
  cover.orbits.push_back({AlgPoint::infinity(), label_of({static_cast<int>(n)})});
  cover.orbits.push_back({AlgPoint::rational(c), label_of(type_third)});

  /* X^n - T^r X^m + T^q */
  std::vector<PolyQ> xc(static_cast<size_t>(n) + 1);
  xc[0] = PolyQ::monomial(Rat(1), static_cast<size_t>(q));
  xc[static_cast<size_t>(m)] = PolyQ::monomial(Rat(-1), static_cast<size_t>(r));
  xc[static_cast<size_t>(n)] = PolyQ::one();
  cover.defining_poly = BivarPoly(std::move(xc));

  validate_cover(cover);
  return cover;
}

CoverData make_quadratic_cover(const std::vector<PolyQ>& radicand_factors, const std::string& name) {
  if (radicand_factors.empty()) fail(errc::invalid_input, "quadratic cover needs a radicand");
  PolyQ product = PolyQ::one();
  for (const PolyQ& f : radicand_factors) {
    if (!f.is_monic() || f.degree() < 1)
      fail(errc::invalid_input, "radicand factors must be monic of degree >= 1");
    product = product * f;
  }
  if (!product.is_squarefree()) fail(errc::invalid_input, "radicand must be squarefree");

  PermGroup z2(2, {Perm::from_cycles(2, {{1, 2}})});
  std::string flip = "[2^1]";
  CoverData cover{name, GroupModel(std::move(z2)), {}, std::nullopt, {2}, false};
  for (const PolyQ& f : radicand_factors) {
    AlgPoint pt = f.degree() == 1 ? AlgPoint::rational(-f.coeff(0)) : AlgPoint::from_minpoly(f);
    cover.orbits.push_back({pt, flip});
  }
  if (product.degree() % 2 == 1) cover.orbits.push_back({AlgPoint::infinity(), flip});

  cover.defining_poly = BivarPoly({-product, PolyQ(), PolyQ::one()});
  validate_cover(cover);
  return cover;
}

CoverData make_monster_cover() {
  AbstractGroup monster;
  monster.name = "M";
  struct PE {
    long p, e;
  };
  const PE factorization[] = {{2, 46}, {3, 20}, {5, 9},  {7, 6}, {11, 2}, {13, 3},
                              {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1}, {41, 1},
                              {47, 1}, {59, 1}, {71, 1}};
  monster.order = 1;
  for (const PE& pe : factorization) {
    monster.prime_divisors.push_back(pe.p);
    for (long i = 0; i < pe.e; ++i) monster.order *= pe.p;
  }
  monster.classes = {{"1A", 1, true}, {"2A", 2, true}, {"3B", 3, true}, {"29A", 29, true}};

  CoverData cover{"monster(2A,3B,29A)", GroupModel(std::move(monster)), {}, std::nullopt, {}, true};
  cover.orbits.push_back({AlgPoint::rational(Rat(0)), "2A"});
  cover.orbits.push_back({AlgPoint::rational(Rat(1)), "3B"});
  cover.orbits.push_back({AlgPoint::infinity(), "29A"});
  validate_cover(cover);
  return cover;
}

CoverData make_mestre_a5_cover() {
  PermGroup a5(5, {Perm::from_cycles(5, {{1, 2, 3, 4, 5}}), Perm::from_cycles(5, {{3, 4, 5}})});
  if (a5.order() != 60) fail(errc::internal, "unexpected alternating group order");

  CoverData cover{"mestre_a5", GroupModel(std::move(a5)), {}, std::nullopt, {}, true};
  /* quartic branch locus 1 + 5^5 3^3 T^4 = 0, made monic; X^4 + a with
   * a > 0 non-square has no rational quadratic split, so this is
   * irreducible and the sieve is skipped */
  PolyQ locus({Rat(1) / Rat(84375), Rat(0), Rat(0), Rat(0), Rat(1)});
  cover.orbits.push_back({AlgPoint::irreducible_unchecked(locus, false), "[1^1 2^2]"});

  /* (X^5 - X) - T(25 X^4 - 9) */
  std::vector<PolyQ> xc(6);
  xc[0] = PolyQ({Rat(0), Rat(9)});
  xc[1] = PolyQ(Rat(-1));
  xc[4] = PolyQ({Rat(0), Rat(-25)});
  xc[5] = PolyQ::one();
  cover.defining_poly = BivarPoly(std::move(xc));
  cover.caveats.push_back(
      "the declared alternating group is the splitting group only over a quadratic extension "
      "of the rationals; over the rationals itself the specializations have non-square "
      "discriminant");
  validate_cover(cover);
  return cover;
}

CoverData make_synthetic_cover(const std::string& name, PermGroup group,
                               const std::vector<std::pair<Rat, std::string>>& rational_orbits) {
  bool centerless = group.is_centerless();
  CoverData cover{name, GroupModel(std::move(group)), {}, std::nullopt, {}, centerless};
  for (const auto& [pt, label] : rational_orbits)
    cover.orbits.push_back({AlgPoint::rational(pt), label});
  validate_cover(cover);
  return cover;
}

/* ---- JSON round trip ---- */

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(errc::invalid_input, "expected integer or rational string in cover file");
}

PolyQ poly_from_json(const json& j) {
  if (!j.is_array()) fail(errc::invalid_input, "expected coefficient array in cover file");
  std::vector<Rat> c;
  for (const auto& e : j) c.push_back(rat_from_json(e));
  return PolyQ(std::move(c));
}

json poly_to_json(const PolyQ& f) {
  json a = json::array();
  for (const Rat& c : f.coeffs()) a.push_back(rat_str(c));
  return a;
}

}  // namespace

CoverData load_cover_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(errc::invalid_input, std::string("cover file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("group") || !j.contains("orbits"))
    fail(errc::invalid_input, "cover file needs 'group' and 'orbits'");

  std::optional<GroupModel> group;
  const json& jg = j["group"];
  if (jg.contains("abstract")) {
    const json& ja = jg["abstract"];
    AbstractGroup a;
    a.name = ja.value("name", "abstract");
    a.order = Int(ja.at("order").get<std::string>());
    for (const auto& p : ja.at("prime_divisors")) a.prime_divisors.push_back(p.get<long>());
    for (const auto& c : ja.at("classes"))
      a.classes.push_back({c.at("label").get<std::string>(), c.at("element_order").get<long>(),
                           c.value("rational", false)});
    group.emplace(std::move(a));
  } else {
    size_t degree = jg.at("degree").get<size_t>();
    std::vector<Perm> gens;
    for (const auto& jcycles : jg.at("generators")) {
      std::vector<std::vector<int>> cycles;
      for (const auto& jc : jcycles) cycles.push_back(jc.get<std::vector<int>>());
      gens.push_back(Perm::from_cycles(degree, cycles));
    }
    group.emplace(PermGroup(degree, std::move(gens)));
  }

  CoverData cover{j.value("name", "cover"), std::move(*group), {}, std::nullopt, {}, false};
  for (const auto& jo : j["orbits"]) {
    AlgPoint pt = AlgPoint::infinity();
    const json& jm = jo.at("minpoly");
    if (jm.is_string() && jm.get<std::string>() == "inf") {
      pt = AlgPoint::infinity();
    } else if (jm.is_string() && jm.get<std::string>() == "0") {
      pt = AlgPoint::rational(Rat(0));
    } else if (jm.is_string()) {
      pt = AlgPoint::rational(parse_rational(jm.get<std::string>()));
    } else if (jm.is_number_integer()) {
      pt = AlgPoint::rational(Rat(static_cast<long>(jm.get<int64_t>())));
    } else {
      PolyQ m = poly_from_json(jm);
      if (m.degree() == 1) {
        if (!m.is_monic()) fail(errc::invalid_input, "minimal polynomials must be monic");
        pt = AlgPoint::rational(-m.coeff(0));
      } else {
        pt = AlgPoint::from_minpoly(m);
      }
    }
    cover.orbits.push_back({pt, jo.at("class").get<std::string>()});
  }
  if (j.contains("defining_poly")) {
    std::vector<PolyQ> xc;
    for (const auto& jc : j["defining_poly"]) xc.push_back(poly_from_json(jc));
    cover.defining_poly = BivarPoly(std::move(xc));
  }
  if (j.contains("vertical_ram_primes"))
    for (const auto& p : j["vertical_ram_primes"]) cover.vertical_ram_primes.insert(p.get<long>());
  cover.centerless = j.value("centerless", false);
  if (j.contains("caveats"))
    for (const auto& c : j["caveats"]) cover.caveats.push_back(c.get<std::string>());
  validate_cover(cover);
  std::vector<std::string> unique_caveats;
  for (const std::string& c : cover.caveats)
    if (!std::count(unique_caveats.begin(), unique_caveats.end(), c)) unique_caveats.push_back(c);
  cover.caveats = std::move(unique_caveats);
  return cover;
}

std::string save_cover_json(const CoverData& cover) {
  json j;
  j["name"] = cover.name;
  if (cover.group.concrete()) {
    const PermGroup& g = cover.group.perm();
    json gens = json::array();
    for (const Perm& s : g.generators()) {
      json cycles = json::array();
      std::vector<bool> seen(g.degree(), false);
      for (size_t x = 0; x < g.degree(); ++x) {
        if (seen[x] || s(static_cast<int>(x)) == static_cast<int>(x)) {
          seen[x] = true;
          continue;
        }
        json cyc = json::array();
        size_t y = x;
        while (!seen[y]) {
          seen[y] = true;
          cyc.push_back(y + 1);
          y = static_cast<size_t>(s(static_cast<int>(y)));
        }
        cycles.push_back(cyc);
      }
      gens.push_back(cycles);
    }
    j["group"] = {{"degree", g.degree()}, {"generators", gens}};
  } else {
    const AbstractGroup& a = cover.group.abstract();
    json classes = json::array();
    for (const AbstractClass& c : a.classes)
      classes.push_back(
          {{"label", c.label}, {"element_order", c.element_order}, {"rational", c.rational}});
    j["group"] = {{"abstract",
                   {{"name", a.name},
                    {"order", a.order.get_str()},
                    {"prime_divisors", a.prime_divisors},
                    {"classes", classes}}}};
  }
  json orbits = json::array();
  for (const BranchOrbit& o : cover.orbits) {
    json jo;
    if (o.point.is_infinity())
      jo["minpoly"] = "inf";
    else if (o.point.is_rational())
      jo["minpoly"] = rat_str(o.point.rational_value());
    else
      jo["minpoly"] = poly_to_json(o.point.minpoly());
    jo["class"] = o.class_label;
    orbits.push_back(jo);
  }
  j["orbits"] = orbits;
  if (cover.defining_poly) {
    json xc = json::array();
    for (const PolyQ& c : cover.defining_poly->x_coeffs()) xc.push_back(poly_to_json(c));
    j["defining_poly"] = xc;
  }
  j["vertical_ram_primes"] = cover.vertical_ram_primes;
  j["centerless"] = cover.centerless;
  if (!cover.caveats.empty()) j["caveats"] = cover.caveats;
  return j.dump(2);
}

CoverData load_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_input, "cannot open cover file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_cover_json(ss.str());
}

}  // namespace ramiforge
