#include "ramiforge/report.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace ramiforge {

std::string fnv1a64(const std::string& data) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

nlohmann::json envelope(const std::string& command,
                        const std::vector<std::pair<std::string, std::string>>& inputs,
                        uint64_t seed, nlohmann::json result,
                        const std::vector<std::string>& caveats) {
  nlohmann::json ins = nlohmann::json::array();
  for (const auto& [name, digest] : inputs) ins.push_back({{"name", name}, {"fnv1a64", digest}});
  return nlohmann::json{{"schema", 1},
                        {"command", command},
                        {"inputs", ins},
                        {"seed", seed},
                        {"result", std::move(result)},
                        {"caveats", caveats}};
}

nlohmann::json to_json(const PrimeVerdict& v) {
  return {{"p", v.p}, {"good", v.good}, {"reasons", v.reasons}};
}

nlohmann::json to_json(const Recipe& r) {
  nlohmann::json inertia = nlohmann::json::array();
  for (const PlacedInertia& e : r.inertia)
    inertia.push_back({{"p", e.request.p},
                       {"orbit", e.request.orbit},
                       {"multiplicity", e.request.multiplicity},
                       {"predicted_class", e.predicted_class},
                       {"residue", rat_str(e.congruence.residue)},
                       {"residue_modulus", e.congruence.modulus.get_str()}});
  nlohmann::json frob = nlohmann::json::array();
  for (const PlacedFrobenius& e : r.frobenius)
    frob.push_back({{"p", e.request.p},
                    {"class", e.request.class_label},
                    {"residue", e.residue}});
  return {{"cover", r.cover_name},
          {"theta", rat_str(r.theta)},
          {"modulus", r.modulus.get_str()},
          {"denominator", r.denominator.get_str()},
          {"inertia", inertia},
          {"frobenius", frob},
          {"excluded_u", r.excluded_u},
          {"caveats", r.caveats}};
}

nlohmann::json to_json(const InertiaPrediction& p) {
  nlohmann::json j{{"status", p.status == InertiaStatus::decided ? "decided" : "undecidable"},
                   {"notes", p.notes}};
  if (p.status == InertiaStatus::decided) {
    j["class"] = p.class_label;
    j["unramified"] = p.unramified;
    if (p.meeting_orbit) {
      j["meeting_orbit"] = *p.meeting_orbit;
      j["multiplicity"] = p.multiplicity;
    }
  }
  return j;
}

nlohmann::json to_json(const WitnessReport& w) {
  nlohmann::json j{{"p", w.p}, {"never_ramifies", w.never_ramifies}, {"notes", w.notes}};
  if (w.witness) {
    j["witness"] = w.witness->str();
    j["class"] = w.class_label;
    j["orbit"] = w.orbit;
  }
  return j;
}

nlohmann::json to_json(const DivisorReport& d) {
  return {{"primes", d.primes}, {"caveats", d.caveats}};
}

nlohmann::json to_json(const CertifyReport& c) {
  return {{"status", c.status == CertifyStatus::certified ? "certified" : "inconclusive"},
          {"t0", rat_str(c.t0)},
          {"witnessed", c.witnessed},
          {"primes_used", c.primes_used},
          {"notes", c.notes}};
}

nlohmann::json to_json(const VerifyReport& v) {
  nlohmann::json checks = nlohmann::json::array();
  for (const VerifyCheck& c : v.checks)
    checks.push_back({{"p", c.p},
                      {"kind", c.kind},
                      {"decided", c.decided},
                      {"pass", c.pass},
                      {"expected", c.expected},
                      {"observed", c.observed}});
  return {{"t0", rat_str(v.t0)},
          {"all_passed", v.all_passed},
          {"checks", checks},
          {"caveats", v.caveats}};
}

nlohmann::json to_json(const ClosureReport& c) {
  return {{"closure", c.closure}, {"outside", c.outside}, {"full", c.full}, {"notes", c.notes}};
}

nlohmann::json to_json(const HypothesisVerdict& v) {
  return {{"hypothesis", v.hypothesis == Hypothesis::inertia ? "inertia" : "branch_point"},
          {"holds", v.holds},
          {"exact", v.exact},
          {"window", v.window},
          {"witness_classes", v.witness_classes},
          {"witness_primes", v.witness_primes},
          {"modulus", v.modulus},
          {"residues", v.residues},
          {"excluded_primes", v.excluded_primes},
          {"consequence", v.consequence},
          {"notes", v.notes}};
}

nlohmann::json to_json(const CorollaryVerdict& v) {
  return {{"applies", v.applies}, {"holds", v.holds}, {"witness", v.witness}, {"notes", v.notes}};
}

nlohmann::json to_json(const AgreementReport& a) {
  nlohmann::json mm = nlohmann::json::array();
  for (const AgreementCase& c : a.mismatches)
    mm.push_back({{"p", c.p},
                  {"t0", rat_str(c.t0)},
                  {"predicted", c.predicted},
                  {"oracle", c.oracle}});
  return {{"pairs_checked", a.pairs_checked}, {"undecided", a.undecided}, {"mismatches", mm}};
}

Recipe recipe_from_json(const nlohmann::json& j) {
  try {
    const nlohmann::json& r = j.contains("result") ? j.at("result") : j;
    Recipe out;
    out.cover_name = r.at("cover").get<std::string>();
    out.theta = parse_rational(r.at("theta").get<std::string>());
    out.modulus = Int(r.at("modulus").get<std::string>());
    out.denominator = Int(r.at("denominator").get<std::string>());
    for (const nlohmann::json& e : r.at("inertia")) {
      PlacedInertia pi;
      pi.request.p = e.at("p").get<long>();
      pi.request.orbit = e.at("orbit").get<size_t>();
      pi.request.multiplicity = e.at("multiplicity").get<long>();
      pi.predicted_class = e.at("predicted_class").get<std::string>();
      pi.congruence.residue = parse_rational(e.at("residue").get<std::string>());
      pi.congruence.modulus = Int(e.at("residue_modulus").get<std::string>());
      out.inertia.push_back(std::move(pi));
    }
    for (const nlohmann::json& e : r.at("frobenius")) {
      PlacedFrobenius pf;
      pf.request.p = e.at("p").get<long>();
      pf.request.class_label = e.at("class").get<std::string>();
      pf.residue = e.at("residue").get<long>();
      pf.congruence.residue = Rat(Int(pf.residue));
      pf.congruence.modulus = Int(pf.request.p);
      out.frobenius.push_back(std::move(pf));
    }
    out.excluded_u = r.at("excluded_u").get<std::vector<long>>();
    out.caveats = r.at("caveats").get<std::vector<std::string>>();
    return out;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::invalid_input, std::string("malformed recipe: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(errc::invalid_input, std::string("malformed recipe number: ") + e.what());
  }
}

std::string tsv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += '\t';
    for (char ch : cells[i]) out += (ch == '\t' || ch == '\n') ? ' ' : ch;
  }
  out += '\n';
  return out;
}

}  // namespace ramiforge
