#include "ramiforge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramiforge/report.hpp"

namespace ramiforge {

namespace {

struct LoadedFile {
  std::string path;
  std::string text;
  std::string digest;
};

LoadedFile slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_input, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  std::string digest = fnv1a64(text);
  return {path, std::move(text), std::move(digest)};
}

struct LoadedCover {
  CoverData cover;
  std::string path;
  std::string digest;
};

LoadedCover load(const std::string& path) {
  LoadedFile f = slurp(path);
  return {load_cover_json(f.text), f.path, f.digest};
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(errc::invalid_input, "cannot parse " + what + " from '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

InertiaRequest parse_inertia_spec(const std::string& s) {
  std::vector<std::string> parts = split(s, ':');
  if (parts.size() != 3)
    fail(errc::invalid_input, "--ramified wants P:ORBIT:MULTIPLICITY, got '" + s + "'");
  InertiaRequest r;
  r.p = parse_long(parts[0], "prime");
  long orbit = parse_long(parts[1], "orbit index");
  if (orbit < 0) fail(errc::invalid_input, "orbit index must be nonnegative");
  r.orbit = static_cast<size_t>(orbit);
  r.multiplicity = parse_long(parts[2], "multiplicity");
  return r;
}

FrobeniusRequest parse_frobenius_spec(const std::string& s) {
  size_t colon = s.find(':');
  if (colon == std::string::npos || colon + 1 == s.size())
    fail(errc::invalid_input, "--frobenius wants P:CLASS, got '" + s + "'");
  FrobeniusRequest r;
  r.p = parse_long(s.substr(0, colon), "prime");
  r.class_label = s.substr(colon + 1);
  return r;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const std::string& s : parts) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

Rat parse_finite_point(const std::string& s, const std::string& what) {
  ParsedPoint pp = parse_point(s);
  if (pp.infinite) fail(errc::invalid_input, what + " must be a finite rational point");
  return pp.value;
}

}  // namespace

int exit_code_for(errc kind) {
  switch (kind) {
    case errc::invalid_input:
    case errc::capability:
      return 2;
    case errc::verification:
      return 3;
    case errc::internal:
      return 1;
  }
  return 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact specialization toolkit for branched covers of the projective line"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  if (const char* env = std::getenv("RAMIFORGE_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      seed = 0;
    }
  }
  app.add_option("--seed", seed, "seed for randomized modular factorization")
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify-primes", "good/bad classification of primes");
  std::string classify_cover;
  long classify_bound = 100;
  bool classify_tsv = false;
  classify->fallthrough();
  classify->add_option("cover", classify_cover, "cover JSON file")->required();
  classify->add_option("--up-to", classify_bound, "scan primes up to this bound")
      ->capture_default_str();
  classify->add_flag("--tsv", classify_tsv, "tab-separated output instead of JSON");

  auto* divisors = app.add_subcommand(
      "divisors", "primes at which some specialization can meet a branch orbit");
  std::string divisors_cover;
  long divisors_bound = 100;
  divisors->fallthrough();
  divisors->add_option("cover", divisors_cover, "cover JSON file")->required();
  divisors->add_option("--up-to", divisors_bound, "scan primes up to this bound")
      ->capture_default_str();

  auto* witness = app.add_subcommand(
      "witness", "ramified specialization point at a good prime, or a proof none exists");
  std::string witness_cover;
  long witness_p = 0;
  witness->fallthrough();
  witness->add_option("cover", witness_cover, "cover JSON file")->required();
  witness->add_option("-p,--prime", witness_p, "good prime")->required();

  auto* prescribe = app.add_subcommand(
      "prescribe", "specialization points with prescribed inertia and Frobenius data");
  std::string prescribe_cover;
  std::vector<std::string> prescribe_ram, prescribe_frob;
  prescribe->fallthrough();
  prescribe->add_option("cover", prescribe_cover, "cover JSON file")->required();
  prescribe->add_option("--ramified", prescribe_ram,
                        "P:ORBIT:MULTIPLICITY, inertia (orbit class)^MULTIPLICITY at P");
  prescribe->add_option("--frobenius", prescribe_frob,
                        "P:CLASS, unramified with this Frobenius class");

  auto* predict = app.add_subcommand(
      "predict", "inertia class of the specialization at t0 and a good prime");
  std::string predict_cover, predict_t0;
  long predict_p = 0;
  predict->fallthrough();
  predict->add_option("cover", predict_cover, "cover JSON file")->required();
  predict->add_option("--prime", predict_p, "good prime")->required();
  predict->add_option("--point", predict_t0, "rational point: n, n/d, or inf")->required();

  auto* verify = app.add_subcommand(
      "verify", "replay a prescription recipe through independent checks");
  std::string verify_cover, verify_recipe_path;
  long verify_samples = 5;
  bool verify_tsv = false;
  verify->fallthrough();
  verify->add_option("cover", verify_cover, "cover JSON file")->required();
  verify->add_option("--recipe", verify_recipe_path, "recipe JSON file, as written by prescribe")
      ->required();
  verify->add_option("--samples", verify_samples, "number of specialization points to replay")
      ->capture_default_str();
  verify->add_flag("--tsv", verify_tsv, "tab-separated check table instead of JSON");

  auto* param = app.add_subcommand(
      "parametricity",
      "obstructions showing specializations of the first cover that the second cover misses");
  std::string param_first, param_second;
  long param_window = 200;
  param->fallthrough();
  param->add_option("cover1", param_first, "cover whose specializations are prescribed")
      ->required();
  param->add_option("cover2", param_second, "cover that must reproduce them")->required();
  param->add_option("--window", param_window, "prime window for scans")->capture_default_str();

  auto* certify = app.add_subcommand(
      "group-certify", "check the claimed group against substitution patterns at one point");
  std::string certify_cover, certify_point;
  long certify_budget = 200;
  certify->fallthrough();
  certify->add_option("cover", certify_cover, "cover JSON file")->required();
  certify->add_option("--point", certify_point, "finite rational specialization point")
      ->required();
  certify->add_option("--budget", certify_budget, "scan primes up to this bound")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (app.got_subcommand(classify)) {
      LoadedCover lc = load(classify_cover);
      std::vector<PrimeVerdict> vs = classify_window(lc.cover, classify_bound);
      if (classify_tsv) {
        out << tsv_row({"p", "verdict", "reasons"});
        for (const PrimeVerdict& v : vs)
          out << tsv_row({std::to_string(v.p), v.good ? "good" : "bad", join(v.reasons, "; ")});
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const PrimeVerdict& v : vs) arr.push_back(to_json(v));
        emit(out, envelope("classify-primes", {{lc.path, lc.digest}}, seed,
                           {{"up_to", classify_bound}, {"verdicts", arr}}, lc.cover.caveats));
      }
      return 0;
    }

    if (app.got_subcommand(divisors)) {
      LoadedCover lc = load(divisors_cover);
      DivisorReport rep = ramifiable_primes(lc.cover, divisors_bound);
      std::vector<std::string> caveats = lc.cover.caveats;
      caveats.insert(caveats.end(), rep.caveats.begin(), rep.caveats.end());
      emit(out, envelope("divisors", {{lc.path, lc.digest}}, seed,
                         {{"up_to", divisors_bound}, {"primes", rep.primes}}, caveats));
      return 0;
    }

    if (app.got_subcommand(witness)) {
      LoadedCover lc = load(witness_cover);
      WitnessReport rep = ramification_witness(lc.cover, witness_p);
      emit(out,
           envelope("witness", {{lc.path, lc.digest}}, seed, to_json(rep), lc.cover.caveats));
      return 0;
    }

    if (app.got_subcommand(prescribe)) {
      LoadedCover lc = load(prescribe_cover);
      std::vector<InertiaRequest> irs;
      std::vector<FrobeniusRequest> frs;
      for (const std::string& s : prescribe_ram) irs.push_back(parse_inertia_spec(s));
      for (const std::string& s : prescribe_frob) frs.push_back(parse_frobenius_spec(s));
      Recipe recipe = build_recipe(lc.cover, irs, frs, seed);
      nlohmann::json result = to_json(recipe);
      nlohmann::json points = nlohmann::json::array();
      long u = first_valid_u(recipe);
      for (int k = 0; k < 3; ++u) {
        if (std::count(recipe.excluded_u.begin(), recipe.excluded_u.end(), u)) continue;
        points.push_back({{"u", u}, {"t0", rat_str(recipe_point(recipe, u))}});
        ++k;
      }
      result["sample_points"] = points;
      emit(out, envelope("prescribe", {{lc.path, lc.digest}}, seed, result, recipe.caveats));
      return 0;
    }

    if (app.got_subcommand(predict)) {
      LoadedCover lc = load(predict_cover);
      ParsedPoint pp = parse_point(predict_t0);
      PointP1 t0 = pp.infinite ? PointP1::infinity() : PointP1::finite(pp.value);
      InertiaPrediction rep = predict_inertia(lc.cover, predict_p, t0);
      emit(out,
           envelope("predict", {{lc.path, lc.digest}}, seed, to_json(rep), lc.cover.caveats));
      return 0;
    }

    if (app.got_subcommand(verify)) {
      LoadedCover lc = load(verify_cover);
      LoadedFile rf = slurp(verify_recipe_path);
      nlohmann::json rj;
      try {
        rj = nlohmann::json::parse(rf.text);
      } catch (const nlohmann::json::parse_error& e) {
        fail(errc::invalid_input, std::string("recipe file is not JSON: ") + e.what());
      }
      Recipe recipe = recipe_from_json(rj);
      if (recipe.cover_name != lc.cover.name)
        fail(errc::invalid_input, "recipe was built for cover '" + recipe.cover_name +
                                      "', not '" + lc.cover.name + "'");
      if (verify_samples < 1) fail(errc::invalid_input, "--samples must be at least 1");

      std::vector<VerifyReport> rows;
      std::vector<long> us;
      bool all_passed = true;
      for (long u = first_valid_u(recipe); static_cast<long>(rows.size()) < verify_samples;
           ++u) {
        if (std::count(recipe.excluded_u.begin(), recipe.excluded_u.end(), u)) continue;
        rows.push_back(verify_recipe(lc.cover, recipe, u));
        us.push_back(u);
        all_passed = all_passed && rows.back().all_passed;
      }

      if (verify_tsv) {
        out << tsv_row({"u", "t0", "p", "check", "decided", "pass", "expected", "observed"});
        for (size_t i = 0; i < rows.size(); ++i)
          for (const VerifyCheck& c : rows[i].checks)
            out << tsv_row({std::to_string(us[i]), rat_str(rows[i].t0), std::to_string(c.p),
                            c.kind, c.decided ? "yes" : "no", c.pass ? "pass" : "fail",
                            c.expected, c.observed});
      } else {
        nlohmann::json table = nlohmann::json::array();
        std::vector<std::string> caveats;
        for (size_t i = 0; i < rows.size(); ++i) {
          nlohmann::json row = to_json(rows[i]);
          row["u"] = us[i];
          table.push_back(std::move(row));
          for (const std::string& c : rows[i].caveats)
            if (!std::count(caveats.begin(), caveats.end(), c)) caveats.push_back(c);
        }
        emit(out, envelope("verify", {{lc.path, lc.digest}, {rf.path, rf.digest}}, seed,
                           {{"samples", verify_samples},
                            {"all_passed", all_passed},
                            {"rows", table}},
                           caveats));
      }
      if (!all_passed) {
        err << "verification failed\n";
        return 3;
      }
      return 0;
    }

    if (app.got_subcommand(param)) {
      LoadedCover c1 = load(param_first);
      LoadedCover c2 = load(param_second);
      nlohmann::json result;
      try {
        result["inertia"] = to_json(check_inertia_hypothesis(c1.cover, c2.cover));
      } catch (const error& e) {
        if (e.kind() == errc::internal) throw;
        result["inertia"] = {{"applies", false}, {"note", e.what()}};
      }
      result["branch_point"] =
          to_json(check_branch_point_hypothesis(c1.cover, c2.cover, param_window));
      result["four_branch"] = to_json(check_four_branch(c2.cover));
      result["symmetric_shape"] = to_json(check_symmetric_shape(c2.cover));
      result["closure"] = to_json(inertia_closure(c2.cover));
      std::vector<std::string> caveats = c1.cover.caveats;
      for (const std::string& c : c2.cover.caveats)
        if (!std::count(caveats.begin(), caveats.end(), c)) caveats.push_back(c);
      emit(out, envelope("parametricity", {{c1.path, c1.digest}, {c2.path, c2.digest}}, seed,
                         result, caveats));
      return 0;
    }

    if (app.got_subcommand(certify)) {
      LoadedCover lc = load(certify_cover);
      Rat t0 = parse_finite_point(certify_point, "--point");
      CertifyReport rep = certify_group(lc.cover, t0, certify_budget);
      emit(out, envelope("group-certify", {{lc.path, lc.digest}}, seed, to_json(rep),
                         lc.cover.caveats));
      return 0;
    }

    err << "no subcommand selected\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ramiforge
