#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopf/analyze.hpp"
#include "hopf/betti.hpp"
#include "hopf/json_io.hpp"
#include "hopf/linsys.hpp"
#include "hopf/survey.hpp"
#include "hopf/verify.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

/* flag > environment > default */
std::uint64_t seed_from_env() {
  const char* env = std::getenv("HOPF_SPECTRA_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  std::string s(env);
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed HOPF_SPECTRA_SEED: " + s);
  }
  if (pos != s.size()) throw std::invalid_argument("malformed HOPF_SPECTRA_SEED: " + s);
  return v;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer in list: " + item);
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw std::invalid_argument("malformed integer in list: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

hopf::BettiVector parse_betti(const std::string& text) {
  hopf::BettiVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in betti list");
    try {
      out.emplace_back(item.substr(b, e - b + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed betti entry: " + item);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty betti list");
  return out;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + ex.what());
  }
  return j;
}

int to_internal_theta(int one_based) {
  if (one_based < 1 || one_based > 4)
    throw std::invalid_argument("theta indices are 1-based: expected 1..4");
  return one_based - 1;
}

nlohmann::json int_to_json(const hopf::Int& v) {
  static const hopf::Int lo = std::numeric_limits<long long>::min();
  static const hopf::Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of bidegree (n,1) curve pencils and their double covers"};
  app.require_subcommand(1);
  int exit_code = 0;

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full report for one curve from a JSON file");
  std::string curve_file, thetas_file;
  analyze->add_option("--curve", curve_file, "curve JSON: {\"n\", \"P\", \"Q\"}")->required();
  analyze->add_option("--thetas", thetas_file, "theta config JSON (default: [1:0],[0:1],[1:1],[1:-1])");
  analyze->callback([&] {
    hopf::GraphCurve d = hopf::curve_from_json(load_json(curve_file));
    if (thetas_file.empty())
      emit(hopf::analyze_report(d));
    else
      emit(hopf::analyze_report(d, hopf::thetas_from_json(load_json(thetas_file))));
  });

  // construct
  auto* construct = app.add_subcommand("construct", "build a witness curve in a prescribed stratum");
  construct->require_subcommand(1);
  int cn = 0;
  std::uint64_t seed_flag = 0;

  auto* cprofile = construct->add_subcommand("profile", "prescribed restricted profile on one line");
  int ctheta = 1;
  std::string profile_list;
  cprofile->add_option("--n", cn, "curve bidegree (n,1)")->required();
  cprofile->add_option("--theta", ctheta, "line index, 1-based")->required();
  cprofile->add_option("--profile", profile_list, "comma list of multiplicities >= 2, e.g. \"2,2\"")->required();
  auto* cprofile_seed = cprofile->add_option("--seed", seed_flag, "RNG seed");
  cprofile->callback([&] {
    std::uint64_t seed = cprofile_seed->count() ? seed_flag : seed_from_env();
    emit(hopf::construction_json(hopf::construct_profile_stratum(
        to_internal_theta(ctheta), parse_int_list(profile_list), cn, seed)));
  });

  auto* ctangency = construct->add_subcommand("tangency", "simple tangency on each listed line");
  std::string pattern_list;
  ctangency->add_option("--n", cn, "curve bidegree (n,1)")->required();
  ctangency->add_option("--pattern", pattern_list, "comma list of 1-based line indices, e.g. \"1,2\"")->required();
  auto* ctangency_seed = ctangency->add_option("--seed", seed_flag, "RNG seed");
  ctangency->callback([&] {
    std::uint64_t seed = ctangency_seed->count() ? seed_flag : seed_from_env();
    std::vector<int> pattern;
    for (int i : parse_int_list(pattern_list)) pattern.push_back(to_internal_theta(i));
    emit(hopf::construction_json(hopf::construct_tangency_stratum(pattern, cn, seed)));
  });

  auto* cmax = construct->add_subcommand("maxweight", "full contact on two lines (weight 2n-2)");
  int ci1 = 1, ci2 = 2;
  cmax->add_option("--n", cn, "curve bidegree (n,1)")->required();
  cmax->add_option("--i1", ci1, "first line index, 1-based")->required();
  cmax->add_option("--i2", ci2, "second line index, 1-based")->required();
  auto* cmax_seed = cmax->add_option("--seed", seed_flag, "RNG seed");
  cmax->callback([&] {
    std::uint64_t seed = cmax_seed->count() ? seed_flag : seed_from_env();
    emit(hopf::construction_json(hopf::construct_max_weight(
        to_internal_theta(ci1), to_internal_theta(ci2), cn, seed)));
  });

  // survey
  auto* survey = app.add_subcommand("survey", "randomized sweep: smoothness, weights, genericity");
  int sn = 0, ssamples = 0;
  long sbound = 100;
  bool scsv = false;
  survey->add_option("--n", sn, "curve bidegree (n,1)")->required();
  survey->add_option("--samples", ssamples, "number of random curves")->required();
  survey->add_option("--bound", sbound, "coefficient bound (default 100)");
  auto* survey_seed = survey->add_option("--seed", seed_flag, "RNG seed");
  survey->add_flag("--csv", scsv, "emit the fixed-column CSV instead of JSON");
  survey->callback([&] {
    std::uint64_t seed = survey_seed->count() ? seed_flag : seed_from_env();
    hopf::SurveyStats s = hopf::run_survey(sn, ssamples, sbound, seed);
    if (scsv)
      std::cout << hopf::survey_csv(s);
    else
      emit(hopf::survey_json(s));
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run every property suite over a range of n");
  int vmin = 2, vmax = 2;
  verify->add_option("--n-min", vmin, "smallest n (>= 2)")->required();
  verify->add_option("--n-max", vmax, "largest n")->required();
  auto* verify_seed = verify->add_option("--seed", seed_flag, "RNG seed");
  verify->callback([&] {
    std::uint64_t seed = verify_seed->count() ? seed_flag : seed_from_env();
    hopf::VerifyReport rep = hopf::run_verify(vmin, vmax, seed);
    emit(hopf::verify_json(rep));
    exit_code = rep.all_passed ? 0 : 1;
  });

  // betti
  auto* betti = app.add_subcommand("betti", "convolve a Betti vector with the torus row C(4n-2,k)");
  int bn = 0;
  std::string betti_list;
  betti->add_option("--n", bn, "curve bidegree (n,1)")->required();
  betti->add_option("--betti-a", betti_list, "comma list b0,b1,... supported in degrees <= 2n+1")->required();
  betti->callback([&] {
    hopf::BettiVector a = parse_betti(betti_list);
    hopf::BettiVector out = hopf::betti_regular_locus(bn, a);
    nlohmann::json j;
    j["n"] = bn;
    nlohmann::json ja = nlohmann::json::array(), jo = nlohmann::json::array();
    for (const auto& x : a) ja.push_back(int_to_json(x));
    for (const auto& x : out) jo.push_back(int_to_json(x));
    j["betti_a"] = ja;
    j["betti_regular"] = jo;
    emit(j);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
