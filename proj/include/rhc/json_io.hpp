#pragma once

// JSON encodings of runs and reports. Rationals are strings ("1/10"),
// vertex sets are ascending integer arrays. Field names are stable.

#include "rhc/container.hpp"
#include "rhc/container_family.hpp"
#include "rhc/entropy.hpp"
#include "rhc/permutations.hpp"
#include "rhc/spectral.hpp"
#include "rhc/unionfree.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhc {

using Json = nlohmann::ordered_json;

inline Json to_json(const VertexSet& set) { return Json(set.to_vector()); }

inline VertexSet vertex_set_from_json(const Json& j, std::size_t universe) {
  if (!j.is_array()) throw std::invalid_argument("vertex set must be a JSON array");
  std::vector<Vertex> members;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw std::invalid_argument("vertex ids must be non-negative integers");
    members.push_back(v.get<Vertex>());
  }
  return VertexSet::from(universe, members);
}

/// The canonical one-line encoding of a container, shared by `contain` and
/// `reconstruct`.
inline std::string encode_container(const VertexSet& c) { return to_json(c).dump(); }

inline Json to_json(const Params& p) {
  return Json{{"eps", to_string(p.eps)}, {"s", to_string(p.s)},   {"t", to_string(p.t)}, {"N", to_string(p.N)},
              {"M", p.M},                {"tau", to_string(p.tau)}, {"z", to_string(p.z)}, {"r", p.r}};
}

inline Params params_from_json(const Json& j) {
  Params p;
  p.eps = parse_rational(j.at("eps").get<std::string>());
  p.s = parse_rational(j.at("s").get<std::string>());
  p.t = parse_rational(j.at("t").get<std::string>());
  p.N = parse_rational(j.at("N").get<std::string>());
  p.M = j.at("M").get<std::size_t>();
  p.tau = parse_rational(j.at("tau").get<std::string>());
  p.z = parse_rational(j.at("z").get<std::string>());
  p.r = j.at("r").get<unsigned>();
  return p;
}

inline Json to_json(const RunCertificate& c) {
  return Json{{"profile_ok", c.profile_ok},
              {"host_large_enough", c.host_large_enough},
              {"nice_observed", c.nice_observed},
              {"certified", c.certified()}};
}

inline RunCertificate certificate_from_json(const Json& j) {
  return RunCertificate{j.at("profile_ok").get<bool>(), j.at("host_large_enough").get<bool>(),
                        j.at("nice_observed").get<bool>()};
}

inline RunPhase phase_from_string(const std::string& s) {
  if (s == "I") return RunPhase::one;
  if (s == "II") return RunPhase::two;
  throw std::invalid_argument("phase must be \"I\" or \"II\"");
}

inline Json to_json(const TraceStep& s) {
  return Json{{"phase", to_string(s.phase)}, {"v", s.vertex},        {"in_I", s.in_set},
              {"A", s.available},            {"eL", s.link_edges}, {"degree", s.degree}};
}

inline constexpr const char* degree_rule = "head-link-edges";

inline Json to_json(const ContainerRun& run) {
  Json trace = Json::array();
  for (const auto& s : run.trace) trace.push_back(to_json(s));
  return Json{{"params", to_json(run.params)},
              {"mode", to_string(run.mode)},
              {"relaxed", run.relaxed},
              {"degree_rule", degree_rule},
              {"vertex_count", run.vertex_count},
              {"T", to_json(run.T)},
              {"T_prime", to_json(run.T_prime)},
              {"C", to_json(run.C)},
              {"final_available", run.final_available},
              {"exit_phase", to_string(run.exit_phase)},
              {"trace", trace},
              {"certificate", to_json(run.certificate)},
              {"size_guarantee", run.size_guarantee_holds()}};
}

inline ContainerRun container_run_from_json(const Json& j) {
  ContainerRun run;
  run.params = params_from_json(j.at("params"));
  run.mode = parse_mode(j.at("mode").get<std::string>());
  run.relaxed = j.at("relaxed").get<bool>();
  run.vertex_count = j.at("vertex_count").get<std::size_t>();
  run.T = vertex_set_from_json(j.at("T"), run.vertex_count);
  run.T_prime = vertex_set_from_json(j.at("T_prime"), run.vertex_count);
  run.C = vertex_set_from_json(j.at("C"), run.vertex_count);
  run.final_available = j.at("final_available").get<std::size_t>();
  run.exit_phase = phase_from_string(j.at("exit_phase").get<std::string>());
  for (const auto& s : j.at("trace"))
    run.trace.push_back(TraceStep{phase_from_string(s.at("phase").get<std::string>()), s.at("v").get<Vertex>(),
                                  s.at("in_I").get<bool>(), s.at("A").get<std::size_t>(),
                                  s.at("eL").get<std::size_t>(), s.at("degree").get<std::size_t>()});
  run.certificate = certificate_from_json(j.at("certificate"));
  return run;
}

inline Json to_json(const ContainerRecord& record) {
  Json levels = Json::array();
  for (std::size_t i = 0; i < record.levels.size(); ++i) {
    const auto& l = record.levels[i];
    levels.push_back(Json{{"host_size", l.host_size},
                          {"T", to_json(l.T)},
                          {"S", to_json(l.S)},
                          {"container_size", l.container_size},
                          {"steps", l.steps},
                          {"certificate", to_json(l.certificate)},
                          {"size_guarantee", l.size_guarantee},
                          {"fixed_host_bounds", fixed_host_fingerprint_bounds_hold(record, i)}});
  }
  return Json{{"params", to_json(record.params)},
              {"mode", to_string(record.mode)},
              {"relaxed", record.relaxed},
              {"degree_rule", degree_rule},
              {"vertex_count", record.vertex_count},
              {"status", to_string(record.status)},
              {"iterations", record.iterations()},
              {"C", to_json(record.C)},
              {"levels", levels}};
}

inline FingerprintSequence fingerprints_from_json(const Json& j, std::size_t universe) {
  FingerprintSequence out;
  for (const auto& l : j.at("levels"))
    out.emplace_back(vertex_set_from_json(l.at("T"), universe), vertex_set_from_json(l.at("S"), universe));
  return out;
}

inline Json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= BigInt(std::numeric_limits<std::int64_t>::max())) return Json(value.convert_to<std::int64_t>());
  return Json(value.str());
}

inline Json to_json(const BoundReport& b) {
  Json j{{"eps", b.eps},       {"s", b.s},         {"t", b.t},
         {"N", b.N},           {"M", b.M},         {"r", b.r},
         {"tau", b.tau},       {"beta", b.beta},   {"gamma", b.gamma},
         {"p", b.p},           {"entropy_sum", b.entropy_sum},
         {"log2_bound", b.log2_bound}, {"log2_series", b.log2_series}};
  j["log2_single_level"] = b.log2_single_level ? Json(*b.log2_single_level) : Json(nullptr);
  return j;
}

inline Json to_json(const AlphaReport& a) {
  Json j{{"n", a.n}, {"eps", a.eps}};
  j["alpha"] = a.alpha ? Json(*a.alpha) : Json(nullptr);
  j["lower_exponent"] = big_to_json(a.lower_exponent);
  j["log2_count_term"] = a.log2_count_term;
  j["log2_eps_middle"] = a.log2_eps_middle;
  j["size_exponent"] = a.size_exponent;
  j["upper_exponent"] = a.upper_exponent;
  j["holds"] = a.chain_holds;
  j["crossover_log2_n"] = a.crossover_log2_n;
  j["lower_bound_ok"] = a.lower_bound_ok;
  return j;
}

inline Json to_json(const SetFamily& f) { return Json{{"n", f.n()}, {"members", f.members()}}; }

inline Json to_json(const PermutationAudit& a) {
  Json sets = Json::array();
  for (const auto& s : a.sets) {
    Json e{{"A", s.set}, {"pairs", s.pairs}, {"bad", s.bad}, {"horrible", s.horrible}};
    e["H_A"] = s.horrible_prefixes ? Json(*s.horrible_prefixes) : Json(nullptr);
    e["alpha_A"] = s.alpha ? Json(*s.alpha) : Json(nullptr);
    sets.push_back(e);
  }
  Json j{{"n", a.n},
         {"family", to_json(a.family)},
         {"include_empty", a.rules.include_empty},
         {"horrible_gap", a.rules.horrible_gap}};
  j["delta"] = a.delta ? Json(*a.delta) : Json(nullptr);
  j["sets"] = sets;
  j["permutations"] = a.permutations;
  j["good_total"] = a.good_total;
  j["max_good_per_permutation"] = a.max_good_per_permutation;
  j["at_most_one_good"] = a.at_most_one_good;
  j["sum_within_factorial"] = a.sum_within_factorial;
  j["passed"] = a.passed();
  return j;
}

inline Json to_json(const EmlCheck& c) {
  return Json{{"holds", c.holds},
              {"subsets_checked", c.subsets_checked},
              {"worst_slack", c.worst_slack},
              {"worst_subset", c.worst_subset}};
}

}  // namespace rhc
