#include "blocklis/report.hpp"

#include <stdexcept>

namespace blocklis::report {

json rational_json(const Rational& r) {
  json j = json::object();
  j["num"] = r.num;
  j["den"] = r.den;
  return j;
}

Rational rational_from_json(const json& j) {
  return {j.at("num").get<std::uint64_t>(), j.at("den").get<std::uint64_t>()};
}

json certificate_json(const Certificate& cert) {
  json j = json::array();
  for (const auto& [block, value] : cert) {
    j.push_back(json::array({block, value}));
  }
  return j;
}

json family_json(const InstanceFamily& family) {
  json j = json::object();
  j["kind"] = to_string(family.kind);
  j["n"] = family.n;
  j["sigma"] = family.sigma;
  j["planted_len"] = family.planted_len;
  j["seed"] = family.seed;
  return j;
}

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::invalid_argument(std::string("unknown ") + where + " key '" + key + "'");
    }
  }
}

Rational rational_field(const json& j, const char* key, Rational fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_unsigned() || v.is_number_integer()) {
    auto n = v.get<std::int64_t>();
    if (n < 0) throw std::invalid_argument(std::string("negative value for key '") + key + "'");
    return {static_cast<std::uint64_t>(n), 1};
  }
  if (v.is_number_float()) return parse_rational(v.dump());
  throw std::invalid_argument(std::string("bad value for key '") + key + "'");
}

}  // namespace

InstanceFamily family_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("family must be an object");
  reject_unknown_keys(j, {"kind", "n", "sigma", "planted_len", "seed"}, "family");
  if (!j.contains("kind")) throw std::invalid_argument("family is missing key 'kind'");
  if (!j.contains("n")) throw std::invalid_argument("family is missing key 'n'");
  InstanceFamily family;
  family.kind = family_kind_from_string(j.at("kind").get<std::string>());
  family.n = j.at("n").get<std::size_t>();
  family.sigma = j.value("sigma", std::uint32_t{1});
  family.planted_len = j.value("planted_len", std::size_t{0});
  family.seed = j.value("seed", std::uint64_t{0});
  return family;
}

SuiteConfig suite_config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("suite config must be an object");
  reject_unknown_keys(j, {"schema_version", "dp_guard", "jobs", "families", "methods"},
                      "suite config");
  SuiteConfig config;
  config.dp_guard = j.value("dp_guard", kDefaultDpGuard);
  config.jobs = j.value("jobs", 1);
  if (config.jobs < 1) throw std::invalid_argument("bad value for key 'jobs'");

  for (const json& f : j.value("families", json::array())) {
    config.families.push_back(family_from_json(f));
  }
  for (const json& m : j.value("methods", json::array())) {
    if (!m.is_object()) throw std::invalid_argument("method must be an object");
    reject_unknown_keys(m, {"name", "rate", "seed"}, "method");
    if (!m.contains("name")) throw std::invalid_argument("method is missing key 'name'");
    MethodSpec method;
    method.name = m.at("name").get<std::string>();
    if (method.name != "bounds" && method.name != "exact" && method.name != "estimate") {
      throw std::invalid_argument("bad value for key 'name': '" + method.name + "'");
    }
    method.rate = rational_field(m, "rate", {1, 1});
    if (method.rate.num == 0 || method.rate.num > method.rate.den) {
      throw std::invalid_argument("bad value for key 'rate': must be in (0, 1]");
    }
    method.seed = m.value("seed", std::uint64_t{0});
    config.methods.push_back(std::move(method));
  }
  return config;
}

json bench_record_json(const BenchRecord& record) {
  json j = json::object();
  j["schema_version"] = kSchemaVersion;
  j["record"] = "bench_cell";
  j["family"] = family_json(record.family);
  json method = json::object();
  method["name"] = record.method.name;
  if (record.method.name == "estimate") {
    method["rate"] = rational_json(record.method.rate);
    method["seed"] = record.method.seed;
  }
  j["method"] = method;
  if (record.error) {
    j["error"] = *record.error;
    return j;
  }
  j["n_x"] = record.n_x;
  j["n_y"] = record.n_y;
  j["match_count"] = record.match_count;
  j["d"] = rational_json(record.d);
  j["d_ceil"] = record.d_ceil;
  j["min_count_bound"] = record.min_count_bound;
  j["holder_bound"] = record.holder_bound;
  if (record.length) j["length"] = *record.length;
  if (record.estimate) j["estimate"] = *record.estimate;
  if (record.dp_truth) j["dp_truth"] = *record.dp_truth;
  j["bounds_only"] = record.bounds_only;
  json times = json::object();
  for (const auto& [stage, us] : record.elapsed_us) times[stage] = us;
  j["elapsed_us"] = times;
  return j;
}

std::string to_line(const json& j) { return j.dump() + "\n"; }

json parse_line(std::string_view line) { return json::parse(line); }

}  // namespace blocklis::report
