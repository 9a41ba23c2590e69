#ifndef BLOCKLIS_REPORT_HPP
#define BLOCKLIS_REPORT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "blocklis/estimator.hpp"
#include "blocklis/rational.hpp"
#include "blocklis/solver.hpp"
#include "blocklis/workbench.hpp"

namespace blocklis::report {

// Reports are line-delimited JSON with insertion-ordered fields so output is
// stable and diff-able. Rationals are {num, den} integer pairs, never floats.
using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json rational_json(const Rational& r);
Rational rational_from_json(const json& j);

json certificate_json(const Certificate& cert);

json family_json(const InstanceFamily& family);
InstanceFamily family_from_json(const json& j);

json bench_record_json(const BenchRecord& record);

// Parses one suite config document. Throws std::invalid_argument naming the
// offending key on bad input.
SuiteConfig suite_config_from_json(const json& j);

// One record per line.
std::string to_line(const json& j);
json parse_line(std::string_view line);

}  // namespace blocklis::report

#endif  // BLOCKLIS_REPORT_HPP
