#ifndef WRANK_IO_HPP
#define WRANK_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "wrank/construct.hpp"
#include "wrank/matroid.hpp"
#include "wrank/setfunc.hpp"

namespace wrank {

// On-disk matroid description: the matroid plus a weight function
// (defaulting to all ones). See README for the schema.
struct MatroidFile {
    Matroid matroid;
    WeightFunction weights;
};

// Throws std::runtime_error naming the offending field.
MatroidFile parse_matroid_file(const nlohmann::json& j);
MatroidFile load_matroid_file(const std::string& path);
nlohmann::json matroid_file_json(const MatroidFile& f);

// Subset keys are lowercase hex masks zero-padded to ceil(n/4) digits, so
// ascending key order is ascending mask order.
std::string subset_key(Mask m, int n);

// Accepts a hex mask ("0x2a") or a comma-separated element list ("1,3,5").
// nullopt on malformed input or out-of-range elements.
std::optional<Mask> parse_subset(const std::string& s, int n);

nlohmann::json set_function_json(const SetFunctionVector& v);
nlohmann::json float_function_json(const FloatSetFunction& v);
nlohmann::json report_json(const VerifyReport& r, int n);

} // namespace wrank

#endif
