#pragma once

#include <json.hpp>

#include "mahler/fixtures.hpp"

namespace mahler {

using Json = nlohmann::ordered_json;

// Field access with a path-carrying error, so the CLI can point at the
// offending location in malformed input.
class json_path_error : public std::domain_error {
public:
    json_path_error(const std::string& path, const std::string& what)
        : std::domain_error(what + " at " + path) {}
};

Json dfao_to_json(const Dfao& d);
Dfao dfao_from_json(const Json& j, const std::string& path = "$");

Json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const Json& j, const std::string& path = "$");

Json intmatrix_to_json(const IntMatrix& m);
IntMatrix intmatrix_from_json(const Json& j, const std::string& path = "$");

Json series_to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const Json& j, const FieldPtr& field, const std::string& path = "$");

Json system_to_json(const MahlerSystem& s);
MahlerSystem system_from_json(const Json& j, const std::string& path = "$");

Json gauge_to_json(const GaugeInput& g);
GaugeInput gauge_from_json(const Json& j, const FieldPtr& field, const std::string& path = "$");

Json omega_to_json(const QuadraticIrrational& w);
QuadraticIrrational omega_from_json(const Json& j, const std::string& path = "$");

Json value_to_json(const CertifiedValue& v, size_t digits);
Json spectrum_to_json(const SpectrumReport& r);
Json hunt_result_to_json(const HuntResult& h);
Json tree_to_json(const DecompositionTree& t);
Json report_to_json(const PlannerReport& r);

std::vector<EvalItem> plan_items_from_json(const Json& j, const std::string& path = "$");

struct HuntValueSpec {
    std::string fixture;     // stream fixture name, or empty when omega given
    std::optional<QuadraticIrrational> omega;
    Rat at;
    unsigned long power = 1; // evaluate at point^power
};

struct HuntRequestSpec {
    std::vector<HuntValueSpec> values;
    long degree = 3;
    Int height = Int(10000);
    long precision = 0;
};

HuntRequestSpec hunt_request_from_json(const Json& j, const std::string& path = "$");

} // namespace mahler
