#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "mhx/filtration.hpp"
#include "mhx/matrix.hpp"

namespace mhx {

/// Parsed instance file: the serialized tuple (W, F, N, Gamma) plus
/// metadata. Which fields are required depends on the command; parsing
/// validates whatever is present (scalar grammar, nesting, nilpotency,
/// Gamma coefficients strictly lowering W) and reports the JSON path of the
/// first offending field.
struct InstanceDocument {
    std::string name;
    std::string coordinate;  // which cotangent reference the limits use
    std::size_t dimension = 0;
    std::optional<IncreasingFiltration> weight;
    std::optional<DecreasingFiltration> hodge;
    std::optional<Matrix> n;
    std::map<int, Matrix> gamma;
    bool has_gamma = false;  // the field was present (marks a period-map model)
    std::optional<Matrix> alpha;
};

InstanceDocument parse_instance(const std::string& text);
InstanceDocument parse_instance_json(const nlohmann::json& j);
nlohmann::json emit_instance(const InstanceDocument& doc);

// JSON forms shared by instances and reports: vectors are lists of scalar
// strings, matrices row-major lists of rows, filtrations and gradings
// objects mapping index strings to vector lists.
nlohmann::json to_json(const Vec& v);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Subspace& s);
nlohmann::json to_json(const IncreasingFiltration& w);
nlohmann::json to_json(const DecreasingFiltration& f);
nlohmann::json to_json(const Grading& y);

Vec vec_from_json(const nlohmann::json& j, std::size_t dim, const std::string& path);
Matrix matrix_from_json(const nlohmann::json& j, std::size_t dim, const std::string& path);

}  // namespace mhx
