#pragma once

// Stable text encodings: canonical JSON for exact values and index reports,
// graph exports (JSON, DOT) and the distance-matrix CSV.

#include <string>

#include "json.hpp"

#include "graphlab/exact_arith.hpp"
#include "graphlab/graph_core.hpp"
#include "graphlab/indices.hpp"
#include "graphlab/metric.hpp"

namespace graphlab {

/// Digits after the decimal point in the "approx" field and in tables.
inline constexpr unsigned kApproxDigits = 6;

/// {"kind":"integer","value":"37"}
/// {"kind":"rational","num":"47","den":"2"}
/// {"kind":"radical","terms":[{"num":..,"den":..,"radicand":1},..],"approx":"3.910645"}
nlohmann::ordered_json to_json(const IndexValue& value);

/// Inverse of to_json; "approx" is ignored. Throws std::invalid_argument on
/// malformed input, including non-canonical terms.
IndexValue index_value_from_json(const nlohmann::ordered_json& doc);

/// {"k":3,"vertices":[{"subset":[1,2],"omega":2,"value":"6"},...],"edges":[[0,1],...]}
/// "value" appears only when the graph has a prime basis.
nlohmann::ordered_json graph_to_json(const DprimeGraph& g);
/// {"n":"12","vertices":[{"value":"1"},...],"edges":[[0,1],...]}
nlohmann::ordered_json graph_to_json(const GeneralDivisorGraph& g);

std::string graph_to_dot(const DprimeGraph& g);
std::string graph_to_dot(const GeneralDivisorGraph& g);

/// Header row of vertex labels, then one row per vertex.
std::string distance_matrix_csv(const DistanceMatrix& d, const std::vector<std::string>& labels);

/// {"graph":{...},"indices":{"wiener":{...},...}}
nlohmann::ordered_json index_report_json(const nlohmann::ordered_json& graph_descriptor, const IndexReport& report);

/// Aligned text table: name, exact value, decimal approximation.
std::string index_report_table(const IndexReport& report);

}  // namespace graphlab
