// Serialization of analysis results and quotient graphs: canonical JSON,
// aligned key/value tables, TSV with flattened keys, and dot graphs.
#ifndef FQT_REPORT_HPP
#define FQT_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "fqt/homology.hpp"
#include "json.hpp"

namespace fqt {

// Schema version "1".  Places in canonical order (field enumeration, then
// infinity); all keys in fixed order so output is byte-stable.
nlohmann::ordered_json analysis_record(const FieldCtx& F, const AnalysisReport& rep,
                                       bool class_verified);

// Depth-first flattening with dotted keys; array elements use their index.
// Values are rendered as JSON literals.
std::vector<std::pair<std::string, std::string>> flatten_record(const nlohmann::ordered_json& rec);

std::string render_json(const nlohmann::ordered_json& rec);
std::string render_table(const nlohmann::ordered_json& rec);
std::string render_tsv(const nlohmann::ordered_json& rec);

nlohmann::ordered_json graph_record(const FieldCtx& F, const ConductorShape& shape,
                                    const QuotientGraph& g);
std::string graph_dot(const QuotientGraph& g);

}  // namespace fqt

#endif
