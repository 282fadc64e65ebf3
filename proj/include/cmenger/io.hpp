#pragma once

#include <string>

#include "json.hpp"

#include "cmenger/solver.hpp"
#include "cmenger/testbed.hpp"

namespace cmenger {

inline constexpr int kInstanceFormatVersion = 1;

nlohmann::json instance_to_json(const Instance& inst);
/// Throws input_error on schema violations.
Instance instance_from_json(const nlohmann::json& j);

/// Canonical text: sorted keys, two-space indent, LF line ends, trailing newline.
std::string dump_canonical(const nlohmann::json& j);
std::string serialize_instance(const Instance& inst);

/// JSON instance file, or an edge list ("n m" header, then m lines "u v"; optional "S ..." / "T ..." lines).
Instance parse_instance(const std::string& text);
Instance read_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

nlohmann::json path_to_json(const Path& p);
nlohmann::json witness_to_json(const SubdivisionWitness& w);
nlohmann::json table_to_json(const ConstantTable& t);
nlohmann::json certificate_to_json(const Certificate& cert);

}  // namespace cmenger
