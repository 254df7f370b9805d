#pragma once

#include <chromgh/cech.hpp>
#include <chromgh/constraints.hpp>
#include <chromgh/metric.hpp>
#include <chromgh/persistence.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace chromgh::io {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

// Infinite values are written as the string "inf".
json number(double v);
double parse_number(const json& v);

ChromaticPair parse_pair_text(std::string_view text);
ChromaticPair parse_pair(const std::filesystem::path& path);
json pair_to_json(const ChromaticPair& pair);

// Rows of coordinates; a header naming a "color" column marks colored rows.
ChromaticPair parse_csv_text(std::string_view text, Norm norm = Norm::Euclidean);

ConstraintSpec parse_constraints_text(std::string_view text);
json constraints_to_json(const ConstraintSet& c);

ComplexSpec parse_complex_text(std::string_view text);
json complex_to_json(const ComplexSpec& c);

PersistenceDiagram parse_diagram_text(std::string_view text);
json diagram_to_json(const PersistenceDiagram& d);

json filtration_to_json(const Filtration& f);
json color_set_to_json(const ColorSet& s);

// Pretty-printed with a trailing newline.
std::string dump(const json& j);

}  // namespace chromgh::io
