#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "legspec/cell_complex.hpp"
#include "legspec/genfam.hpp"

namespace legspec {

/// Shortest round-trip decimal form; negative zero prints as 0.
[[nodiscard]] std::string format_number(double x);

[[nodiscard]] std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

// Complexes: {"kind":"cubical_torus","dim":d,"resolution":[...]},
// {"kind":"simplicial","vertices":n,"simplices":[[...],...]} or
// {"kind":"builtin","model":"S2","resolution":1}; an optional
// "canonical_basis" list is honoured for simplicial input.
[[nodiscard]] CellComplex complex_from_json(const nlohmann::json& j, const std::string& source = "complex");
[[nodiscard]] nlohmann::json complex_to_json(const CellComplex& complex);
[[nodiscard]] CellComplex load_complex(const std::filesystem::path& path);

/// Vertex values from CSV rows `vertex_index,value` (optional header) or
/// JSON {"grid":[...]} / {"values":[...]}, row-major.
[[nodiscard]] std::vector<double> load_function(const std::filesystem::path& path, const CellComplex& complex);
[[nodiscard]] std::string function_to_csv(const std::vector<double>& values);

[[nodiscard]] GeneratingFamily family_from_json(const nlohmann::json& j, const std::string& source = "gfqi");
[[nodiscard]] nlohmann::json family_to_json(const GeneratingFamily& s);
[[nodiscard]] GeneratingFamily load_family(const std::filesystem::path& path);

/// CSV rows q1..qd,p1..pd,z with an optional header.
[[nodiscard]] FrontCloud front_from_csv(const std::string& text, const std::string& source = "front");
[[nodiscard]] std::string front_to_csv(const FrontCloud& cloud);
[[nodiscard]] FrontCloud load_front(const std::filesystem::path& path);

/// pt | fund | b<degree>:<index> | csv:<c0,c1,...> (flat coefficients over
/// degrees 0, 1, ...). Throws InputError naming the class field.
[[nodiscard]] HomologyClass parse_class(const std::string& text, const std::vector<int>& betti);
/// Comma-separated positive integers.
[[nodiscard]] std::vector<int> parse_ladder(const std::string& text);

[[nodiscard]] nlohmann::json to_json(const NontrivialityReport& report);
[[nodiscard]] nlohmann::json to_json(const Spectrum& spectrum);

// SVG output: wavefronts over a one-dimensional base in the (q, z) plane
// with p as stroke hue, and spectra as tick plots.
[[nodiscard]] std::string front_svg(const FrontCloud& cloud);
[[nodiscard]] std::string spectrum_svg(const Spectrum& spectrum);

}  // namespace legspec
