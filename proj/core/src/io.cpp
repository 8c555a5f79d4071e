#include "legspec/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "legspec/builtins.hpp"
#include "legspec/errors.hpp"

namespace legspec {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& message) {
  throw InputError(source + ": field '" + field + "': " + message);
}

const json& require(const json& j, const std::string& source, const std::string& name) {
  if (!j.is_object()) throw InputError(source + ": expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) fail(source, name, "missing");
  return *it;
}

long as_integer(const json& v, const std::string& source, const std::string& name) {
  if (!v.is_number_integer()) fail(source, name, "expected an integer");
  return v.get<long>();
}

double as_real(const json& v, const std::string& source, const std::string& name) {
  if (!v.is_number()) fail(source, name, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(source, name, "not finite");
  return x;
}

void flatten_numbers(const json& v, const std::string& source, const std::string& name, std::vector<double>& out) {
  if (v.is_array()) {
    for (const auto& e : v) flatten_numbers(e, source, name, out);
    return;
  }
  if (!v.is_number()) fail(source, name + "[" + std::to_string(out.size()) + "]", "expected a number");
  out.push_back(v.get<double>());
}

std::vector<int> int_list(const json& v, const std::string& source, const std::string& name) {
  std::vector<int> out;
  if (v.is_number_integer()) {
    out.push_back(v.get<int>());
    return out;
  }
  if (!v.is_array()) fail(source, name, "expected an integer or a list of integers");
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(static_cast<int>(as_integer(v[i], source, name + "[" + std::to_string(i) + "]")));
  }
  return out;
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON: " + e.what());
  }
}

std::vector<int> torus_resolution(const json& j, const std::string& source) {
  const auto& kind = require(j, source, "kind");
  if (!kind.is_string() || kind.get<std::string>() != "cubical_torus") {
    fail(source, "kind", "expected \"cubical_torus\"");
  }
  const long dim = as_integer(require(j, source, "dim"), source, "dim");
  auto res = int_list(require(j, source, "resolution"), source, "resolution");
  if (res.size() == 1 && dim > 1) res.assign(static_cast<std::size_t>(dim), res[0]);
  if (static_cast<long>(res.size()) != dim) fail(source, "resolution", "needs one entry per axis");
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (res[i] < 3) fail(source, "resolution[" + std::to_string(i) + "]", "must be at least 3");
  }
  return res;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool parse_double(const std::string& text, double& out) {
  const auto t = trim(text);
  if (t.empty()) return false;
  const char* first = t.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    rows.push_back(split(trim(line), ','));
  }
  return rows;
}

bool numeric_row(const std::vector<std::string>& row) {
  double x = 0;
  for (const auto& c : row) {
    if (!parse_double(c, x)) return false;
  }
  return true;
}

}  // namespace

std::string format_number(double x) {
  if (x == 0) x = 0;  // drops the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot be read");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string() + ": cannot be written");
  out << text;
}

// ---------------------------------------------------------------- complexes

CellComplex complex_from_json(const json& j, const std::string& source) {
  const auto& kind_field = require(j, source, "kind");
  if (!kind_field.is_string()) fail(source, "kind", "expected a string");
  const auto kind = kind_field.get<std::string>();
  if (kind == "builtin") {
    const auto& model = require(j, source, "model");
    if (!model.is_string()) fail(source, "model", "expected a string");
    const auto id = model.get<std::string>();
    const int res = j.contains("resolution") ? static_cast<int>(as_integer(j["resolution"], source, "resolution"))
                                             : default_resolution(id);
    return builtin(id, res);
  }
  if (kind == "cubical_torus") {
    const auto res = torus_resolution(j, source);
    if (res.empty() || res.size() > 3) fail(source, "dim", "must be 1, 2 or 3");
    return CellComplex(CubicalGrid::torus(res), "T" + std::to_string(res.size()));
  }
  if (kind != "simplicial") fail(source, "kind", "expected \"cubical_torus\", \"simplicial\" or \"builtin\"");

  const long n = as_integer(require(j, source, "vertices"), source, "vertices");
  if (n < 1) fail(source, "vertices", "must be positive");
  const auto& simplices_json = require(j, source, "simplices");
  if (!simplices_json.is_array()) fail(source, "simplices", "expected a list of vertex lists");
  std::vector<std::vector<int>> simplices;
  for (std::size_t s = 0; s < simplices_json.size(); ++s) {
    simplices.push_back(int_list(simplices_json[s], source, "simplices[" + std::to_string(s) + "]"));
  }
  auto sc = SimplicialComplex::from_simplices(static_cast<int>(n), simplices);
  if (!j.contains("canonical_basis")) return CellComplex(std::move(sc), "simplicial");

  const auto& basis = j["canonical_basis"];
  if (!basis.is_array()) fail(source, "canonical_basis", "expected a list");
  std::vector<std::vector<Chain>> cycles(sc.dimension() + 1);
  std::vector<std::vector<std::string>> labels(sc.dimension() + 1);
  for (std::size_t e = 0; e < basis.size(); ++e) {
    const std::string name = "canonical_basis[" + std::to_string(e) + "]";
    const long d = as_integer(require(basis[e], source, "degree"), source, name + ".degree");
    if (d < 0 || d > sc.dimension()) fail(source, name + ".degree", "out of range");
    const auto& cycle = require(basis[e], source, "cycle");
    if (!cycle.is_array()) fail(source, name + ".cycle", "expected a list of simplices");
    Chain chain;
    for (std::size_t c = 0; c < cycle.size(); ++c) {
      auto verts = int_list(cycle[c], source, name + ".cycle[" + std::to_string(c) + "]");
      std::sort(verts.begin(), verts.end());
      const auto cell = sc.find(verts);
      if (!cell || static_cast<long>(verts.size()) != d + 1) {
        fail(source, name + ".cycle[" + std::to_string(c) + "]", "not a simplex of the stated degree");
      }
      chain = add(chain, Chain{static_cast<std::uint32_t>(*cell)});
    }
    cycles[d].push_back(std::move(chain));
    const auto label = basis[e].value("label", "b" + std::to_string(d) + ":" + std::to_string(cycles[d].size() - 1));
    labels[d].push_back(label);
  }
  return CellComplex(std::move(sc), std::move(cycles), std::move(labels), "simplicial");
}

json complex_to_json(const CellComplex& complex) {
  json j;
  const auto& basis = complex.basis();
  json entries = json::array();
  if (const auto* grid = complex.cubical()) {
    j["kind"] = "cubical_torus";
    j["dim"] = grid->axes();
    j["resolution"] = grid->resolution();
    std::vector<int> y(grid->axes());
    for (std::size_t d = 0; d < basis.cycles.size(); ++d) {
      for (std::size_t i = 0; i < basis.cycles[d].size(); ++i) {
        json cells = json::array();
        for (auto c : basis.cycles[d][i]) {
          grid->coordinates(c, y);
          cells.push_back(y);
        }
        entries.push_back({{"degree", d}, {"index", i}, {"label", basis.labels[d][i]}, {"cells", cells}});
      }
    }
    j["canonical_basis"] = entries;
    return j;
  }
  const auto& sc = *complex.simplicial();
  j["kind"] = "simplicial";
  j["vertices"] = sc.vertex_count();
  j["simplices"] = sc.maximal_simplices();
  for (std::size_t d = 0; d < basis.cycles.size(); ++d) {
    for (std::size_t i = 0; i < basis.cycles[d].size(); ++i) {
      json cells = json::array();
      for (auto c : basis.cycles[d][i]) cells.push_back(sc.vertices(c));
      entries.push_back({{"degree", d}, {"index", i}, {"label", basis.labels[d][i]}, {"cycle", cells}});
    }
  }
  j["canonical_basis"] = entries;
  return j;
}

CellComplex load_complex(const std::filesystem::path& path) {
  return complex_from_json(parse_json(read_text(path), path.string()), path.string());
}

// ---------------------------------------------------------------- functions

std::vector<double> load_function(const std::filesystem::path& path, const CellComplex& complex) {
  const auto source = path.string();
  const auto text = read_text(path);
  const auto n = complex.vertex_count();
  std::vector<double> values;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const auto j = parse_json(text, source);
    const char* name = j.contains("grid") ? "grid" : "values";
    flatten_numbers(require(j, source, name), source, name, values);
    if (values.size() != n) {
      fail(source, name, "expected " + std::to_string(n) + " vertex values, got " + std::to_string(values.size()));
    }
    return values;
  }
  auto rows = csv_rows(text);
  if (!rows.empty() && !numeric_row(rows.front())) rows.erase(rows.begin());
  values.assign(n, std::nan(""));
  std::vector<std::uint8_t> seen(n, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = "row " + std::to_string(r + 1);
    double index = 0;
    double value = 0;
    if (rows[r].size() != 2 || !parse_double(rows[r][0], index) || !parse_double(rows[r][1], value)) {
      fail(source, where, "expected vertex_index,value");
    }
    if (index < 0 || index != std::floor(index) || index >= static_cast<double>(n)) {
      fail(source, where, "vertex_index out of range");
    }
    const auto v = static_cast<std::size_t>(index);
    if (seen[v]) fail(source, where, "vertex " + std::to_string(v) + " given twice");
    seen[v] = 1;
    values[v] = value;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) fail(source, "vertex_index", "no value for vertex " + std::to_string(v));
  }
  return values;
}

std::string function_to_csv(const std::vector<double>& values) {
  std::string out = "vertex_index,value\n";
  for (std::size_t v = 0; v < values.size(); ++v) out += std::to_string(v) + "," + format_number(values[v]) + "\n";
  return out;
}

// ---------------------------------------------------------------- families

GeneratingFamily family_from_json(const json& j, const std::string& source) {
  const auto& base = require(j, source, "base");
  const auto res = torus_resolution(base, source + ": base");
  const long k = as_integer(require(j, source, "fiber_dim"), source, "fiber_dim");
  const long m = j.contains("fiber_resolution") ? as_integer(j["fiber_resolution"], source, "fiber_resolution")
                                                : (k == 0 ? 3 : as_integer(require(j, source, "fiber_resolution"),
                                                                            source, "fiber_resolution"));
  const double radius = j.contains("fiber_box_radius") ? as_real(j["fiber_box_radius"], source, "fiber_box_radius")
                                                       : (k == 0 ? 1.0 : as_real(require(j, source, "fiber_box_radius"),
                                                                                 source, "fiber_box_radius"));
  const auto sig = int_list(require(j, source, "signature"), source, "signature");
  if (sig.size() != 2) fail(source, "signature", "expected [i_minus, i_plus]");
  const double tol = as_real(require(j, source, "boundary_tolerance"), source, "boundary_tolerance");
  std::vector<double> values;
  flatten_numbers(require(j, source, "values"), source, "values", values);
  try {
    return GeneratingFamily(res, static_cast<int>(k), static_cast<int>(m), radius, Signature{sig[0], sig[1]}, tol,
                            std::move(values));
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

json family_to_json(const GeneratingFamily& s) {
  json j;
  j["base"] = {{"kind", "cubical_torus"}, {"dim", s.base_dim()}, {"resolution", s.base_resolution()}};
  j["fiber_dim"] = s.fiber_dim();
  j["fiber_resolution"] = s.fiber_resolution();
  j["fiber_box_radius"] = s.radius();
  j["signature"] = {s.signature().negative, s.signature().positive};
  j["boundary_tolerance"] = s.boundary_tolerance();
  j["values"] = s.values();
  return j;
}

GeneratingFamily load_family(const std::filesystem::path& path) {
  return family_from_json(parse_json(read_text(path), path.string()), path.string());
}

// ---------------------------------------------------------------- fronts

FrontCloud front_from_csv(const std::string& text, const std::string& source) {
  auto rows = csv_rows(text);
  if (!rows.empty() && !numeric_row(rows.front())) rows.erase(rows.begin());
  if (rows.empty()) throw InputError(source + ": no points");
  const std::size_t width = rows.front().size();
  if (width < 3 || width % 2 == 0) fail(source, "columns", "expected q1..qd,p1..pd,z");
  FrontCloud cloud;
  cloud.base_dim = static_cast<int>((width - 1) / 2);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = "row " + std::to_string(r + 1);
    if (rows[r].size() != width) fail(source, where, "expected " + std::to_string(width) + " columns");
    std::vector<double> x(width);
    for (std::size_t c = 0; c < width; ++c) {
      if (!parse_double(rows[r][c], x[c]) || !std::isfinite(x[c])) fail(source, where, "non-numeric entry");
    }
    FrontPoint pt;
    pt.q.assign(x.begin(), x.begin() + cloud.base_dim);
    pt.p.assign(x.begin() + cloud.base_dim, x.begin() + 2 * cloud.base_dim);
    pt.z = x.back();
    cloud.points.push_back(std::move(pt));
  }
  return cloud;
}

std::string front_to_csv(const FrontCloud& cloud) {
  std::string out;
  for (int i = 0; i < cloud.base_dim; ++i) out += "q" + std::to_string(i + 1) + ",";
  for (int i = 0; i < cloud.base_dim; ++i) out += "p" + std::to_string(i + 1) + ",";
  out += "z\n";
  for (const auto& pt : cloud.points) {
    for (double v : pt.q) out += format_number(v) + ",";
    for (double v : pt.p) out += format_number(v) + ",";
    out += format_number(pt.z) + "\n";
  }
  return out;
}

FrontCloud load_front(const std::filesystem::path& path) {
  return front_from_csv(read_text(path), path.string());
}

// ---------------------------------------------------------------- flags

HomologyClass parse_class(const std::string& text, const std::vector<int>& betti) {
  if (text == "pt") return HomologyClass::point(betti);
  if (text == "fund") return HomologyClass::fundamental(betti);
  if (text.rfind("csv:", 0) == 0) {
    std::vector<std::uint8_t> flat;
    for (const auto& part : split(text.substr(4), ',')) {
      const auto t = trim(part);
      if (t != "0" && t != "1") throw InputError("class: csv coefficients must be 0 or 1");
      flat.push_back(t == "1" ? 1 : 0);
    }
    auto cls = HomologyClass::from_flat(betti, flat);
    if (cls.is_zero()) throw InputError("class: the zero class has no selector value");
    return cls;
  }
  if (text.size() > 1 && text[0] == 'b') {
    const auto colon = text.find(':');
    int d = 0;
    int i = 0;
    if (colon != std::string::npos) {
      const auto [p1, e1] = std::from_chars(text.data() + 1, text.data() + colon, d);
      const auto [p2, e2] = std::from_chars(text.data() + colon + 1, text.data() + text.size(), i);
      if (e1 == std::errc() && e2 == std::errc() && p1 == text.data() + colon && p2 == text.data() + text.size()) {
        return HomologyClass::basis_element(betti, d, i);
      }
    }
  }
  throw InputError("class: expected pt, fund, b<degree>:<index> or csv:<coefficients>, got '" + text + "'");
}

std::vector<int> parse_ladder(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    const auto t = trim(part);
    int r = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), r);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || r < 1) {
      throw InputError("ladder: expected comma-separated positive integers, got '" + text + "'");
    }
    out.push_back(r);
  }
  if (out.empty()) throw InputError("ladder: at least one radius is required");
  return out;
}

json to_json(const NontrivialityReport& report) {
  json radii = json::array();
  for (const auto& r : report.radii) {
    radii.push_back({{"radius", r.radius}, {"cells", r.cells}, {"ranks", r.ranks}, {"nontrivial", r.nontrivial}});
  }
  json j{{"radii", radii}, {"verdict", report.verdict()}, {"nontrivial", report.nontrivial}};
  return j;
}

json to_json(const Spectrum& spectrum) {
  return {{"values", spectrum.values}, {"eps_p", spectrum.eps_p}, {"delta_z", spectrum.delta_z}};
}

}  // namespace legspec
