#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <toml.hpp>

#include "legspec/builtins.hpp"
#include "legspec/errors.hpp"
#include "legspec/genfam.hpp"
#include "legspec/homology.hpp"
#include "legspec/io.hpp"
#include "legspec/minmax.hpp"
#include "legspec/products.hpp"

namespace legspec::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
  std::string complex;
  std::string model;
  int resolution = -1;
  std::string function;
  std::vector<std::string> gfqi;
  std::vector<std::string> fronts;
  std::string limit;
  std::string cls;
  std::string field = "f2";
  std::optional<double> eps_p;
  std::optional<double> delta_z;
  std::string ladder = "1,2,3";
  std::string out;
  std::string svg;
  std::string config;
  bool relaxed = false;
};

CellComplex load_model(const Options& o) {
  if (!o.complex.empty() && !o.model.empty()) throw InputError("complex: give either --complex or --model, not both");
  if (!o.complex.empty()) return load_complex(o.complex);
  if (o.model.empty()) throw InputError("complex: give --complex FILE or --model ID");
  return builtin(o.model, o.resolution > 0 ? o.resolution : default_resolution(o.model));
}

void write_report(const Options& o, const std::string& name, const json& report) {
  if (o.out.empty()) return;
  write_text(fs::path(o.out) / name, report.dump(2) + "\n");
}

json number_list(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(x == 0 ? 0.0 : x);
  return a;
}

void print_values(std::ostream& out, const std::vector<double>& values) {
  for (double v : values) out << format_number(v) << "\n";
}

Tolerances tolerances_for(const FrontCloud& cloud, const Options& o) {
  if (o.eps_p && !(*o.eps_p > 0)) throw InputError("eps-p: must be positive");
  if (o.delta_z && !(*o.delta_z > 0)) throw InputError("delta-z: must be positive");
  return default_tolerances(cloud, o.eps_p, o.delta_z);
}

json tolerances_json(const Tolerances& t) { return {{"eps_p", t.eps_p}, {"delta_z", t.delta_z}}; }

// ---------------------------------------------------------------- complexes

int cmd_homology(const Options& o, std::ostream& out) {
  const auto complex = load_model(o);
  const auto field = parse_field(o.field);
  const auto betti = betti_numbers(complex, field);
  for (std::size_t d = 0; d < betti.size(); ++d) out << (d ? " " : "") << betti[d];
  out << "\n";
  write_report(o, "homology.json",
               {{"field", std::string(to_string(field))}, {"betti", betti}, {"complex", complex_to_json(complex)}});
  return kOk;
}

void require_f2(const Options& o, const std::string& what) {
  if (parse_field(o.field) != Field::f2) throw CapabilityError(what + ": only the field f2 is supported");
}

int cmd_cuplength(const Options& o, std::ostream& out) {
  require_f2(o, "cuplength");
  const auto complex = load_model(o);
  const int cl = cup_length(complex);
  out << cl << "\n";
  write_report(o, "cuplength.json", {{"cup_length", cl}, {"betti", complex.basis().betti()}});
  return kOk;
}

int cmd_cls(const Options& o, std::ostream& out) {
  require_f2(o, "cls");
  const auto complex = load_model(o);
  if (o.function.empty()) throw InputError("function: --function FILE is required");
  const SampledFunction f(complex, load_function(o.function, complex));
  const auto cls = parse_class(o.cls.empty() ? "pt" : o.cls, complex.basis().betti());
  const double v = c_ls(cls, f);
  out << format_number(v) << "\n";
  write_report(o, "cls.json", {{"class", cls.to_string()}, {"value", v}});
  return kOk;
}

int cmd_essential(const Options& o, std::ostream& out) {
  const auto complex = load_model(o);
  if (o.function.empty()) throw InputError("function: --function FILE is required");
  const SampledFunction f(complex, load_function(o.function, complex));
  const auto ev = essential_values(f, parse_field(o.field));
  print_values(out, ev.values);
  json table = json::array();
  for (const auto& [cls, v] : ev.table) table.push_back({{"class", cls.to_string()}, {"value", v}});
  write_report(o, "essential.json", {{"values", number_list(ev.values)}, {"table", table}});
  return kOk;
}

int cmd_ls_check(const Options& o, std::ostream& out) {
  require_f2(o, "ls-check");
  const auto complex = load_model(o);
  if (o.function.empty()) throw InputError("function: --function FILE is required");
  const SampledFunction f(complex, load_function(o.function, complex));
  const auto report = ls_check(f, parse_ladder(o.ladder));
  json list = json::array();
  if (report.coincidences.empty()) out << "no coincidence\n";
  for (const auto& c : report.coincidences) {
    out << "coincidence alpha=" << c.alpha.to_string() << " beta=" << c.beta.to_string()
        << " lambda=" << format_number(c.lambda) << " verdict=" << c.report.verdict() << "\n";
    list.push_back({{"alpha", c.alpha.to_string()},
                    {"beta", c.beta.to_string()},
                    {"product", c.product.to_string()},
                    {"lambda", c.lambda},
                    {"report", to_json(c.report)}});
  }
  write_report(o, "ls_check.json", {{"band", report.band}, {"ladder", report.ladder}, {"coincidences", list}});
  return kOk;
}

// ---------------------------------------------------------------- families

GeneratingFamily single_family(const Options& o) {
  if (o.gfqi.size() != 1) throw InputError("gfqi: exactly one --gfqi FILE is required");
  return load_family(o.gfqi.front());
}

int cmd_front(const Options& o, std::ostream& out) {
  const auto cloud = front(single_family(o));
  const auto csv = front_to_csv(cloud);
  if (o.out.empty()) {
    out << csv;
  } else {
    write_text(fs::path(o.out) / "front.csv", csv);
    out << cloud.points.size() << "\n";
  }
  if (!o.svg.empty()) write_text(o.svg, front_svg(cloud));
  return kOk;
}

std::vector<FrontCloud> input_clouds(const Options& o) {
  std::vector<FrontCloud> clouds;
  for (const auto& g : o.gfqi) clouds.push_back(front(load_family(g)));
  for (const auto& f : o.fronts) clouds.push_back(load_front(f));
  return clouds;
}

int cmd_spec(const Options& o, std::ostream& out) {
  const auto clouds = input_clouds(o);
  if (clouds.size() != 1) throw InputError("spec: give exactly one --front or --gfqi input");
  const auto tol = tolerances_for(clouds.front(), o);
  const auto s = spectrum(clouds.front(), tol);
  print_values(out, s.values);
  if (!o.svg.empty()) write_text(o.svg, spectrum_svg(s));
  write_report(o, "spec.json", to_json(s));
  return kOk;
}

int cmd_ell(const Options& o, std::ostream& out) {
  require_f2(o, "ell");
  const auto s = single_family(o);
  const SpectralSelector selector(s);
  const auto cls = parse_class(o.cls.empty() ? "pt" : o.cls, selector.base_betti());
  const double v = selector.ell(cls);
  out << format_number(v) << "\n";
  write_report(o, "ell.json", {{"class", cls.to_string()}, {"value", v}});
  return kOk;
}

int cmd_gamma(const Options& o, std::ostream& out) {
  require_f2(o, "gamma");
  const double v = gamma(single_family(o));
  out << format_number(v) << "\n";
  write_report(o, "gamma.json", {{"gamma", v}});
  return kOk;
}

int cmd_oplus(const Options& o, std::ostream& out) {
  if (o.gfqi.size() != 2) throw InputError("oplus: exactly two --gfqi inputs are required");
  const auto sum = oplus(load_family(o.gfqi[0]), load_family(o.gfqi[1]));
  auto j = family_to_json(sum);
  // The smoothness of L + L' is not checked by the family-level sum.
  j["sum_smoothness_verified"] = false;
  if (o.out.empty()) {
    out << j.dump() << "\n";
  } else {
    write_text(fs::path(o.out) / "oplus.json", j.dump() + "\n");
    out << (fs::path(o.out) / "oplus.json").string() << "\n";
  }
  return kOk;
}

int cmd_hausdorff(const Options& o, std::ostream& out) {
  const auto clouds = input_clouds(o);
  if (clouds.size() != 2) throw InputError("hausdorff: give exactly two --front or --gfqi inputs");
  const double d = hausdorff(clouds[0], clouds[1]);
  out << format_number(d) << "\n";
  write_report(o, "hausdorff.json", {{"distance", d}});
  return kOk;
}

// ---------------------------------------------------------------- limit check

struct Member {
  FrontCloud cloud;
  std::optional<GeneratingFamily> family;
  std::string path;
};

Member load_member(const fs::path& path) {
  Member m;
  m.path = path.string();
  if (path.extension() == ".csv") {
    m.cloud = load_front(path);
  } else {
    m.family = load_family(path);
    m.cloud = front(*m.family);
  }
  return m;
}

struct LimitSetup {
  std::vector<int> resolution;
  std::vector<fs::path> sequence;
  fs::path limit;
  Options options;
};

std::string toml_where(const std::string& source, const std::string& field) {
  return source + ": field '" + field + "'";
}

LimitSetup setup_from_config(const Options& cli) {
  const fs::path path = cli.config;
  const auto source = path.string();
  const auto text = read_text(path);
  toml::table t;
  try {
    t = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    throw InputError(source + ": malformed TOML: " + std::string(e.description()));
  }
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  LimitSetup s;
  s.options = cli;

  const auto base = t["base"].value<std::string>().value_or("T2");
  if (base != "S1" && base != "T2" && base != "T3") {
    throw CapabilityError(toml_where(source, "base") + ": limit checks run on S1, T2 or T3");
  }
  const int dim = base == "S1" ? 1 : (base == "T2" ? 2 : 3);
  if (auto r = t["resolution"].value<int>()) {
    s.resolution.assign(dim, *r);
  } else if (const auto* arr = t["resolution"].as_array()) {
    for (const auto& e : *arr) {
      const auto v = e.value<int>();
      if (!v) throw InputError(toml_where(source, "resolution") + ": expected integers");
      s.resolution.push_back(*v);
    }
  }
  const auto* seq = t["sequence"].as_array();
  if (seq == nullptr || seq->empty()) throw InputError(toml_where(source, "sequence") + ": expected a nonempty list");
  for (const auto& e : *seq) {
    const auto v = e.value<std::string>();
    if (!v) throw InputError(toml_where(source, "sequence") + ": expected file paths");
    s.sequence.push_back(dir / *v);
  }
  if (auto v = t["limit"].value<std::string>()) s.limit = dir / *v;
  if (auto v = t["eps_p"].value<double>()) {
    if (!(*v > 0)) throw InputError(toml_where(source, "eps_p") + ": must be positive");
    if (!cli.eps_p) s.options.eps_p = *v;
  }
  if (auto v = t["delta_z"].value<double>()) {
    if (!(*v > 0)) throw InputError(toml_where(source, "delta_z") + ": must be positive");
    if (!cli.delta_z) s.options.delta_z = *v;
  }
  if (const auto* arr = t["ladder"].as_array()) {
    std::string ladder;
    for (const auto& e : *arr) {
      const auto v = e.value<int>();
      if (!v || *v < 1) throw InputError(toml_where(source, "ladder") + ": expected positive integers");
      ladder += (ladder.empty() ? "" : ",") + std::to_string(*v);
    }
    if (ladder.empty()) throw InputError(toml_where(source, "ladder") + ": expected positive integers");
    s.options.ladder = ladder;
  }
  if (auto v = t["out"].value<std::string>(); v && cli.out.empty()) s.options.out = (dir / *v).string();
  if (auto v = t["relaxed"].value<bool>()) s.options.relaxed = s.options.relaxed || *v;
  for (const auto& p : s.sequence) {
    if (!fs::exists(p)) throw InputError(toml_where(source, "sequence") + ": " + p.string() + " is not readable");
  }
  if (!s.limit.empty() && !fs::exists(s.limit)) {
    throw InputError(toml_where(source, "limit") + ": " + s.limit.string() + " is not readable");
  }
  return s;
}

int cmd_limit_check(const Options& o, std::ostream& out) {
  require_f2(o, "limit-check");
  LimitSetup setup;
  if (!o.config.empty()) {
    setup = setup_from_config(o);
  } else {
    setup.options = o;
    if (o.gfqi.empty() && o.fronts.empty()) throw InputError("sequence: give --config or --gfqi/--front members");
    for (const auto& g : o.gfqi) setup.sequence.emplace_back(g);
    for (const auto& f : o.fronts) setup.sequence.emplace_back(f);
    if (!o.limit.empty()) setup.limit = o.limit;
  }
  const auto& opt = setup.options;
  std::vector<Member> members;
  for (const auto& p : setup.sequence) members.push_back(load_member(p));
  const Member limit = setup.limit.empty() ? members.back() : load_member(setup.limit);
  if (setup.resolution.empty()) {
    if (!limit.cloud.base_resolution.empty()) {
      setup.resolution = limit.cloud.base_resolution;
    } else if (limit.family) {
      setup.resolution = limit.family->base_resolution();
    } else {
      throw InputError("resolution: required when the limit is a loaded front");
    }
  }
  std::vector<FrontCloud> clouds;
  for (const auto& m : members) {
    if (m.family && m.family->base_resolution() != setup.resolution) {
      throw InputError(m.path + ": base does not match the configured model");
    }
    clouds.push_back(m.cloud);
  }
  const auto tol = tolerances_for(limit.cloud, opt);
  const auto report =
      verify_limit(clouds, limit.cloud, setup.resolution, tol, parse_ladder(opt.ladder), opt.relaxed);

  out << "members=" << members.size() << "\n";
  for (std::size_t i = 0; i < report.distances.size(); ++i) {
    out << "distance[" << i + 1 << "]=" << format_number(report.distances[i]) << "\n";
  }
  out << "decreasing=" << (report.decreasing ? "true" : "false") << "\n";
  out << "eps_p=" << format_number(tol.eps_p) << "\n";
  out << "delta_z=" << format_number(tol.delta_z) << "\n";
  out << "spec_size=" << report.limit_spectrum.values.size() << "\n";
  out << "cl=" << report.cup_length << "\n";
  json levels = json::array();
  for (const auto& l : report.levels) {
    out << "lambda=" << format_number(l.lambda) << " vertices=" << l.snapped_vertices
        << " verdict=" << l.report.verdict() << "\n";
    levels.push_back({{"lambda", l.lambda},
                      {"points", l.points},
                      {"snapped_vertices", l.snapped_vertices},
                      {"report", to_json(l.report)}});
  }
  out << "verdict=" << report.verdict() << "\n";

  if (!opt.out.empty()) {
    json member_reports = json::array();
    for (std::size_t i = 0; i < members.size(); ++i) {
      json m{{"path", fs::path(members[i].path).filename().string()},
             {"points", members[i].cloud.points.size()},
             {"distance", report.distances[i]}};
      if (members[i].family) {
        const SpectralSelector selector(*members[i].family);
        json table = json::array();
        for (const auto& cls : HomologyClass::all_nonzero(selector.base_betti())) {
          table.push_back({{"class", cls.to_string()}, {"ell", selector.ell(cls)}});
        }
        m["ell"] = table;
      }
      member_reports.push_back(m);
    }
    json j{{"members", member_reports},
           {"relaxed", report.relaxed},
           {"decreasing", report.decreasing},
           {"tolerances", tolerances_json(tol)},
           {"ladder", parse_ladder(opt.ladder)},
           {"spectrum", number_list(report.limit_spectrum.values)},
           {"spec_size", report.limit_spectrum.values.size()},
           {"cl", report.cup_length},
           {"hypothesis_met", report.hypothesis_met},
           {"levels", levels},
           {"verdict", report.verdict()}};
    write_report(opt, "limit_check.json", j);
  }
  return report.hypothesis_met ? kOk : kHypothesisNotMet;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Min-max critical values, spectral invariants and limit checks"};
  app.name("legspec");
  app.require_subcommand(1);
  Options o;

  auto complex_opts = [&](CLI::App* sub) {
    sub->add_option("--complex", o.complex, "complex description (JSON)");
    sub->add_option("--model", o.model, "built-in model: point, S1, T2, T3, S2");
    sub->add_option("--resolution", o.resolution, "vertices per axis (tori) or subdivision level (S2)");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "coefficient field: f2 or q");
    sub->add_option("--out", o.out, "directory for JSON/CSV reports");
  };
  auto tolerance_opts = [&](CLI::App* sub) {
    sub->add_option("--eps-p", o.eps_p, "threshold on |p| for the zero wall");
    sub->add_option("--delta-z", o.delta_z, "clustering gap for action values");
  };

  std::map<std::string, int (*)(const Options&, std::ostream&)> handlers;
  auto add = [&](const std::string& name, const std::string& help, int (*fn)(const Options&, std::ostream&)) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[name] = fn;
    return sub;
  };

  auto* homology_cmd = add("homology", "Betti numbers and canonical basis", cmd_homology);
  complex_opts(homology_cmd);
  complex_opts(add("cuplength", "cup-length by exhaustive product search", cmd_cuplength));
  auto* cls_cmd = add("cls", "min-max value of a class", cmd_cls);
  complex_opts(cls_cmd);
  cls_cmd->add_option("--function", o.function, "vertex values (CSV or JSON)");
  cls_cmd->add_option("--class", o.cls, "pt | fund | b<d>:<i> | csv:<coeffs>");
  auto* ess_cmd = add("essential", "min-max values of every nonzero class", cmd_essential);
  complex_opts(ess_cmd);
  ess_cmd->add_option("--function", o.function, "vertex values (CSV or JSON)");
  auto* ls_cmd = add("ls-check", "coincidences and critical-set non-triviality", cmd_ls_check);
  complex_opts(ls_cmd);
  ls_cmd->add_option("--function", o.function, "vertex values (CSV or JSON)");
  ls_cmd->add_option("--ladder", o.ladder, "neighbourhood radii, e.g. 1,2,3");
  auto* front_cmd = add("front", "front of a generating family", cmd_front);
  front_cmd->add_option("--gfqi", o.gfqi, "generating family (JSON)");
  front_cmd->add_option("--svg", o.svg, "SVG plot (one-dimensional base)");
  auto* spec_cmd = add("spec", "spectrum of a front", cmd_spec);
  spec_cmd->add_option("--gfqi", o.gfqi, "generating family (JSON)");
  spec_cmd->add_option("--front", o.fronts, "front cloud (CSV)");
  spec_cmd->add_option("--svg", o.svg, "SVG tick plot");
  tolerance_opts(spec_cmd);
  auto* ell_cmd = add("ell", "spectral invariant of a class", cmd_ell);
  ell_cmd->add_option("--gfqi", o.gfqi, "generating family (JSON)");
  ell_cmd->add_option("--class", o.cls, "pt | fund | b<d>:<i> | csv:<coeffs>");
  add("gamma", "ell(fund) - ell(pt)", cmd_gamma)->add_option("--gfqi", o.gfqi, "generating family (JSON)");
  add("oplus", "sum of two generating families", cmd_oplus)->add_option("--gfqi", o.gfqi, "two generating families");
  auto* haus_cmd = add("hausdorff", "Hausdorff distance of two fronts", cmd_hausdorff);
  haus_cmd->add_option("--gfqi", o.gfqi, "generating family (JSON)");
  haus_cmd->add_option("--front", o.fronts, "front cloud (CSV)");
  auto* limit_cmd = add("limit-check", "few spectral values imply non-trivial level sets", cmd_limit_check);
  limit_cmd->add_option("--config", o.config, "experiment description (TOML)");
  limit_cmd->add_option("--gfqi", o.gfqi, "sequence members (JSON)");
  limit_cmd->add_option("--front", o.fronts, "sequence members (CSV)");
  limit_cmd->add_option("--limit", o.limit, "limit family or front (default: last member)");
  limit_cmd->add_option("--ladder", o.ladder, "neighbourhood radii, e.g. 1,2,3");
  limit_cmd->add_flag("--relaxed", o.relaxed, "measure convergence by the directed distance to the limit");
  tolerance_opts(limit_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    for (const auto* sub : app.get_subcommands()) return handlers.at(sub->get_name())(o, out);
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapabilityError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace legspec::cli
