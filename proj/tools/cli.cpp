#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "hd/diagram_io.hpp"
#include "hd/maslov.hpp"
#include "hd/nice.hpp"

namespace hd::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HeegaardDiagram load_diagram_arg(const std::string& arg) {
  const auto& fx = bundled_fixtures();
  if (auto it = fx.find(arg); it != fx.end()) return parse_diagram(it->second);
  std::ifstream in(arg);
  if (!in) throw UsageError("unknown fixture or unreadable file '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

/// Generator spec: one group per cyclic family pair. Groups separated by
/// ';', vertex ids inside a group by ','. When no ';' appears and the
/// diagram has one curve per family, each comma-separated id is a group.
std::vector<Generator> parse_gens(const HeegaardDiagram& dg, const std::string& spec) {
  std::vector<std::vector<std::string>> groups;
  if (spec.find(';') != std::string::npos) {
    for (const std::string& g : split(spec, ';')) groups.push_back(split(g, ','));
  } else if (dg.curves_per_family == 1) {
    for (const std::string& g : split(spec, ',')) groups.push_back({g});
  } else {
    groups.push_back(split(spec, ','));
  }
  if ((int)groups.size() != dg.family_count)
    throw UsageError("generator spec needs " + std::to_string(dg.family_count) +
                     " generators, got " + std::to_string(groups.size()));
  std::vector<Generator> gens;
  for (int i = 0; i < dg.family_count; ++i) {
    std::vector<int> verts;
    for (const std::string& id : groups[i]) verts.push_back(dg.vertex_index(id));
    int fa = i + 1, fb = (i + 1) % dg.family_count + 1;
    gens.push_back(make_generator(dg, fa, fb, verts));
  }
  return gens;
}

Domain parse_domain(const HeegaardDiagram& dg, const std::string& spec) {
  Domain D(dg);
  for (const std::string& term : split(spec, ',')) {
    auto colon = term.rfind(':');
    if (colon == std::string::npos)
      throw UsageError("domain term '" + term + "' must be region:coefficient");
    int coeff;
    try {
      coeff = std::stoi(term.substr(colon + 1));
    } catch (...) {
      throw UsageError("bad coefficient in '" + term + "'");
    }
    D.coeff[dg.region_index(term.substr(0, colon))] += coeff;
  }
  return D;
}

std::string domain_str(const HeegaardDiagram& dg, const std::vector<int>& coeff) {
  std::string s;
  for (size_t r = 0; r < coeff.size(); ++r) {
    if (coeff[r] == 0) continue;
    if (!s.empty()) s += " ";
    s += dg.regions[r].id + ":" + std::to_string(coeff[r]);
  }
  return s.empty() ? "0" : s;
}

/// Arc multiplicities printed along each arc's canonical direction so
/// the output does not depend on stored curve orientations.
std::string chain_str(const HeegaardDiagram& dg, const CurveOneChain& c) {
  std::string s;
  for (size_t a = 0; a < dg.arcs.size(); ++a) {
    int m = c.mult[a];
    if (m == 0) continue;
    if (!arc_stored_direction_is_canonical(dg.arcs[a])) m = -m;
    if (!s.empty()) s += " ";
    s += dg.arcs[a].id + ":" + (m > 0 ? "+" : "") + std::to_string(m);
  }
  return s.empty() ? "0" : s;
}

int run_validate(const std::string& file, std::ostream& out) {
  HeegaardDiagram dg = load_diagram_arg(file);  // throws on invalid input
  out << "valid\n";
  out << "genus " << dg.genus << " families " << dg.family_count << " curves-per-family "
      << dg.curves_per_family << "\n";
  out << "vertices " << dg.vertices.size() << " arcs " << dg.arcs.size() << " regions "
      << dg.regions.size() << " basepoints " << dg.basepoints.size() << "\n";
  return 0;
}

int run_generators(const std::string& file, const std::string& pair, std::ostream& out) {
  HeegaardDiagram dg = load_diagram_arg(file);
  auto parts = split(pair, ',');
  if (parts.size() != 2) throw UsageError("--pair needs two family indices, e.g. 1,2");
  int fa, fb;
  try {
    fa = std::stoi(parts[0]);
    fb = std::stoi(parts[1]);
  } catch (...) {
    throw UsageError("--pair needs two family indices, e.g. 1,2");
  }
  if (fa < 1 || fa > dg.family_count || fb < 1 || fb > dg.family_count || fa == fb)
    throw UsageError("families must be distinct and within 1.." + std::to_string(dg.family_count));
  auto gens = enumerate_generators(dg, fa, fb);
  out << "generators " << gens.size() << "\n";
  for (const Generator& g : gens) {
    std::string line;
    for (int v : g.vertices) {
      if (!line.empty()) line += ",";
      line += dg.vertices[v].id;
    }
    out << line << "\n";
  }
  return 0;
}

int run_domains(const std::string& file, const std::string& gens_spec, std::ostream& out) {
  HeegaardDiagram dg = load_diagram_arg(file);
  GonConfig cfg = full_config(dg, parse_gens(dg, gens_spec));
  DomainSolution sol = solve_domains(dg, cfg);
  if (!sol.feasible()) {
    out << "infeasible\n";
    out << "lattice rank " << sol.basis.size() << "\n";
    for (const auto& row : sol.basis) out << "lattice " << domain_str(dg, row) << "\n";
    throw EmptyResult("no domain joins the given generators");
  }
  out << "particular " << domain_str(dg, *sol.particular) << "\n";
  out << "lattice rank " << sol.basis.size() << "\n";
  for (const auto& row : sol.basis) out << "lattice " << domain_str(dg, row) << "\n";
  return 0;
}

int run_measure(const std::string& file, const std::string& domain_spec,
                const std::string& gens_spec, std::ostream& out) {
  HeegaardDiagram dg = load_diagram_arg(file);
  Domain D = parse_domain(dg, domain_spec);
  out << "e = " << euler_measure(D).str() << "\n";
  for (int f = 1; f <= dg.family_count; ++f)
    out << "boundary[" << f << "] = " << chain_str(dg, boundary_on_family(D, f)) << "\n";
  if (!gens_spec.empty()) {
    auto gens = parse_gens(dg, gens_spec);
    for (size_t i = 0; i < gens.size(); ++i)
      out << "mu_p[" << (i + 1) << "] = " << point_measure(D, gens[i]).str() << "\n";
  }
  return 0;
}

int run_maslov(const std::string& file, const std::string& gens_spec,
               const std::string& domain_spec, const std::string& form, std::ostream& out) {
  HeegaardDiagram dg = load_diagram_arg(file);
  GonConfig cfg = full_config(dg, parse_gens(dg, gens_spec));
  Domain D = parse_domain(dg, domain_spec);
  // evaluate before writing so errors never leave partial output
  if (form == "default") {
    std::string m = mu(D, cfg).str(), i = iota(D, cfg).str();
    out << "mu = " << m << ", iota = " << i << "\n";
  } else if (form == "symmetric") {
    std::string m = mu_symmetric_n3(D, cfg).str();
    out << "mu = " << m << "\n";
  } else if (form == "lipshitz") {
    std::string m = mu_lipshitz_n2(D, cfg).str();
    out << "mu = " << m << "\n";
  } else {
    throw UsageError("--form must be default, symmetric or lipshitz");
  }
  return 0;
}

int run_count(const std::string& file, const std::string& gens_spec, int max_coeff,
              std::ostream& out) {
  HeegaardDiagram dg = load_diagram_arg(file);
  GonConfig cfg = full_config(dg, parse_gens(dg, gens_spec));
  long long n = count_index_zero_triangles(dg, cfg, max_coeff);
  out << "count = " << n << "\n";
  return 0;
}

int run_fixtures(const std::string& action, const std::string& name, std::ostream& out) {
  if (action == "list") {
    for (const auto& [n, text] : bundled_fixtures()) out << n << "\n";
    return 0;
  }
  if (action == "emit") {
    const auto& fx = bundled_fixtures();
    auto it = fx.find(name);
    if (it == fx.end()) throw UsageError("unknown fixture '" + name + "'");
    out << it->second;
    return 0;
  }
  throw UsageError("fixtures action must be list or emit");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculator for combinatorial Heegaard diagrams"};
  app.name("hd");
  app.require_subcommand(1);

  std::string file, pair, gens_spec, domain_spec, form = "default";
  std::string fx_action, fx_name;
  int max_coeff = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check a diagram file");
  validate_cmd->add_option("file", file, "diagram file or fixture name")->required();

  auto* gen_cmd = app.add_subcommand("generators", "enumerate tori intersection points");
  gen_cmd->add_option("file", file)->required();
  gen_cmd->add_option("--pair", pair, "family pair, e.g. 1,2")->required();

  auto* dom_cmd = app.add_subcommand("domains", "solve for domains joining generators");
  dom_cmd->add_option("file", file)->required();
  dom_cmd->add_option("--gens", gens_spec, "generator list, e.g. x,y,z or c2,d1;c3,d1")->required();

  auto* measure_cmd = app.add_subcommand("measure", "euler measure, boundaries, point measures");
  measure_cmd->add_option("file", file)->required();
  measure_cmd->add_option("--domain", domain_spec, "region:coeff list, e.g. T1:1,H:-2")->required();
  measure_cmd->add_option("--gens", gens_spec, "optional generators for point measures");

  auto* maslov_cmd = app.add_subcommand("maslov", "Maslov index and fat-diagonal count");
  maslov_cmd->add_option("file", file)->required();
  maslov_cmd->add_option("--gens", gens_spec)->required();
  maslov_cmd->add_option("--domain", domain_spec)->required();
  maslov_cmd->add_option("--form", form, "default | symmetric | lipshitz");

  auto* count_cmd = app.add_subcommand("count-triangles", "count index-zero triangle domains");
  count_cmd->add_option("file", file)->required();
  count_cmd->add_option("--gens", gens_spec)->required();
  count_cmd->add_option("--max-coeff", max_coeff, "coefficient bound")->required();

  auto* fx_cmd = app.add_subcommand("fixtures", "list or emit bundled diagrams");
  fx_cmd->add_option("action", fx_action, "list | emit")->required();
  fx_cmd->add_option("name", fx_name, "fixture name for emit");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return run_validate(file, out);
    if (app.got_subcommand(gen_cmd)) return run_generators(file, pair, out);
    if (app.got_subcommand(dom_cmd)) return run_domains(file, gens_spec, out);
    if (app.got_subcommand(measure_cmd)) return run_measure(file, domain_spec, gens_spec, out);
    if (app.got_subcommand(maslov_cmd)) return run_maslov(file, gens_spec, domain_spec, form, out);
    if (app.got_subcommand(count_cmd)) return run_count(file, gens_spec, max_coeff, out);
    if (app.got_subcommand(fx_cmd)) return run_fixtures(fx_action, fx_name, out);
    err << "usage error: no subcommand\n";
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const EmptyResult& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hd::cli
