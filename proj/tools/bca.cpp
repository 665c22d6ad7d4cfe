// bca: command-line front end. JSON on stdout, diagnostics on stderr.
// Exit status 0 on success, 1 for domain errors, 2 for usage and parse errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "bca/algebra.hpp"
#include "bca/error.hpp"
#include "bca/fixtures.hpp"
#include "bca/io.hpp"
#include "bca/modules.hpp"
#include "bca/rad3.hpp"

using nlohmann::json;
using namespace bca;

namespace {

struct Globals {
  bool pretty = false;
  bool allow_degenerate = false;
};

std::string input_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return read_file(path);
}

void emit(const json& j, const Globals& g) { std::cout << j.dump(g.pretty ? 2 : -1) << "\n"; }

Configuration load_config(const std::string& path, const Globals& g) {
  return validated(parse_configuration(input_text(path)), {g.allow_degenerate});
}

json element_json(const Algebra& alg, const AlgebraElement& x) {
  json out = json::array();
  for (const auto& [i, c] : x) out.push_back({{"basis", alg.label(i)}, {"coeff", to_string(c)}});
  return out;
}

json path_json(const Quiver& q, const Path& p) {
  json ids = json::array();
  for (std::size_t a : p) ids.push_back(q.arrows[a].id);
  return {{"aliases", q.describe(p)}, {"ids", ids}};
}

const char* kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::One: return "one";
    case RelationKind::Two: return "two";
    case RelationKind::Three: return "three";
  }
  return "";
}

const char* kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::Idempotent: return "idempotent";
    case BasisKind::Prefix: return "prefix";
    case BasisKind::Socle: return "socle";
  }
  return "";
}

/// A basis label ("e_V1", "s_V2") or a path of arrow ids or aliases
/// separated by spaces, commas or '*'.
AlgebraElement parse_element(const Algebra& alg, const std::string& text) {
  if (const auto i = alg.find_basis(text)) return {{*i, Rational(1)}};
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',' || c == '*') c = ' ';
  std::istringstream in(spaced);
  Path p;
  for (std::string tok; in >> tok;) {
    const auto a = alg.quiver().find_arrow(tok);
    if (!a) throw DomainError("unknown arrow or basis element \"" + tok + "\"");
    p.push_back(*a);
  }
  return alg.normal_form(p);
}

json projective_json(const Algebra& alg, const ProjectiveStructure& p) {
  const auto& q = alg.quiver();
  json chains = json::array();
  for (const auto& c : p.chains) {
    json layers = json::array();
    for (std::size_t v : c.layers) layers.push_back(q.vertices[v]);
    json gens = json::array();
    for (std::size_t b : c.generators) gens.push_back(alg.label(b));
    chains.push_back({{"first_arrow", q.arrows[c.first_arrow].alias}, {"layers", layers}, {"generators", gens}});
  }
  json heart = json::array();
  for (const auto& h : p.heart) {
    json layers = json::array();
    for (std::size_t v : h) layers.push_back(q.vertices[v]);
    heart.push_back(layers);
  }
  return {{"polygon", p.polygon},
          {"r", p.r},
          {"dim", p.dim},
          {"dim_from_chains", p.dim_from_chains},
          {"uniserial", p.uniserial},
          {"chains", chains},
          {"heart", heart},
          {"checks_pass", p.ok()}};
}

json rad3_case_json(const Rad3Case& c) {
  return {{"graph", c.graph.encoding()}, {"ok", c.ok()},          {"iso", c.iso},
          {"round_trips", c.round_trips}, {"canonical_ok", c.canonical_ok}, {"brauer_dim", c.brauer_dim},
          {"canonical_dim", c.canonical_dim}, {"failure", c.failure}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer configuration algebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--pretty", g.pretty, "Indented output");
  app.add_flag("--allow-degenerate", g.allow_degenerate, "Accept the 2-gon of two truncated vertices as K[x]/(x^2)");
  app.fallthrough();

  std::string file, x, y, polygon, fixtures_dir;
  bool dot = false, oracle = false;
  std::size_t max_n = 4, max_edges = 5;
  int status = 0;

  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Input file, - for stdin")->required();
    return sub;
  };

  auto* validate_cmd = with_file("validate", "Check a configuration");
  validate_cmd->callback([&] {
    const auto r = validate(parse_configuration(input_text(file)), {g.allow_degenerate});
    json errors = json::array();
    for (const auto& e : r.errors)
      errors.push_back({{"code", std::string(code_name(e.code))}, {"subject", e.subject}, {"message", e.message}});
    emit({{"valid", r.ok()}, {"errors", errors}}, g);
    if (!r.ok()) status = 1;
  });

  with_file("reduce", "Remove truncated vertices from polygons with three or more members")->callback([&] {
    emit(to_json(reduce(load_config(file, g)).data()), g);
  });

  auto* quiver_cmd = with_file("quiver", "Quiver of the reduced configuration");
  quiver_cmd->add_flag("--dot", dot, "Emit DOT instead of JSON");
  quiver_cmd->callback([&] {
    const Algebra alg(load_config(file, g));
    const auto& q = alg.quiver();
    if (dot) {
      std::cout << emit_dot(alg.configuration(), q);
      return;
    }
    json arrows = json::array();
    for (const auto& a : q.arrows)
      arrows.push_back({{"id", a.id},
                        {"alias", a.alias},
                        {"source", q.vertices[a.source]},
                        {"target", q.vertices[a.target]},
                        {"origin", alg.configuration().vertices()[a.origin].name},
                        {"position", a.position + 1}});
    emit({{"vertices", q.vertices}, {"arrows", arrows}}, g);
  });

  with_file("relations", "Relations of types one, two and three")->callback([&] {
    const Algebra alg(load_config(file, g));
    json out = json::array();
    for (const auto& r : alg.relations()) {
      json terms = json::array();
      for (const auto& t : r.polynomial(alg.quiver())) {
        auto p = path_json(alg.quiver(), t.path);
        p["coeff"] = to_string(t.coeff);
        terms.push_back(p);
      }
      out.push_back({{"kind", kind_name(r.kind)}, {"terms", terms}});
    }
    emit(out, g);
  });

  with_file("basis", "Canonical basis")->callback([&] {
    const Algebra alg(load_config(file, g));
    const auto& q = alg.quiver();
    json out = json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
      out.push_back({{"index", i},
                     {"label", alg.label(i)},
                     {"kind", kind_name(alg.basis()[i].kind)},
                     {"source", q.vertices[alg.source(i)]},
                     {"target", q.vertices[alg.target(i)]},
                     {"path", path_json(q, alg.representative(i))}});
    emit(out, g);
  });

  auto* dim_cmd = with_file("dim", "Dimension by formula and basis count");
  dim_cmd->add_flag("--oracle", oracle, "Also compute it by path enumeration");
  dim_cmd->callback([&] {
    const Configuration cfg = load_config(file, g);
    const Algebra alg(cfg);
    const auto d = dimension(alg);
    json terms = json::array();
    for (const auto& t : d.terms)
      terms.push_back({{"vertex", t.vertex},
                       {"cycle_length", t.cycle_length},
                       {"multiplicity", t.multiplicity},
                       {"contribution", t.contribution}});
    json out{{"formula", d.formula}, {"basis", d.basis_count}, {"quiver_vertices", d.vertices}, {"terms", terms}};
    if (oracle) out["oracle"] = brute_force_dimension(cfg);
    emit(out, g);
  });

  auto* mult_cmd = with_file("mult", "Multiply two elements (basis labels or arrow sequences)");
  mult_cmd->add_option("x", x)->required();
  mult_cmd->add_option("y", y)->required();
  mult_cmd->callback([&] {
    const Algebra alg(load_config(file, g));
    const auto a = parse_element(alg, x), b = parse_element(alg, y);
    emit({{"x", element_json(alg, a)}, {"y", element_json(alg, b)}, {"product", element_json(alg, alg.multiply(a, b))}},
         g);
  });

  with_file("symmetric-check", "Symmetry and nondegeneracy of the trace form")->callback([&] {
    const Algebra alg(load_config(file, g));
    const auto r = check_symmetric(alg);
    json out{{"symmetric", r.symmetric}, {"nondegenerate", r.nondegenerate}, {"gram_rank", r.gram_rank},
             {"dim", alg.dim()}};
    if (r.witness) out["witness"] = {alg.label(r.witness->first), alg.label(r.witness->second)};
    emit(out, g);
  });

  with_file("radical-series", "Dimensions of the radical powers")->callback([&] {
    const Algebra alg(load_config(file, g));
    const auto s = radical_series(alg);
    emit({{"series", s},
          {"loewy_length", s.size() - 1},
          {"expected_loewy_length", expected_loewy_length(alg.configuration())}},
         g);
  });

  with_file("grading", "Length grading per connected component")->callback([&] {
    json out = json::array();
    for (const auto& c : connected_components(reduce(load_config(file, g)))) {
      const auto r = is_length_graded(c);
      json labels = json::array();
      for (const auto& p : c.polygons()) labels.push_back(p.label);
      out.push_back({{"polygons", labels}, {"graded", r.graded}, {"degree", r.degree ? json(*r.degree) : json()}});
    }
    emit(out, g);
  });

  with_file("components", "Connected components")->callback([&] {
    json out = json::array();
    for (const auto& c : connected_components(load_config(file, g))) out.push_back(to_json(c.data()));
    emit(out, g);
  });

  auto* proj_cmd = with_file("projectives", "Structure of the indecomposable projectives");
  proj_cmd->add_option("--polygon", polygon, "Only this polygon");
  proj_cmd->callback([&] {
    const Algebra alg(load_config(file, g));
    json out = json::array();
    if (!polygon.empty()) {
      out.push_back(projective_json(alg, projective_structure(alg, alg.configuration().polygon_index(polygon))));
    } else {
      for (const auto& p : projective_structures(alg)) out.push_back(projective_json(alg, p));
    }
    emit(out, g);
  });

  with_file("graph2matrix", "Graph JSON to matrix CSV")->callback([&] {
    std::cout << matrix_to_csv(matrix_from_graph(parse_graph(input_text(file))));
  });

  with_file("matrix2graph", "Matrix CSV to graph JSON")->callback([&] {
    emit(to_json(graph_from_matrix(parse_matrix_csv(input_text(file)))), g);
  });

  with_file("graph2config", "Configuration of a graph")->callback([&] {
    emit(to_json(config_from_graph(parse_graph(input_text(file))).data()), g);
  });

  with_file("config2graph", "Graph of an ordered configuration")->callback([&] {
    emit(to_json(graph_from_config(load_config(file, g))), g);
  });

  with_file("canonical-algebra", "Canonical radical-cube-zero algebra of a graph")->callback([&] {
    const auto ca = canonical_algebra(parse_graph(input_text(file)));
    json arrows = json::array();
    for (std::size_t a = 0; a < ca.arrow_names.size(); ++a)
      arrows.push_back({{"name", ca.arrow_names[a]},
                        {"source", ca.shape.sources[a] + 1},
                        {"target", ca.shape.targets[a] + 1},
                        {"partner", ca.arrow_names[ca.partner[a]]}});
    json relations = json::array();
    for (const auto& r : ca.relations) {
      json terms = json::array();
      for (const auto& t : r) {
        json names = json::array();
        for (std::size_t a : t.path) names.push_back(ca.arrow_names[a]);
        terms.push_back({{"path", names}, {"coeff", to_string(t.coeff)}});
      }
      relations.push_back(terms);
    }
    const auto sym = check_symmetric(ca.table);
    emit({{"dim", ca.table.dim},
          {"basis", ca.table.labels},
          {"arrows", arrows},
          {"relations", relations},
          {"symmetric", sym.ok()},
          {"radical_series", radical_series(ca.table)},
          {"presentation_verified", verify_canonical_presentation(ca)}},
         g);
  });

  auto* rad3_cmd = app.add_subcommand("verify-rad3", "Check the graph theorem on every small graph");
  rad3_cmd->add_option("--n", max_n, "Largest vertex count")->capture_default_str();
  rad3_cmd->add_option("--max-edges", max_edges, "Largest edge count")->capture_default_str();
  rad3_cmd->callback([&] {
    const auto report = verify_rad3_exhaustive(max_n, max_edges);
    json cases = json::array();
    for (const auto& c : report.cases) cases.push_back(rad3_case_json(c));
    emit({{"total", report.cases.size()}, {"failures", report.failures()}, {"cases", cases}}, g);
    if (report.failures() != 0) status = 1;
  });

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Regression corpus");
  auto* run_cmd = fixtures_cmd->add_subcommand("run", "Check every fixture expectation");
  fixtures_cmd->require_subcommand(1);
  run_cmd->add_option("--dir", fixtures_dir, "Fixture directory");
  run_cmd->callback([&] {
    const auto checks = run_fixtures(fixtures_dir.empty() ? fixture_dir() : fixtures_dir);
    json out = json::array();
    std::size_t failed = 0;
    for (const auto& c : checks) {
      out.push_back({{"fixture", c.fixture}, {"check", c.check}, {"ok", c.ok}, {"detail", c.detail}});
      if (!c.ok) {
        ++failed;
        std::cerr << "FAIL " << c.fixture << " " << c.check << ": " << c.detail << "\n";
      }
    }
    emit({{"checks", checks.size()}, {"failures", failed}, {"results", out}}, g);
    if (failed != 0) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
