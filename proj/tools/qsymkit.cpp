// Command-line surface for the quantum symmetry toolkit: builders, oracles,
// engines and reports with stable file formats and exit codes.
//
// Exit codes: 0 success, 1 domain error or failed check, 2 parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qsymkit/abelian.hpp"
#include "qsymkit/builders.hpp"
#include "qsymkit/classical.hpp"
#include "qsymkit/continuum.hpp"
#include "qsymkit/errors.hpp"
#include "qsymkit/jsonio.hpp"
#include "qsymkit/models.hpp"
#include "qsymkit/positivity.hpp"
#include "qsymkit/rewrite.hpp"

#include <json.hpp>

namespace {

using namespace qsym;

struct ObjectOptions {
  std::string metric_path;
  std::string graph_path;
  std::string tree_path;
  int tree_level = -1;
  int cantor_level = 0;
  std::string cantor_form = "reduced";
  int cantor_limit = 0;
  int magic_n = 0;
  std::string scheme = "commutation";
  int size_cap = kDefaultSizeCap;
  int degree_bound = 4;
};

std::string g_format = "text";

void add_object_flags(CLI::App* cmd, ObjectOptions* opts, bool with_builders) {
  cmd->add_option("--metric", opts->metric_path, "metric space JSON file");
  cmd->add_option("--graph", opts->graph_path, "graph JSON file");
  cmd->add_option("--tree", opts->tree_path, "tree diagram JSON file");
  cmd->add_option("--level", opts->tree_level, "tree truncation level (default: full depth)");
  if (with_builders) {
    cmd->add_option("--cantor-level", opts->cantor_level, "Cantor tower level presentation");
    cmd->add_option("--form", opts->cantor_form, "Cantor form: raw|reduced (default reduced)");
    cmd->add_option("--cantor-limit", opts->cantor_limit, "Cantor limit presentation depth");
    cmd->add_option("--magic", opts->magic_n, "plain magic unitary on n points");
  }
  cmd->add_option("--scheme", opts->scheme,
                  "relation scheme: commutation|qiso (metric), edges|commutation (graph)");
  cmd->add_option("--limit", opts->size_cap, "oracle size cap (default 12)");
  cmd->add_option("--bound", opts->degree_bound, "rewriting degree bound (default 4)");
}

void warn_triangle(const FiniteMetricSpace& x) {
  for (const auto& [i, j, k] : x.triangle_violations())
    std::cerr << "warning: triangle inequality fails at (" << i << "," << j << "," << k << ")\n";
}

Presentation build_presentation(const ObjectOptions& opts) {
  if (!opts.metric_path.empty()) {
    const auto x = parse_metric_space(read_file(opts.metric_path));
    warn_triangle(x);
    if (opts.scheme == "commutation") return metric_commutation_presentation(x);
    if (opts.scheme == "qiso") return qiso_quadratic_presentation(x);
    throw DomainError("unknown metric scheme '" + opts.scheme + "'");
  }
  if (!opts.graph_path.empty()) {
    const auto g = parse_graph(read_file(opts.graph_path));
    if (opts.scheme == "edges") return edge_orthogonality_presentation(g);
    if (opts.scheme == "commutation") return graph_commutation_presentation(g);
    throw DomainError("unknown graph scheme '" + opts.scheme + "'");
  }
  if (!opts.tree_path.empty()) {
    const auto t = parse_tree_diagram(read_file(opts.tree_path));
    const int level = opts.tree_level < 0 ? t.depth() : opts.tree_level;
    return tree_diagram_presentation(t, level);
  }
  if (opts.cantor_level > 0)
    return cantor_level_presentation(opts.cantor_level, opts.cantor_form == "raw"
                                                            ? CantorForm::Raw
                                                            : CantorForm::Reduced);
  if (opts.cantor_limit > 0) return cantor_limit_presentation(opts.cantor_limit);
  if (opts.magic_n > 0) return magic_unitary_presentation(opts.magic_n);
  throw DomainError("no input object given (see --help)");
}

std::vector<PermutationSolution> oracle(const ObjectOptions& opts) {
  if (!opts.metric_path.empty()) {
    const auto x = parse_metric_space(read_file(opts.metric_path));
    warn_triangle(x);
    return enumerate_metric_automorphisms(x, opts.size_cap);
  }
  if (!opts.graph_path.empty())
    return enumerate_graph_automorphisms(parse_graph(read_file(opts.graph_path)), opts.size_cap);
  if (!opts.tree_path.empty()) {
    const auto t = parse_tree_diagram(read_file(opts.tree_path));
    const int level = opts.tree_level < 0 ? t.depth() : opts.tree_level;
    return enumerate_tree_diagram_automorphisms(t, level, opts.size_cap);
  }
  throw DomainError("no input object given (see --help)");
}

void emit_lines(const std::vector<std::string>& lines, const std::string& key) {
  if (g_format == "json") {
    nlohmann::json j;
    j[key] = lines;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& l : lines) std::cout << l << "\n";
}

int run_laplacian(const ObjectOptions& opts) {
  if (opts.metric_path.empty()) throw DomainError("laplacian needs --metric");
  const auto x = parse_metric_space(read_file(opts.metric_path));
  warn_triangle(x);
  const auto l = laplacian(x);
  if (g_format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : l) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& v : row) r.push_back(rational_text(v));
      rows.push_back(std::move(r));
    }
    std::cout << nlohmann::json{{"laplacian", rows}}.dump(2) << "\n";
  } else {
    std::cout << matrix_text(l) << "\n";
  }
  return 0;
}

int run_aut(const ObjectOptions& opts) {
  const auto sols = oracle(opts);
  std::vector<std::string> lines;
  for (const auto& s : sols) lines.push_back(permutation_text(s.perm));
  lines.push_back("order=" + std::to_string(sols.size()));
  emit_lines(lines, "automorphisms");
  return 0;
}

int run_present(const ObjectOptions& opts) {
  const auto p = build_presentation(opts);
  if (g_format == "json")
    std::cout << nlohmann::json{{"presentation", presentation_text(p)}}.dump(2) << "\n";
  else
    std::cout << presentation_text(p);
  return 0;
}

int run_abelianize(const ObjectOptions& opts) {
  const auto c = abelianize(build_presentation(opts));
  if (g_format == "json")
    std::cout << nlohmann::json{{"commutative", commutative_presentation_text(c)}}.dump(2) << "\n";
  else
    std::cout << commutative_presentation_text(c);
  return 0;
}

int run_solve01(const ObjectOptions& opts) {
  const auto p = build_presentation(opts);
  const auto sols = classical_solutions(p);
  std::vector<std::string> lines;
  for (const auto& s : sols) {
    if (p.blocks.empty()) {
      std::string bits;
      for (int v : s) bits += v ? '1' : '0';
      lines.push_back(bits);
    } else {
      lines.push_back(solution_signature(p, s));
    }
  }
  lines.push_back("order=" + std::to_string(sols.size()));
  emit_lines(lines, "solutions");
  return 0;
}

int run_verify_model(const ObjectOptions& opts, const std::string& model_path) {
  const auto p = build_presentation(opts);
  const auto m = parse_matrix_model(read_file(model_path), p);
  const auto report = verify_model(m, p);
  std::vector<std::string> lines;
  for (const auto& f : report.structural_failures) lines.push_back("structural: " + f);
  for (const auto& e : report.entries)
    lines.push_back(std::string(e.zero ? "zero    : " : "nonzero : ") + e.relation);
  lines.push_back(std::string("result=") + (report.pass ? "pass" : "fail"));
  emit_lines(lines, "verification");
  return 0;
}

int run_witness(const ObjectOptions& opts, const std::string& family_name) {
  const auto p = build_presentation(opts);
  ModelFamily family;
  if (family_name == "two-projection")
    family.kind = ModelFamily::Kind::TwoProjectionBlocks;
  else if (family_name == "permutation-sums")
    family.kind = ModelFamily::Kind::PermutationDiagonalSums;
  else
    throw DomainError("unknown family '" + family_name + "'");
  const auto w = noncommutativity_witness(p, family);
  std::vector<std::string> lines;
  if (w) {
    lines.push_back("witness: " + p.gens->at(w->gen_a).name + " " + p.gens->at(w->gen_b).name);
    for (auto line = matrix_model_text(w->model, p); !line.empty();) {
      const auto cut = line.find('\n');
      lines.push_back(line.substr(0, cut));
      line = cut == std::string::npos ? "" : line.substr(cut + 1);
    }
  } else {
    lines.push_back("no witness found in family");
  }
  emit_lines(lines, "witness");
  return 0;
}

int run_cantor(int level, const std::string& form, int limit_depth, bool with_witness) {
  std::vector<std::string> lines;
  if (limit_depth > 0) {
    const auto p = cantor_limit_presentation(limit_depth);
    std::cout << presentation_text(p);
    return 0;
  }
  if (level <= 0) throw DomainError("cantor needs --level or --limit-depth");
  const auto p =
      cantor_level_presentation(level, form == "raw" ? CantorForm::Raw : CantorForm::Reduced);
  std::cout << presentation_text(p);
  if (with_witness) {
    const auto w = noncommutativity_witness(p, ModelFamily{});
    if (w)
      std::cout << "witness: " << p.gens->at(w->gen_a).name << " " << p.gens->at(w->gen_b).name
                << "\n"
                << matrix_model_text(w->model, p);
    else
      std::cout << "no witness found in family\n";
  }
  return 0;
}

int run_continuum(const std::string& space, int degree) {
  const SeriesKind kind = space == "circle" ? SeriesKind::Circle : SeriesKind::Interval;
  if (space != "circle" && space != "interval")
    throw DomainError("unknown space '" + space + "'");
  const auto series = make_series(kind, degree);
  const auto expanded = expand_isometry_relations(series);
  const auto concluded = derive_conclusions(expanded, kind);
  std::vector<std::string> lines;
  lines.push_back("relations:");
  for (const auto& r : expanded.relations) lines.push_back(r.text());
  lines.push_back("conclusions:");
  for (const auto& r : concluded.relations) lines.push_back(r.text());
  emit_lines(lines, "continuum");
  return 0;
}

int run_check(const ObjectOptions& opts) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "PASS: " : "FAIL: ") << what << "\n";
    if (!ok) ++failures;
  };

  const auto sols = oracle(opts);
  auto sorted_perms = [&](const Presentation& p) {
    std::vector<std::vector<int>> out;
    for (const auto& s : classical_solutions(p)) {
      const auto perms = block_permutations(p, s);
      std::vector<int> flat;
      for (const auto& perm : perms) flat.insert(flat.end(), perm.begin(), perm.end());
      out.push_back(std::move(flat));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto oracle_perms = [&]() {
    std::vector<std::vector<int>> out;
    for (const auto& s : sols) out.push_back(s.perm);
    std::sort(out.begin(), out.end());
    return out;
  }();

  if (!opts.metric_path.empty()) {
    const auto x = parse_metric_space(read_file(opts.metric_path));
    warn_triangle(x);
    const auto l = laplacian(x);
    bool rows_zero = true, symmetric = true;
    for (int i = 0; i < x.n; ++i) {
      Rational sum = 0;
      for (int j = 0; j < x.n; ++j) {
        sum += l[i][j];
        if (l[i][j] != l[j][i]) symmetric = false;
      }
      if (sum != 0) rows_zero = false;
    }
    report(rows_zero, "laplacian rows sum to zero");
    report(symmetric, "laplacian is symmetric");
    bool commutes = true;
    for (const auto& s : sols)
      for (int i = 0; i < x.n && commutes; ++i)
        for (int j = 0; j < x.n && commutes; ++j)
          commutes = l[s.perm[i]][s.perm[j]] == l[i][j];
    report(commutes, "laplacian commutes with every classical isometry");

    const auto commutation = metric_commutation_presentation(x);
    const auto quadratic = qiso_quadratic_presentation(x);
    const auto a = sorted_perms(commutation);
    const auto b = sorted_perms(quadratic);
    report(a == b, "commutation and quadratic schemes agree on classical solutions");
    report(a == oracle_perms, "classical solutions match the isometry oracle");
  } else if (!opts.graph_path.empty()) {
    const auto g = parse_graph(read_file(opts.graph_path));
    const auto edges = edge_orthogonality_presentation(g);
    const auto commutation = graph_commutation_presentation(g);
    const auto a = sorted_perms(edges);
    const auto b = sorted_perms(commutation);
    report(a == b, "edge and commutation schemes agree on classical solutions");
    report(a == oracle_perms, "classical solutions match the automorphism oracle");
  } else if (!opts.tree_path.empty()) {
    const auto t = parse_tree_diagram(read_file(opts.tree_path));
    const int level = opts.tree_level < 0 ? t.depth() : opts.tree_level;
    const auto g = truncate(t, level);
    int edge_count = 0;
    for (int a = 0; a < g.size(); ++a)
      for (int b = a + 1; b < g.size(); ++b) edge_count += g.edge(a, b) ? 1 : 0;
    report(edge_count == g.size() - 1, "truncation is a tree");

    const auto tree_p = tree_diagram_presentation(t, level);
    const auto tree_sols = classical_solutions(tree_p);
    report(static_cast<long>(tree_sols.size()) == static_cast<long>(sols.size()),
           "tree presentation solution count matches the diagram oracle");
  } else {
    throw DomainError("check needs --metric, --graph or --tree");
  }

  // Every classical solution is a verified dimension-one model.
  const auto p = build_presentation(opts);
  bool models_pass = true;
  for (const auto& s : classical_solutions(p))
    models_pass = models_pass && verify_model(scalar_model(p, s), p).pass;
  report(models_pass, "classical solutions verify as dimension-one models");

  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsymkit: exact models of quantum symmetry groups of finite structures"};
  app.require_subcommand(1);
  app.add_option("--format", g_format, "output format: text|json (default text)");

  if (const char* env = std::getenv("QSYMKIT_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1) {
      std::cerr << "error: QSYMKIT_THREADS must be a positive integer\n";
      return 1;
    }
    // Worker cap; the current engines are sequential and satisfy any cap.
  }

  ObjectOptions opts;
  std::string model_path, family_name = "two-projection", space = "interval";
  int degree = 5, cantor_level = 0, cantor_limit_depth = 0;
  std::string cantor_form = "reduced";
  bool with_witness = false;

  auto* laplacian_cmd = app.add_subcommand("laplacian", "Laplacian of a finite metric space");
  add_object_flags(laplacian_cmd, &opts, false);

  auto* aut_cmd = app.add_subcommand("aut", "classical automorphism/isometry oracle");
  add_object_flags(aut_cmd, &opts, false);

  auto* present_cmd = app.add_subcommand("present", "build a presentation");
  add_object_flags(present_cmd, &opts, true);

  auto* abelianize_cmd = app.add_subcommand("abelianize", "maximal commutative quotient");
  add_object_flags(abelianize_cmd, &opts, true);

  auto* solve_cmd = app.add_subcommand("solve01", "classical {0,1} solutions of a presentation");
  add_object_flags(solve_cmd, &opts, true);

  auto* verify_cmd = app.add_subcommand("verify-model", "check a matrix model against relations");
  add_object_flags(verify_cmd, &opts, true);
  verify_cmd->add_option("--model", model_path, "model JSON file")->required();

  auto* witness_cmd = app.add_subcommand("witness", "search for a noncommutativity witness");
  add_object_flags(witness_cmd, &opts, true);
  witness_cmd->add_option("--family", family_name,
                          "two-projection|permutation-sums (default two-projection)");

  auto* cantor_cmd = app.add_subcommand("cantor", "Cantor tower presentations and witnesses");
  cantor_cmd->add_option("--level", cantor_level, "tower level");
  cantor_cmd->add_option("--form", cantor_form, "raw|reduced (default reduced)");
  cantor_cmd->add_option("--limit-depth", cantor_limit_depth, "truncated limit presentation");
  cantor_cmd->add_flag("--witness", with_witness, "run the witness pipeline");

  auto* continuum_cmd = app.add_subcommand("continuum", "interval/circle coefficient relations");
  continuum_cmd->add_option("--space", space, "interval|circle")->required();
  continuum_cmd->add_option("--degree", degree, "truncation bound N (default 5)");

  auto* check_cmd = app.add_subcommand("check", "run the invariant suite on an input object");
  add_object_flags(check_cmd, &opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (laplacian_cmd->parsed()) return run_laplacian(opts);
    if (aut_cmd->parsed()) return run_aut(opts);
    if (present_cmd->parsed()) return run_present(opts);
    if (abelianize_cmd->parsed()) return run_abelianize(opts);
    if (solve_cmd->parsed()) return run_solve01(opts);
    if (verify_cmd->parsed()) return run_verify_model(opts, model_path);
    if (witness_cmd->parsed()) return run_witness(opts, family_name);
    if (cantor_cmd->parsed())
      return run_cantor(cantor_level, cantor_form, cantor_limit_depth, with_witness);
    if (continuum_cmd->parsed()) return run_continuum(space, degree);
    if (check_cmd->parsed()) return run_check(opts);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
