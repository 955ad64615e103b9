// polychow: command-line front end.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polychow/golden.hpp"
#include "polychow/grassmann.hpp"
#include "polychow/polymatroid.hpp"
#include "polychow/relations.hpp"
#include "polychow/secondary.hpp"
#include "polychow/serialization.hpp"
#include "polychow/svg.hpp"

using namespace polychow;

namespace {

struct RunConfig {
  unsigned long long seed = 1;
  size_t triangulation_cap = 12;
  std::string output_format = "json";
  std::string output_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_input(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": invalid JSON: " + e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty() || cfg.output_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw UsageError("cannot write " + cfg.output_path);
  out << text;
}

void emit_json(const RunConfig& cfg, json j) {
  j["seed"] = cfg.seed;
  emit(cfg, j.dump(2));
}

BlockStructure parse_blocks(const std::vector<int>& r, size_t n) {
  if (r.empty()) return BlockStructure::trivial(n);
  BlockStructure b(r);
  if (b.n() != n) throw UsageError("block sizes sum to " + std::to_string(b.n()) + ", expected n = " + std::to_string(n));
  return b;
}

void check_format(const RunConfig& cfg) {
  if (cfg.output_format != "json" && cfg.output_format != "svg" && cfg.output_format != "text")
    throw UsageError("unknown format '" + cfg.output_format + "' (json|svg|text)");
}

// SVG when requested and drawable, otherwise the JSON fallback.
void emit_polytope(const RunConfig& cfg, const Polytope& P, const json& doc, const std::vector<SvgLabel>& labels,
                   const std::string& title) {
  if (cfg.output_format == "svg") {
    if (!P.is_empty() && P.affine_dim() <= 2) {
      emit(cfg, render_svg(P, labels, title + " (seed " + std::to_string(cfg.seed) + ")"));
      return;
    }
    std::cerr << "warning: polytope has dimension " << P.affine_dim() << "; SVG needs <= 2, writing JSON\n";
  }
  if (cfg.output_format == "text") {
    std::ostringstream s;
    s << title << "\nseed " << cfg.seed << "\ndimension " << P.affine_dim() << "\nvertices";
    for (const auto& v : P.vertices()) s << " " << to_string(v);
    s << "\nedges " << (P.is_empty() ? 0 : edges(P).size()) << "\nfacets " << P.facets().size() << "\n";
    emit(cfg, s.str());
    return;
  }
  emit_json(cfg, doc);
}

Matrix load_or_sample(const std::string& matrix_path, const std::vector<size_t>& random_shape, const RunConfig& cfg) {
  if (!matrix_path.empty()) {
    if (!random_shape.empty()) throw UsageError("give either --matrix or --random, not both");
    return parse_matrix(read_input(matrix_path));
  }
  if (random_shape.size() != 2) throw UsageError("need --matrix FILE or --random D,N");
  std::mt19937_64 rng(cfg.seed);
  return random_full_rank_matrix(rng, random_shape[0], random_shape[1]);
}

// ---- commands ------------------------------------------------------------

void cmd_hypersimplex(const RunConfig& cfg, size_t d, size_t n, const std::vector<int>& rv) {
  check_hypersimplex_args(d, n);
  const auto r = parse_blocks(rv, n);
  const Polytope P = projected_hypersimplex(d, r);
  std::map<Vec, std::vector<std::string>> fibres;
  for (const auto& A : k_subsets(n, d)) fibres[r.image(A)].push_back(A.name(n));
  json images = json::array();
  std::vector<SvgLabel> labels;
  for (const auto& [pt, names] : fibres) {
    images.push_back({{"point", to_json(pt)}, {"count", names.size()}, {"subsets", names}});
    labels.push_back({pt, to_string(pt) + " x" + std::to_string(names.size())});
  }
  json doc{{"command", "hypersimplex"}, {"d", d}, {"n", n}, {"r", r.parts()}, {"polytope", to_json(P)},
           {"images", images}};
  emit_polytope(cfg, P, doc, labels, "lambda_" + r.to_string() + "(Delta(" + std::to_string(d) + "," + std::to_string(n) + "))");
}

void cmd_secondary(const RunConfig& cfg, size_t d, size_t n, const std::vector<int>& rv, unsigned jobs,
                   bool paper_order) {
  check_hypersimplex_args(d, n);
  const auto r = parse_blocks(rv, n);
  const auto A = weight_config(d, r);
  std::vector<size_t> order;
  if (paper_order) order = complementary_pair_order(d, n);
  else
    for (size_t i = 0; i < A.size(); ++i) order.push_back(i);

  EnumerationOptions opts{cfg.triangulation_cap, jobs};
  const auto ts = enumerate_triangulations(A, opts);
  std::vector<Vec> phis;
  json tri = json::array();
  for (const auto& T : ts) {
    const auto phi = char_function(T, A);
    phis.push_back(permute(to_point(phi), order));
    tri.push_back({{"cells", to_json(T)}, {"char_vector", char_vector_to_json(phi, A, order)}});
  }
  const Polytope S = hull(phis);
  json vertex_flags = json::array();
  for (const auto& p : phis) vertex_flags.push_back(S.has_vertex(p));
  json labels = json::array();
  for (size_t l : order) labels.push_back({{"label", l}, {"name", A[l].name}, {"point", to_json(A[l].coords)}});
  json lps = json::array();
  for (const auto& p : lattice_points(S)) lps.push_back(to_json(p));
  json doc{{"command", "secondary"},
           {"d", d},
           {"n", n},
           {"r", r.parts()},
           {"order", paper_order ? "complementary-pair" : "lexicographic"},
           {"labels", labels},
           {"count", ts.size()},
           {"triangulations", tri},
           {"is_secondary_vertex", vertex_flags},
           {"secondary", to_json(S)},
           {"secondary_lattice_points", lps}};
  std::vector<SvgLabel> svg;
  for (const auto& p : phis) svg.push_back({p, to_string(p)});
  emit_polytope(cfg, S, doc, svg, "secondary polytope");
}

// Prints a table unless --format json is given explicitly.
int cmd_verify(const RunConfig& cfg, const std::string& golden_path, const std::string& only, bool explicit_format) {
  json golden;
  if (golden_path.empty()) {
    golden = json::parse(default_golden_json());
  } else {
    try {
      golden = read_json(golden_path);
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  const auto results = verify_examples(golden, only);
  const bool ok = all_passed(results);
  if (cfg.output_format == "json" && explicit_format) {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"section", r.section}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    emit_json(cfg, {{"command", "verify-examples"}, {"results", rows}, {"passed", ok}});
  } else {
    std::ostringstream s;
    for (const auto& r : results) {
      s << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(9) << r.section << r.name;
      if (!r.detail.empty()) s << "  [" << r.detail << "]";
      s << "\n";
    }
    s << (ok ? "all checks passed" : "FAILURES") << " (" << results.size() << " checks, seed " << cfg.seed << ")\n";
    emit(cfg, s.str());
  }
  return ok ? 0 : 1;
}

void cmd_orbit(const RunConfig& cfg, const Matrix& M, const std::vector<int>& rv) {
  const auto r = parse_blocks(rv, M.cols());
  const Polytope P = orbit_polytope(M, r);
  const auto B = project_matroid(support_matroid(M), r);
  const auto idx = multiplicity_index(M, r);
  json doc{{"command", "orbit"}, {"matrix", to_json(M)}, {"r", r.parts()},      {"polytope", to_json(P)},
           {"polymatroid", to_json(B)}, {"multiplicity_index", idx ? json(idx->get_str()) : json("degenerate")}};
  std::vector<SvgLabel> labels;
  for (const auto& v : B.bases()) labels.push_back({to_point(v), to_string(to_point(v))});
  emit_polytope(cfg, P, doc, labels, "orbit polytope");
}

void cmd_gale(const RunConfig& cfg, const Matrix& M) {
  const Matrix G = gale_dual(M);
  if (cfg.output_format == "text") {
    std::ostringstream s;
    for (size_t i = 0; i < G.rows(); ++i) {
      for (size_t j = 0; j < G.cols(); ++j) s << (j ? " " : "") << to_string(G(i, j));
      s << "\n";
    }
    emit(cfg, s.str());
    return;
  }
  emit_json(cfg, {{"command", "gale"}, {"input", to_json(M)}, {"gale_dual", to_json(G)}});
}

void cmd_plucker(const RunConfig& cfg, const Matrix& M) {
  const PluckerVector p = plucker(M);
  bool ok = true;
  for (const auto& rel : three_term_relations(M.rows(), M.cols())) ok = ok && evaluate(rel, p) == 0;
  emit_json(cfg, {{"command", "plucker"}, {"plucker", to_json(p)}, {"matroid", to_json(support_matroid(p))},
                  {"three_term_relations_vanish", ok}});
}

void cmd_decompose(const RunConfig& cfg, const std::string& path) {
  const json in = read_json(path);
  std::vector<Polytope> cells;
  for (const auto& c : in.at("cells")) {
    std::vector<Vec> pts;
    for (const auto& p : c) pts.push_back(vec_from_json(p));
    cells.push_back(hull(pts));
  }
  std::vector<Vec> tp;
  for (const auto& p : in.at("target")) tp.push_back(vec_from_json(p));
  const Polytope target = hull(tp);
  json vols = json::array();
  for (const auto& c : cells) vols.push_back(normalized_volume(c).get_str());
  emit_json(cfg, {{"command", "decompose"},
                  {"cell_volumes", vols},
                  {"target_volume", normalized_volume(target).get_str()},
                  {"decomposition", decomposition_check(cells, target)}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polytopes, polymatroids and Plucker relations for torus quotients of Grassmannians"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed (POLYCHOW_SEED overrides)")->envname("POLYCHOW_SEED");
  app.add_option("--format", cfg.output_format, "json|svg|text")->capture_default_str();
  app.add_option("--output,-o", cfg.output_path, "Output file (default stdout)");

  size_t d = 0, n = 0;
  std::vector<int> r;
  unsigned jobs = 1;
  bool paper_order = false;
  std::string golden_path, only, matrix_path, bases_path, input_path;
  std::vector<size_t> random_shape;

  auto* hyp = app.add_subcommand("hypersimplex", "Projected hypersimplex lambda_r(Delta(d,n))");
  hyp->add_option("d", d)->required();
  hyp->add_option("n", n)->required();
  hyp->add_option("--r", r, "Block sizes, comma separated")->delimiter(',');

  auto* sec = app.add_subcommand("secondary", "Triangulations and secondary polytope of the weight multiset");
  sec->add_option("d", d)->required();
  sec->add_option("n", n)->required();
  sec->add_option("--r", r, "Block sizes, comma separated")->delimiter(',');
  sec->add_option("--cap", cfg.triangulation_cap, "Maximum number of labels")->check(CLI::PositiveNumber)->capture_default_str();
  sec->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sec->add_flag("--paper-order", paper_order, "Pair each subset containing 1 with its complement (n = 2d)");

  auto* ver = app.add_subcommand("verify-examples", "Run the golden checks of the worked examples");
  ver->add_option("--golden", golden_path, "Golden JSON file (default: built in)");
  ver->add_option("--only", only, "One of 3.1, 3.2, 3.3, fig1, exchange");

  auto* pm = app.add_subcommand("polymatroid", "Polymatroid operations");
  pm->require_subcommand(1);
  auto* pm_check = pm->add_subcommand("check", "Exchange property of a basis set");
  pm_check->add_option("--bases", bases_path, "JSON list of vectors or polymatroid object")->required();
  auto* pm_project = pm->add_subcommand("project", "Project a matroid onto block counts");
  pm_project->add_option("--matroid", bases_path, "Matroid JSON {n,d,bases}")->required();
  pm_project->add_option("--r", r)->delimiter(',')->required();
  auto* pm_lift = pm->add_subcommand("lift", "Lift a polymatroid to a matroid");
  pm_lift->add_option("--polymatroid", bases_path)->required();
  pm_lift->add_option("--r", r)->delimiter(',');
  auto* pm_dual = pm->add_subcommand("dual", "v -> caps - v");
  pm_dual->add_option("--polymatroid", bases_path)->required();
  auto* pm_poly = pm->add_subcommand("polytope", "Base polytope and the image-edge criterion");
  pm_poly->add_option("--bases", bases_path)->required();
  pm_poly->add_option("--r", r)->delimiter(',');

  auto* orb = app.add_subcommand("orbit", "Orbit polytope of a matrix under the block torus");
  orb->add_option("--matrix", matrix_path, "JSON or whitespace grid of p/q ('-' for stdin)");
  orb->add_option("--random", random_shape, "Sample a seeded full-rank D,N matrix")->delimiter(',')->expected(2);
  orb->add_option("--r", r)->delimiter(',');

  auto* gal = app.add_subcommand("gale", "Orthogonal complement of the row space");
  gal->add_option("--matrix", matrix_path);
  gal->add_option("--random", random_shape)->delimiter(',')->expected(2);

  auto* plk = app.add_subcommand("plucker", "Plucker vector and three-term relation check");
  plk->add_option("--matrix", matrix_path);
  plk->add_option("--random", random_shape)->delimiter(',')->expected(2);

  auto* dec = app.add_subcommand("decompose", "Check a polyhedral decomposition {cells, target}");
  dec->add_option("--input", input_path, "JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    check_format(cfg);
    if (*hyp) cmd_hypersimplex(cfg, d, n, r);
    else if (*sec) cmd_secondary(cfg, d, n, r, jobs, paper_order);
    else if (*ver) return cmd_verify(cfg, golden_path, only, app.get_option("--format")->count() > 0);
    else if (*pm_check) {
      const auto B = bases_from_json(read_json(bases_path));
      const bool ok = check_exchange(B);
      emit_json(cfg, {{"command", "polymatroid check"}, {"exchange", ok}});
    } else if (*pm_project) {
      const Matroid M = matroid_from_json(read_json(bases_path));
      emit_json(cfg, {{"command", "polymatroid project"}, {"polymatroid", to_json(project_matroid(M, parse_blocks(r, M.n())))}});
    } else if (*pm_lift) {
      const Polymatroid B = polymatroid_from_json(read_json(bases_path));
      const BlockStructure blocks = r.empty() ? BlockStructure(B.caps()) : BlockStructure(r);
      emit_json(cfg, {{"command", "polymatroid lift"}, {"matroid", to_json(lift_polymatroid(B, blocks))}});
    } else if (*pm_dual) {
      const Polymatroid B = polymatroid_from_json(read_json(bases_path));
      emit_json(cfg, {{"command", "polymatroid dual"}, {"polymatroid", to_json(dual(B))}});
    } else if (*pm_poly) {
      const Polymatroid B = polymatroid_from_json(read_json(bases_path));
      const BlockStructure blocks = r.empty() ? BlockStructure(B.caps()) : BlockStructure(r);
      const Polytope P = base_polytope(B);
      const bool crit = is_polymatroid_polytope(P, static_cast<size_t>(B.rank()), blocks);
      emit_json(cfg, {{"command", "polymatroid polytope"}, {"polytope", to_json(P)}, {"exchange", check_exchange(B)},
                      {"image_criterion", crit}});
    } else if (*orb) cmd_orbit(cfg, load_or_sample(matrix_path, random_shape, cfg), r);
    else if (*gal) cmd_gale(cfg, load_or_sample(matrix_path, random_shape, cfg));
    else if (*plk) cmd_plucker(cfg, load_or_sample(matrix_path, random_shape, cfg));
    else if (*dec) cmd_decompose(cfg, input_path);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --cap)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
