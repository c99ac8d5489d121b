#include "qhs/cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "qhs/json_io.hpp"
#include "qhs/sphere4.hpp"
#include "qhs/spectrum.hpp"

namespace qhs::cli {

namespace {

/// Input problem attributable to one command-line argument.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  int n = 2;
  std::string xi;
  int level = 1;
  std::string space = "double";
  std::string axiom = "all";
  int samples = 20;
  double fd_step = 1e-4;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  bool json = false;
  std::string file;
  int torsion = 1;
};

template <typename F>
auto for_argument(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(name + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--file: cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("--file: " + std::string(e.what()));
  }
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << std::scientific << x;
  return s.str();
}

LieType require_type(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  return for_argument("--type", [&] {
    LieType t = LieType::parse(o.type);
    validate(t);
    return t;
  });
}

/// A-series accepts R^n coordinates as well as simple-root coordinates.
CartanVector parse_weight(const RootSystem& rs, std::string_view text, const std::string& arg) {
  return for_argument(arg, [&] {
    const RatVec v = parse_rational_list(text);
    if (rs.type().series == 'A' && v.size() == rs.rank() + 1) return from_ambient(rs, v);
    if (v.size() != rs.rank()) {
      throw Error(ErrorCode::dimension_mismatch, "expected " + std::to_string(rs.rank()) + " coordinates, got " +
                                                     std::to_string(v.size()));
    }
    return CartanVector(v);
  });
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

// --- verbs -----------------------------------------------------------------

struct Series {
  char series;
  int first_rank;
  int last_rank;
};

// Low ranks that coincide with another series (B2 = C2, D3 = A3) are listed under that series.
constexpr Series kTableRows[] = {{'A', 1, 8}, {'B', 3, 8}, {'C', 2, 8}, {'D', 4, 8}, {'E', 6, 6},
                                 {'E', 7, 7}, {'E', 8, 8}, {'F', 4, 4}, {'G', 2, 2}};

int run_table(const Options& o, std::ostream& out) {
  Json rows = Json::array();
  std::ostringstream text;
  for (const auto& row : kTableRows) {
    if (!o.type.empty()) {
      const LieType t = require_type(o);
      if (t.series != row.series || t.rank < row.first_rank || t.rank > row.last_rank) continue;
    }
    std::map<int, int> per_rank;
    std::set<int> levels;
    for (int r = row.first_rank; r <= row.last_rank; ++r) {
      const int k = minimal_integral_level(RootSystem(LieType{row.series, r}));
      per_rank[r] = k;
      levels.insert(k);
    }
    const bool family = row.first_rank != row.last_rank;
    const std::string label = family ? std::string(1, row.series) + "_d" : std::string(1, row.series) + std::to_string(row.first_rank);
    Json entry{{"group", label}};
    if (levels.size() == 1) {
      entry["level"] = *levels.begin();
    } else {
      entry["level"] = nullptr;
    }
    Json ranks = Json::object();
    for (const auto& [r, k] : per_rank) ranks[std::to_string(r)] = k;
    entry["per_rank"] = ranks;
    rows.push_back(entry);

    text << std::left << std::setw(5) << label << ' ';
    if (levels.size() == 1) {
      text << *levels.begin();
    } else {
      for (const auto& [r, k] : per_rank) text << r << ':' << k << ' ';
    }
    if (family) text << "   (d = " << row.first_rank << ".." << row.last_rank << ")";
    text << '\n';
  }
  out << (o.json ? Json{{"minimal_levels", rows}}.dump(2) + "\n" : text.str());
  return 0;
}

int run_vertices(const Options& o, std::ostream& out) {
  const RootSystem rs(require_type(o));
  const AlcoveModel model = alcove_vertices(rs);
  const bool a_series = rs.type().series == 'A';
  Json j = to_json(model);
  Json weights = Json::array();
  for (const auto& mu : model.vertices) weights.push_back(to_json(weight_coordinates(rs, mu)));
  j["fundamental_weight_coordinates"] = weights;
  j["marks"] = rs.marks();
  j["dual_coxeter"] = rs.dual_coxeter();
  j["positive_roots"] = rs.positive_roots().size();
  j["lowest_root"] = to_json(rs.lowest_root());
  j["lowest_root_height"] = height(rs, rs.lowest_root());
  j["minimal_level"] = minimal_integral_level(rs);
  j["vertices_in_weight_lattice"] = std::all_of(model.vertices.begin(), model.vertices.end(),
                                                [&](const auto& mu) { return weight_lattice_contains(rs, mu); });
  Json theta = Json::array();
  for (int i = 0; i <= rs.rank(); ++i)
    for (int k = i + 1; k <= rs.rank(); ++k)
      theta.push_back(Json{{"i", i}, {"j", k}, {"theta", to_json(theta_weight(rs, i, k))},
                           {"norm", to_json(inner_product(rs, theta_weight(rs, i, k), theta_weight(rs, i, k)))}});
  j["theta"] = theta;
  if (a_series) {
    const int n = rs.rank() + 1;
    Json ambient = Json::array();
    for (const auto& mu : model.vertices) ambient.push_back(to_json(to_ambient(rs, mu)));
    j["ambient_vertices"] = ambient;
    Json nu = Json::array();
    for (int i = 1; i <= n; ++i) nu.push_back(to_json(nu_weight(n, i)));
    j["nu"] = nu;
    j["mu_consistency"] = mu_consistency(n);
  }
  if (o.json) {
    out << j.dump(2) << '\n';
    return 0;
  }
  out << rs.type().name() << ": dual Coxeter " << rs.dual_coxeter() << ", minimal level " << minimal_integral_level(rs)
      << '\n';
  for (std::size_t v = 0; v < model.vertices.size(); ++v) {
    out << "mu_" << v << " = " << to_string(model.vertices[v]) << "  fundamental weights "
        << to_string(weight_coordinates(rs, model.vertices[v]));
    if (a_series) out << "  R^n " << to_string(to_ambient(rs, model.vertices[v]));
    out << '\n';
  }
  if (a_series) out << "mu_i = nu_1 + ... + nu_i: " << (mu_consistency(rs.rank() + 1) ? "true" : "false") << '\n';
  return 0;
}

int run_level_weights(const Options& o, std::ostream& out) {
  const RootSystem rs(require_type(o));
  const LevelWeightSet set = for_argument("--level", [&] { return level_weights(rs, o.level); });
  if (o.json) {
    out << to_json(set).dump(2) << '\n';
    return 0;
  }
  out << set.weights.size() << " weights at level " << set.level << " for " << rs.type().name() << '\n';
  for (const auto& mu : set.weights) out << "  " << to_string(weight_coordinates(rs, mu)) << '\n';
  return 0;
}

int run_check_class(const Options& o, std::ostream& out) {
  const RootSystem rs(require_type(o));
  if (o.xi.empty()) throw UsageError("--xi is required");
  const int k = o.level;
  std::vector<CartanVector> classes;
  for (const auto& part : split(o.xi, ';')) classes.push_back(parse_weight(rs, part, "--xi"));

  std::vector<PrequantVerdict> verdicts;
  Json factors = Json::array();
  for (const auto& xi : classes) {
    verdicts.push_back(for_argument("--xi", [&] { return class_prequantizable(rs, xi, k); }));
    Json f = to_json(verdicts.back());
    f["xi"] = to_json(xi);
    f["barycentric"] = to_json(barycentric_coordinates(rs, xi));
    f["open_faces"] = open_face_set(rs, xi);
    factors.push_back(f);
  }
  const bool torsion_ok = for_argument("--torsion", [&] { return torsion_level_admissible(o.torsion, k); });
  const bool answer = fusion_prequantizable(verdicts) && torsion_ok;

  if (o.json) {
    Json j{{"type", rs.type().name()}, {"level", k}, {"prequantizable", answer}, {"classes", factors}};
    if (o.torsion != 1) j["torsion"] = Json{{"r", o.torsion}, {"admissible", torsion_ok}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "prequantizable: " << (answer ? "true" : "false") << '\n';
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << "  xi = " << to_string(classes[c]) << ": " << (verdicts[c].answer ? "integral" : "not integral");
    if (verdicts[c].witness) out << ", witness k*xi = " << to_string(*verdicts[c].witness);
    if (!verdicts[c].violated.empty()) out << " (" << verdicts[c].violated << ")";
    out << '\n';
  }
  if (o.torsion != 1) out << "  torsion " << o.torsion << " at level " << k << ": " << (torsion_ok ? "ok" : "excluded") << '\n';
  return 0;
}

VerificationReport sphere4_equivariance(const Options& o) {
  VerificationReport report;
  report.axiom = Axiom::equivariance;
  report.samples = o.samples;
  report.tolerance = o.tol.value_or(default_tolerance(Axiom::equivariance));
  for (int i = 0; i < o.samples; ++i) {
    auto rng = sample_rng(o.seed, i);
    const S4Point p = sample_sphere4(rng);
    const Mat g = random_special_unitary(2, rng);
    const double r = max_abs(sphere4_moment(sphere4_act(g, p)) - adjoint_action(g, sphere4_moment(p)));
    report.max_residual = std::max(report.max_residual, r);
  }
  report.pass = report.max_residual < report.tolerance;
  return report;
}

int run_verify(const Options& o, std::ostream& out) {
  if (o.samples < 1) throw UsageError("--samples: must be at least 1");
  std::vector<Axiom> axioms;
  if (o.axiom == "all") {
    axioms = {Axiom::moment, Axiom::cocycle, Axiom::min_degeneracy, Axiom::equivariance};
  } else {
    axioms.push_back(for_argument("--axiom", [&] { return parse_axiom(o.axiom); }));
  }

  std::vector<VerificationReport> reports;
  std::string name;
  if (o.space == "sphere4") {
    if (axioms.size() != 1 && o.axiom != "all") throw UsageError("--axiom: sphere4 supports equivariance only");
    if (o.axiom != "all" && axioms[0] != Axiom::equivariance) throw UsageError("--axiom: sphere4 supports equivariance only");
    name = "sphere4";
    reports.push_back(sphere4_equivariance(o));
  } else {
    std::optional<RatVec> lambda;
    if (!o.xi.empty()) lambda = for_argument("--xi", [&] { return parse_rational_list(o.xi); });
    const QSpacePtr space = for_argument("--space", [&] { return make_space(o.space, o.n, lambda ? &*lambda : nullptr); });
    name = space->name();
    VerifyOptions vo;
    vo.samples = o.samples;
    vo.fd_step = o.fd_step;
    vo.tol = o.tol;
    vo.seed = o.seed;
    for (Axiom a : axioms) reports.push_back(for_argument("--fd-step", [&] { return verify_axiom(*space, a, vo); }));
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  if (o.json) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    out << Json{{"space", name}, {"seed", o.seed}, {"reports", list}}.dump(2) << '\n';
  } else {
    out << name << '\n';
    for (const auto& r : reports) {
      out << "  " << std::left << std::setw(15) << to_string(r.axiom) << (r.pass ? "PASS" : "FAIL") << "  max_residual "
          << fmt(r.max_residual) << " < " << fmt(r.tolerance) << "  (" << r.samples << " samples";
      if (r.resampled) out << ", " << r.resampled << " resampled";
      out << ")\n";
    }
  }
  return all_pass ? 0 : 1;
}

int run_cocycle(const Options& o, std::ostream& out) {
  Mat a;
  if (!o.file.empty()) {
    a = for_argument("--file", [&] { return matrix_from_json(read_json_file(o.file)); });
    if (!is_special_unitary(a, kInputTol)) throw UsageError("--file: matrix is not special unitary");
  } else {
    auto rng = sample_rng(o.seed, 0);
    a = random_special_unitary(o.n, rng);
  }
  const int n = static_cast<int>(a.rows());
  const Eigen::VectorXd lambda = q_map(a);
  const std::vector<int> cover = cover_index_set(a);
  // Index n of the cover doubles as index 0 of the flag.
  std::vector<int> flag_indices;
  for (int i : cover) flag_indices.push_back(i == n ? 0 : i);
  std::sort(flag_indices.begin(), flag_indices.end());

  Json triples = Json::array();
  bool all_pass = true;
  std::ostringstream text;
  for (std::size_t x = 0; x < flag_indices.size(); ++x)
    for (std::size_t y = x + 1; y < flag_indices.size(); ++y)
      for (std::size_t z = y + 1; z < flag_indices.size(); ++z) {
        const int i = flag_indices[x], j = flag_indices[y], k = flag_indices[z];
        const CocycleResult r = cocycle_check(a, i, j, k);
        all_pass = all_pass && r.pass;
        triples.push_back(Json{{"i", i}, {"j", j}, {"k", k}, {"coefficient", {r.coefficient.real(), r.coefficient.imag()}},
                               {"modulus", std::abs(r.coefficient)}, {"pass", r.pass}});
        text << "  (" << i << ", " << j << ", " << k << ")  |c| = " << std::setprecision(12) << std::abs(r.coefficient)
             << (r.pass ? "  PASS" : "  FAIL") << '\n';
      }
  if (o.json) {
    Json lines = Json::array();
    for (std::size_t x = 0; x + 1 < flag_indices.size(); ++x) {
      Json l = to_json(spectral_det_line(a, flag_indices[x], flag_indices[x + 1]));
      l["i"] = flag_indices[x];
      l["j"] = flag_indices[x + 1];
      lines.push_back(l);
    }
    out << Json{{"matrix", to_json(a)},
                {"q", std::vector<double>(lambda.data(), lambda.data() + lambda.size())},
                {"cover", cover},
                {"det_lines", lines},
                {"triples", triples}}
               .dump(2)
        << '\n';
  } else {
    out << "q(A) = (";
    for (Eigen::Index k = 0; k < lambda.size(); ++k) out << (k ? ", " : "") << std::setprecision(9) << lambda(k);
    out << ")\ncover indices:";
    for (int i : cover) out << ' ' << i;
    out << '\n' << text.str();
  }
  return all_pass ? 0 : 1;
}

int run_holonomy_convergence(const Options& o, std::ostream& out) {
  Json j;
  std::optional<Mat> file_holonomy;
  if (!o.file.empty()) {
    const PiecewiseConnection a = for_argument("--file", [&] { return connection_from_json(read_json_file(o.file)); });
    for (std::size_t k = 0; k < a.samples.size(); ++k)
      if (!is_algebra_element(a.samples[k], kInputTol)) {
        throw UsageError("--file: connection sample " + std::to_string(k) + " is not in su(n)");
      }
    file_holonomy = holonomy(a);
  }
  const SmoothGaugeData data = random_gauge_data(o.n, o.seed);
  const ConvergenceStudy study = holonomy_convergence(data);
  const bool pass = std::abs(study.order - 2.0) <= 0.3;
  if (o.json) {
    j = to_json(study);
    j["pass"] = pass;
    if (file_holonomy) j["holonomy"] = to_json(*file_holonomy);
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < study.steps.size(); ++k)
      out << "N = " << std::setw(4) << study.steps[k] << "  residual " << fmt(study.residuals[k]) << '\n';
    out << "fitted order " << std::fixed << std::setprecision(3) << study.order << (pass ? "  PASS" : "  FAIL") << '\n';
    if (file_holonomy) out << "holonomy of --file connection:\n" << *file_holonomy << '\n';
  }
  return pass ? 0 : 1;
}

/// (a, b, b, a) and commuting pairs make Psi = e on genus spaces.
Point level_set_point(const QSpace& space, int genus, std::mt19937_64& rng) {
  const int n = space.n();
  Point m;
  int remaining = genus;
  if (genus >= 2) {
    const Mat a = random_special_unitary(n, rng), b = random_special_unitary(n, rng);
    m = {a, b, b, a};
    remaining -= 2;
  }
  for (; remaining > 0; --remaining) {
    const Mat h = random_special_unitary(n, rng);
    const Mat a = adjoint_action(h, exp_algebra(project_to_algebra(Mat(random_algebra(n, rng).diagonal().asDiagonal()))));
    const Mat b = adjoint_action(h, exp_algebra(project_to_algebra(Mat(random_algebra(n, rng).diagonal().asDiagonal()))));
    m.push_back(a);
    m.push_back(b);
  }
  return m;
}

int run_reduce_rank(const Options& o, std::ostream& out) {
  const QSpacePtr space = for_argument("--space", [&] { return make_space(o.space, o.n); });
  Point m;
  if (!o.file.empty()) {
    const Json j = read_json_file(o.file);
    if (!j.is_array()) throw UsageError("--file: expected a list of matrices");
    for (std::size_t k = 0; k < j.size(); ++k) m.push_back(for_argument("--file", [&] { return matrix_from_json(j[k]); }));
  } else {
    if (!o.space.starts_with("genus:")) throw UsageError("--space: generated points need a genus:h space; use --file otherwise");
    auto rng = sample_rng(o.seed, 0);
    m = level_set_point(*space, space->factor_count() / 2, rng);
  }
  const int rank = for_argument("--file", [&] { return reduction_rank_check(*space, m, o.fd_step); });
  const int dim_g = o.n * o.n - 1;
  if (o.json) {
    out << Json{{"space", space->name()}, {"rank", rank}, {"dim_group", dim_g}, {"regular", rank == dim_g},
                {"level_set_dim", space->dim() - rank}}
               .dump(2)
        << '\n';
  } else {
    out << space->name() << ": rank dPsi = " << rank << " (dim G = " << dim_g << ", "
        << (rank == dim_g ? "regular" : "not regular") << ")\n";
  }
  return 0;
}

}  // namespace

const std::vector<VerbInfo>& verb_table() {
  static const std::vector<VerbInfo> table = {
      {"table", "minimal integral level per simple type", {"build_root_system", "alcove_vertices", "minimal_integral_level"}},
      {"vertices",
       "alcove vertices, marks and vertex weight differences",
       {"build_root_system", "alcove_vertices", "weight_lattice_contains", "minimal_integral_level", "theta_weight",
        "inner_product", "height", "nu_weight"}},
      {"level-weights", "the level-k weights", {"build_root_system", "level_weights"}},
      {"check-class",
       "pre-quantization of conjugacy classes and their fusion products",
       {"build_root_system", "alcove_contains", "class_prequantizable", "torsion_level_admissible",
        "fusion_prequantizable", "open_face_set"}},
      {"verify",
       "sampled residual checks of the quasi-Hamiltonian axioms",
       {"make_space", "verify_axiom", "maurer_cartan", "eval_eta", "sphere4_moment"}},
      {"cocycle",
       "eigenvalue cover and determinant-line cocycle at a matrix",
       {"q_map", "cover_index_set", "spectral_det_line", "cocycle_check"}},
      {"holonomy-convergence", "gauge equivariance of discrete holonomy", {"holonomy", "gauge_transform"}},
      {"reduce-rank", "rank of the moment map at a point of the identity level set",
       {"make_space", "reduction_rank_check"}},
  };
  return table;
}

Outcome dispatch(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Quasi-Hamiltonian spaces and the basic gerbe over SU(n)", "qhs"};
  app.require_subcommand(1);
  std::map<std::string, CLI::App*> verbs;
  for (const auto& v : verb_table()) verbs[v.verb] = app.add_subcommand(v.verb, v.summary);

  auto add_type = [&](CLI::App* s) { s->add_option("--type", o.type, "simple type, e.g. A2, E8"); };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "JSON output"); };
  auto add_seed = [&](CLI::App* s) { s->add_option("--seed", o.seed, "random seed")->capture_default_str(); };
  auto add_n = [&](CLI::App* s) { s->add_option("--n", o.n, "SU(n)")->capture_default_str()->check(CLI::Range(2, 12)); };
  auto add_file = [&](CLI::App* s) { s->add_option("--file", o.file, "JSON input file"); };

  add_type(verbs["table"]);
  add_json(verbs["table"]);

  add_type(verbs["vertices"]);
  add_json(verbs["vertices"]);

  add_type(verbs["level-weights"]);
  verbs["level-weights"]->add_option("--level", o.level, "level k")->capture_default_str();
  add_json(verbs["level-weights"]);

  add_type(verbs["check-class"]);
  verbs["check-class"]->add_option("--xi", o.xi, "p/q list; ';' separates fusion factors");
  verbs["check-class"]->add_option("--level", o.level, "level k")->capture_default_str();
  verbs["check-class"]->add_option("--torsion", o.torsion, "H_2 is r-torsion")->capture_default_str();
  add_json(verbs["check-class"]);

  auto* verify = verbs["verify"];
  verify->add_option("--space", o.space, "class | double | fused_double | genus:h | sphere4")->capture_default_str();
  add_n(verify);
  verify->add_option("--xi", o.xi, "class parameter in R^n, p/q list");
  verify->add_option("--axiom", o.axiom, "cocycle | moment | min_degeneracy | equivariance | all")->capture_default_str();
  verify->add_option("--samples", o.samples, "sample points")->capture_default_str();
  verify->add_option("--fd-step", o.fd_step, "finite-difference step")->capture_default_str();
  verify->add_option("--tol", o.tol, "residual tolerance");
  add_seed(verify);
  add_json(verify);

  add_n(verbs["cocycle"]);
  add_file(verbs["cocycle"]);
  add_seed(verbs["cocycle"]);
  add_json(verbs["cocycle"]);

  add_n(verbs["holonomy-convergence"]);
  add_file(verbs["holonomy-convergence"]);
  add_seed(verbs["holonomy-convergence"]);
  add_json(verbs["holonomy-convergence"]);

  auto* reduce = verbs["reduce-rank"];
  reduce->add_option("--space", o.space, "genus:h or another SU(n)-valued space")->capture_default_str();
  add_n(reduce);
  add_file(reduce);
  reduce->add_option("--fd-step", o.fd_step, "finite-difference step")->capture_default_str();
  add_seed(reduce);
  add_json(reduce);

  Outcome result;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    const std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "table") result.exit_code = run_table(o, out);
    else if (verb == "vertices") result.exit_code = run_vertices(o, out);
    else if (verb == "level-weights") result.exit_code = run_level_weights(o, out);
    else if (verb == "check-class") result.exit_code = run_check_class(o, out);
    else if (verb == "verify") result.exit_code = run_verify(o, out);
    else if (verb == "cocycle") result.exit_code = run_cocycle(o, out);
    else if (verb == "holonomy-convergence") result.exit_code = run_holonomy_convergence(o, out);
    else if (verb == "reduce-rank") result.exit_code = run_reduce_rank(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = 2;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace qhs::cli
