#include "radar/config.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>

#include "radar/errors.hpp"

namespace radar {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const char* where) {
  if (!j.contains(key)) throw DomainError(std::string(where) + " is missing '" + key + "'");
  return j.at(key);
}

ManifoldSpec parse_manifold(const json& j) {
  if (j.is_string()) return {manifold_kind_from_string(j.get<std::string>()), 2};
  ManifoldSpec spec{manifold_kind_from_string(need(j, "kind", "manifold").get<std::string>()), 2};
  spec.dim = j.value("dim", 2);
  if (spec.dim < 1) throw DomainError("manifold dim must be positive");
  return spec;
}

Point parse_point(const Manifold& m, const json& j) {
  if (j.is_string() && j.get<std::string>() == "origin") return m.origin();
  if (!j.is_array()) throw DomainError("points are arrays of numbers (or \"origin\")");
  const int n = m.dim();
  const bool matrix = m.kind() == ManifoldKind::SpdAffine || m.kind() == ManifoldKind::DiagSpd;
  if (!matrix) {
    if (static_cast<int>(j.size()) != n) throw DomainError("point has the wrong length for the manifold");
    Eigen::MatrixXd c(n, 1);
    for (int i = 0; i < n; ++i) c(i, 0) = j[i].get<double>();
    return m.point(c);
  }
  if (static_cast<int>(j.size()) != n) throw DomainError("matrix point has the wrong size for the manifold");
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  if (j[0].is_array()) {
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(j[i].size()) != n) throw DomainError("matrix point rows must have length n");
      for (int k = 0; k < n; ++k) c(i, k) = j[i][k].get<double>();
    }
  } else {
    // a flat list is read as the diagonal
    for (int i = 0; i < n; ++i) c(i, i) = j[i].get<double>();
  }
  return m.point(c);
}

CustomRound parse_round(const Manifold& m, const json& j) {
  CustomRound r;
  for (const auto& a : need(j, "anchors", "custom round")) r.anchors.push_back(parse_point(m, a));
  if (r.anchors.empty()) throw DomainError("custom round needs at least one anchor");
  const int n = static_cast<int>(r.anchors.size());
  if (j.contains("weights")) {
    const auto w = j.at("weights").get<std::vector<double>>();
    if (static_cast<int>(w.size()) != n) throw DomainError("custom round weights and anchors differ in length");
    r.weights = Eigen::Map<const Eigen::VectorXd>(w.data(), n);
  } else {
    r.weights = Eigen::VectorXd::Constant(n, 1.0 / n);
  }
  return r;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  RunConfig c;
  c.raw = j.dump();
  try {
    c.algorithm = j.value("algorithm", c.algorithm);
    c.mode = tuning_mode_from_string(j.value("tuning_mode", std::string("oracle")));
    const std::string mean = j.value("mean", std::string("frechet"));
    if (mean == "frechet") c.mean = MeanKind::Frechet;
    else if (mean == "geodesic") c.mean = MeanKind::Geodesic;
    else throw DomainError("mean must be 'frechet' or 'geodesic'");
    if (j.contains("eta")) c.eta = j.at("eta").get<double>();
    c.delta = j.value("delta", c.delta);
    c.T = need(j, "T", "config").get<int>();
    c.seed = j.value("seed", std::uint64_t{0});
    c.reps = j.value("reps", 1);
    need(j, "scenario", "config");
  } catch (const json::exception& e) {
    throw DomainError(std::string("config field has the wrong type: ") + e.what());
  }
  if (c.T < 1) throw DomainError("T must be at least 1");
  if (c.reps < 1) throw DomainError("reps must be at least 1");
  // fail now, not after the first repetition
  validate_run(build_scenario(c, c.seed), RunOptions{c.algorithm, c.mode, c.mean, c.eta});
  return c;
}

Scenario build_scenario(const RunConfig& cfg, std::uint64_t seed) {
  const json j = json::parse(cfg.raw);
  const json& sc = j.at("scenario");
  const std::string kind = sc.is_string() ? sc.get<std::string>() : need(sc, "kind", "scenario").get<std::string>();
  const json opts = sc.is_object() ? sc : json::object();

  auto reject_manifold = [&](ManifoldKind expected) {
    if (j.contains("manifold") && parse_manifold(j.at("manifold")).kind != expected)
      throw DomainError("scenario '" + kind + "' runs on " + to_string(expected));
    if (j.contains("decision_set"))
      throw DomainError("scenario '" + kind + "' defines its own decision set; drop 'decision_set'");
  };

  try {
    if (kind == "drifting_mean") {
      reject_manifold(ManifoldKind::PoincareBall);
      int dim = opts.value("dim", 2);
      if (j.contains("manifold") && j.at("manifold").is_object()) dim = j.at("manifold").value("dim", dim);
      return gen_drifting_mean(cfg.T, dim, cfg.delta, seed);
    }
    if (kind == "alternating") {
      reject_manifold(ManifoldKind::PoincareBall);
      return gen_alternating(cfg.T, opts.value("n", 4), opts.value("alpha", 0.5), cfg.delta, seed);
    }
    if (kind == "adversarial_game" || kind == "adversarial-game") {
      reject_manifold(ManifoldKind::DiagSpd);
      const int n = opts.value("n", 3);
      std::vector<double> budgets;
      const json b = opts.value("budgets", json(1.0));
      if (b.is_number()) budgets.assign(cfg.T, b.get<double>());
      else budgets = b.get<std::vector<double>>();
      return gen_adversarial_game(n, cfg.T, budgets, opts.value("D", 2.0), seed);
    }
    if (kind == "custom") {
      const auto m = make_manifold(parse_manifold(need(j, "manifold", "custom scenario")));
      const json& ds = need(j, "decision_set", "custom scenario");
      const Point center = parse_point(*m, ds.value("center", json("origin")));
      CustomSpec spec{.manifold = m,
                      .set = GeodesicBall(m, center, need(ds, "radius", "decision_set").get<double>())};
      spec.T = cfg.T;
      spec.delta = cfg.delta;
      spec.seed = seed;
      const std::string loss = opts.value("loss", std::string("squared_distance"));
      if (loss == "zero") {
        // no rounds: all-zero losses
      } else if (loss != "squared_distance") {
        throw DomainError("custom scenario loss must be 'squared_distance' or 'zero'");
      } else if (opts.contains("rounds")) {
        for (const auto& r : opts.at("rounds")) spec.rounds.push_back(parse_round(*m, r));
      } else {
        spec.rounds.push_back(parse_round(*m, opts));
      }
      spec.comparator = opts.value("comparator", spec.comparator);
      if (opts.contains("fixed_point")) spec.fixed_point = parse_point(*m, opts.at("fixed_point"));
      spec.segments = opts.value("segments", 1);
      return gen_custom(spec);
    }
  } catch (const json::exception& e) {
    throw DomainError("scenario field has the wrong type: " + std::string(e.what()));
  }
  throw DomainError("unknown scenario kind '" + kind + "'");
}

std::string summary_json(const RunOutcome& r, const Scenario& s, const RunConfig& cfg) {
  const RegretSummary sum = summarize(r.trace);
  int violations = 0;
  for (const auto& row : r.trace) violations += !row.bound_ok;
  json out;
  out["schema"] = 1;
  out["algorithm"] = r.algorithm;
  out["tuning_mode"] = to_string(r.mode);
  out["mean"] = cfg.mean == MeanKind::Frechet ? "frechet" : "geodesic";
  out["scenario"] = {{"kind", s.kind},     {"T", s.T},
                     {"seed", s.seed},     {"comparator_rule", s.comparator_rule},
                     {"notes", s.notes}};
  out["manifold"] = {{"kind", to_string(s.manifold->kind())},
                     {"dim", s.manifold->dim()},
                     {"curvature_lower_bound", s.manifold->curvature()}};
  out["constants"] = {{"G", s.G},
                      {"L", s.L},
                      {"delta", s.delta},
                      {"margin", s.delta * s.G},
                      {"d_eval", s.d_eval},
                      {"D", r.D},
                      {"D_meta", r.D_meta},
                      {"zeta", r.zeta},
                      {"eta_grid", r.etas},
                      {"n_omd_experts", r.n_omd},
                      {"beta", r.beta},
                      {"tau", r.tau}};
  out["metrics"] = {{"P_T", sum.P_T},
                    {"V_T_proxy", sum.V_T_proxy},
                    {"F_T", sum.F_T},
                    {"final_regret", sum.regret},
                    {"V_T_probe", r.V_T_probe},
                    {"probe_count", r.probe_count},
                    {"probe_seed", r.probe_seed},
                    {"F_bar_first_pass", r.F_bar_pass1}};
  out["bound"] = {{"applicable", r.bound_applicable},
                  {"final_value", finite_or_null(r.trace.empty() ? 0.0 : r.trace.back().bound_value)},
                  {"violations", violations}};
  out["confinement"] = {{"plays", r.confined_play_fraction}, {"omd_anchors", r.confined_anchor_fraction}};
  out["config"] = json::parse(cfg.raw);
  return out.dump(2) + "\n";
}

std::vector<RunFiles> run_config(const RunConfig& cfg, const std::filesystem::path& out) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec || !fs::is_directory(out)) throw DomainError("cannot create output directory " + out.string());

  std::vector<RunFiles> files;
  for (int k = 0; k < cfg.reps; ++k) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
    Scenario s = build_scenario(cfg, seed);
    const RunOutcome r = run_algorithm(s, {.algorithm = cfg.algorithm, .mode = cfg.mode, .mean = cfg.mean, .eta = cfg.eta});
    RunFiles f;
    f.csv = out / ("trace_" + std::to_string(seed) + ".csv");
    f.json = out / ("summary_" + std::to_string(seed) + ".json");
    for (const auto& [path, body] : {std::pair{f.csv, trace_csv(r.trace)}, std::pair{f.json, summary_json(r, s, cfg)}}) {
      std::ofstream os(path, std::ios::binary);
      os << body;
      if (!os) throw DomainError("cannot write " + path.string());
    }
    f.final_regret = r.trace.empty() ? 0.0 : r.trace.back().cum_regret;
    for (const auto& row : r.trace) f.all_bounds_ok = f.all_bounds_ok && row.bound_ok;
    files.push_back(f);
  }
  return files;
}

}  // namespace radar
