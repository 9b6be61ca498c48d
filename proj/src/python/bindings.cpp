// Python module radar._core. Points go in and out as numpy arrays: 1-D for
// Euclidean and Poincare points, n x n for the SPD kinds.
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "radar/config.hpp"
#include "radar/errors.hpp"
#include "radar/game.hpp"
#include "radar/hedge.hpp"
#include "radar/means.hpp"
#include "radar/runner.hpp"
#include "radar/suites.hpp"

namespace py = pybind11;
using namespace radar;

namespace {

bool is_matrix_kind(ManifoldKind k) { return k == ManifoldKind::SpdAffine || k == ManifoldKind::DiagSpd; }

class PyManifold {
 public:
  PyManifold(const std::string& kind, int dim) : m_(make_manifold({manifold_kind_from_string(kind), dim})) {}

  std::string kind() const { return to_string(m_->kind()); }
  int dim() const { return m_->dim(); }
  double curvature() const { return m_->curvature(); }

  Point pt(const Eigen::MatrixXd& c) const { return m_->point(shape(c)); }
  Tangent tan(const Point& x, const Eigen::MatrixXd& c) const { return m_->tangent(x, shape(c)); }

  // numpy hands 1-D arrays over as n x 1 or 1 x n depending on layout
  Eigen::MatrixXd shape(const Eigen::MatrixXd& c) const {
    if (!is_matrix_kind(m_->kind()) && c.rows() == 1 && c.cols() > 1) return c.transpose();
    return c;
  }
  py::object out(const Eigen::MatrixXd& c) const {
    if (is_matrix_kind(m_->kind())) return py::cast(c);
    return py::cast(Eigen::VectorXd(c.col(0)));
  }

  py::object origin() const { return out(m_->origin().coords); }
  py::object exp(const Eigen::MatrixXd& x, const Eigen::MatrixXd& v) const {
    const Point p = pt(x);
    return out(m_->exp(p, tan(p, v)).coords);
  }
  py::object log(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) const {
    return out(m_->log(pt(x), pt(y)).coords);
  }
  double dist(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) const { return m_->dist(pt(x), pt(y)); }
  double inner(const Eigen::MatrixXd& x, const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) const {
    const Point p = pt(x);
    return m_->inner(p, tan(p, u), tan(p, v));
  }
  py::object transport(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, const Eigen::MatrixXd& v) const {
    const Point p = pt(x);
    return out(m_->transport(p, pt(y), tan(p, v)).coords);
  }
  py::object project(const Eigen::MatrixXd& center, double radius, const Eigen::MatrixXd& x) const {
    return out(GeodesicBall(m_, pt(center), radius).project(pt(x)).coords);
  }
  py::object mean(const std::vector<Eigen::MatrixXd>& pts, const Eigen::VectorXd& w, const std::string& kind) const {
    std::vector<Point> ps;
    for (const auto& c : pts) ps.push_back(pt(c));
    if (kind == "frechet") return out(frechet_mean(*m_, ps, w).coords);
    if (kind == "geodesic") return out(geodesic_mean(*m_, ps, w).coords);
    throw DomainError("mean must be 'frechet' or 'geodesic'");
  }

 private:
  std::shared_ptr<const Manifold> m_;
};

// Runs one config in memory; returns (trace csv, summary json) per repetition.
std::vector<std::pair<std::string, std::string>> run_json(const std::string& text, std::optional<std::uint64_t> seed,
                                                          std::optional<int> reps) {
  RunConfig cfg = parse_run_config(text);
  if (seed) cfg.seed = *seed;
  if (reps) {
    if (*reps < 1) throw DomainError("reps must be at least 1");
    cfg.reps = *reps;
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (int k = 0; k < cfg.reps; ++k) {
    Scenario s = build_scenario(cfg, cfg.seed + k);
    const RunOutcome r = run_algorithm(s, RunOptions{cfg.algorithm, cfg.mode, cfg.mean, cfg.eta});
    out.emplace_back(trace_csv(r.trace), summary_json(r, s, cfg));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Adaptive dynamic-regret learners on Riemannian manifolds";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<PyManifold>(m, "Manifold")
      .def(py::init<const std::string&, int>(), py::arg("kind"), py::arg("dim"))
      .def_property_readonly("kind", &PyManifold::kind)
      .def_property_readonly("dim", &PyManifold::dim)
      .def_property_readonly("curvature", &PyManifold::curvature)
      .def("origin", &PyManifold::origin)
      .def("exp", &PyManifold::exp, py::arg("x"), py::arg("v"))
      .def("log", &PyManifold::log, py::arg("x"), py::arg("y"))
      .def("dist", &PyManifold::dist, py::arg("x"), py::arg("y"))
      .def("inner", &PyManifold::inner, py::arg("x"), py::arg("u"), py::arg("v"))
      .def("transport", &PyManifold::transport, py::arg("x"), py::arg("y"), py::arg("v"))
      .def("project", &PyManifold::project, py::arg("center"), py::arg("radius"), py::arg("x"),
           "nearest point of the geodesic ball B(center, radius)")
      .def("mean", &PyManifold::mean, py::arg("points"), py::arg("weights"), py::arg("kind") = "frechet");

  m.def("zeta", &zeta, py::arg("kappa"), py::arg("D"));
  m.def("hedge_update", &hedge_update, py::arg("w"), py::arg("losses"), py::arg("beta"));
  m.def("optimistic_hedge_weights", &optimistic_hedge_weights, py::arg("cumulative"), py::arg("hint"),
        py::arg("beta"));
  m.def("radar_initial_weights", &radar_initial_weights, py::arg("n"));

  m.def("run_json", &run_json, py::arg("config"), py::arg("seed") = py::none(), py::arg("reps") = py::none(),
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "play_game",
      [](int n, int T, std::vector<double> budgets, double D) {
        if (budgets.size() == 1) budgets.assign(T, budgets.front());
        const game::GameConfig cfg{n, T, budgets, D};
        const game::GameResult r = game::play_game(cfg, game::optimal_player(), game::optimal_adversary());
        return py::dict(py::arg("regret") = r.regret, py::arg("value") = r.value,
                        py::arg("lifted_regret") = game::lifted_regret(cfg, r));
      },
      py::arg("n"), py::arg("T"), py::arg("budgets"), py::arg("D") = 2.0);

  m.def(
      "verify",
      [](const std::string& suite) {
        std::vector<std::tuple<int, std::string, bool, std::string>> out;
        for (const auto& r : suites::run_suite(suite)) out.emplace_back(r.id, r.name, r.passed, r.detail);
        return out;
      },
      py::arg("suite"), py::call_guard<py::gil_scoped_release>());
}
