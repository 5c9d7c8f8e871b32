// Python module: coins, walks, moments, cavity runs and the CLI run driver.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwalk/analysis.hpp"
#include "qwalk/optics.hpp"
#include "qwalk/run.hpp"
#include "qwalk/walk.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

py::dict as_arrays(const ProbabilityDistribution& dist) {
  std::vector<std::int64_t> m;
  std::vector<double> p, pr, pl;
  for (const auto& e : dist.entries) {
    m.push_back(e.position);
    p.push_back(e.p);
    pr.push_back(e.p_right);
    pl.push_back(e.p_left);
  }
  py::dict out;
  out["m"] = py::array_t<std::int64_t>(static_cast<py::ssize_t>(m.size()), m.data());
  out["P"] = py::array_t<double>(static_cast<py::ssize_t>(p.size()), p.data());
  out["P_R"] = py::array_t<double>(static_cast<py::ssize_t>(pr.size()), pr.data());
  out["P_L"] = py::array_t<double>(static_cast<py::ssize_t>(pl.size()), pl.data());
  out["steps"] = dist.steps;
  out["resolution"] = dist.resolution;
  return out;
}

InitialCoinState to_init(Amplitude alpha, Amplitude beta) { return {alpha, beta}; }

}  // namespace

PYBIND11_MODULE(_qwalk, mod) {
  mod.doc() = "Coined quantum walks and optical cavity simulations";

  py::class_<CoinOperator>(mod, "CoinOperator")
      .def(py::init([](Amplitude a, Amplitude b, Amplitude c, Amplitude d) { return CoinOperator{a, b, c, d}; }),
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
      .def_readwrite("a", &CoinOperator::a)
      .def_readwrite("b", &CoinOperator::b)
      .def_readwrite("c", &CoinOperator::c)
      .def_readwrite("d", &CoinOperator::d)
      .def("determinant", &CoinOperator::determinant)
      .def("adjoint", &CoinOperator::adjoint)
      .def("is_valid", [](const CoinOperator& u) { return validate_coin(u).valid; })
      .def("__matmul__", [](const CoinOperator& x, const CoinOperator& y) { return x * y; })
      .def("__repr__", [](const CoinOperator& u) {
        return "CoinOperator(" + py::repr(py::cast(u.a)).cast<std::string>() + ", " +
               py::repr(py::cast(u.b)).cast<std::string>() + ", " + py::repr(py::cast(u.c)).cast<std::string>() +
               ", " + py::repr(py::cast(u.d)).cast<std::string>() + ")";
      });

  mod.def("hadamard", &make_hadamard);
  mod.def("konno_coin", &make_konno_coin, py::arg("a"), py::arg("b"), py::arg("delta"));
  mod.def("galton_coin", &make_galton_coin, py::arg("delta"));

  py::enum_<StepOrdering>(mod, "StepOrdering")
      .value("COIN_AFTER_SHIFT", StepOrdering::CoinAfterShift)
      .value("SHIFT_AFTER_COIN", StepOrdering::ShiftAfterCoin);

  mod.def(
      "walk",
      [](const CoinOperator& coin, Amplitude alpha, Amplitude beta, std::int64_t steps, std::optional<std::int64_t> M,
         Position origin, StepOrdering ordering) {
        const WalkTopology topology = M ? WalkTopology::circle(*M) : WalkTopology::line();
        return as_arrays(probabilities(evolve(initial_state(topology, origin, to_init(alpha, beta)), coin, ordering, steps)));
      },
      py::arg("coin"), py::arg("alpha"), py::arg("beta"), py::arg("steps"), py::arg("M") = py::none(),
      py::arg("origin") = 0, py::arg("ordering") = StepOrdering::CoinAfterShift,
      "Distribution after `steps` steps on the line, or on a circle of 2M+1 sites.");

  py::class_<MomentReport>(mod, "MomentReport")
      .def_readonly("mean", &MomentReport::mean)
      .def_readonly("second_moment", &MomentReport::second_moment)
      .def_readonly("variance", &MomentReport::variance)
      .def_readonly("std_dev", &MomentReport::std_dev)
      .def("__repr__", [](const MomentReport& r) {
        return "MomentReport(mean=" + std::to_string(r.mean) + ", std_dev=" + std::to_string(r.std_dev) + ")";
      });

  auto from_arrays = [](py::dict d) {
    ProbabilityDistribution dist;
    const auto m = d["m"].cast<std::vector<std::int64_t>>();
    const auto p = d["P"].cast<std::vector<double>>();
    if (m.size() != p.size()) throw py::value_error("m and P differ in length");
    dist.steps = d.contains("steps") ? d["steps"].cast<std::int64_t>() : 0;
    dist.resolution = d.contains("resolution") ? d["resolution"].cast<std::int64_t>() : 1;
    for (std::size_t i = 0; i < m.size(); ++i) dist.entries.push_back({m[i], p[i], 0.0, 0.0});
    return dist;
  };

  mod.def("classical_distribution", [](std::int64_t n) { return as_arrays(classical_rw_distribution(n)); },
          py::arg("steps"));
  mod.def("moments", [=](py::dict d) { return moments(from_arrays(d)); }, py::arg("distribution"));
  mod.def("total_variation", [=](py::dict x, py::dict y) { return total_variation(from_arrays(x), from_arrays(y)); });
  mod.def(
      "konno_predicted_moments",
      [](const CoinOperator& u, Amplitude alpha, Amplitude beta, std::int64_t n) {
        return konno_predicted_moments(u, to_init(alpha, beta), n);
      },
      py::arg("coin"), py::arg("alpha"), py::arg("beta"), py::arg("steps"));
  mod.def(
      "walk_asymptotic_moments",
      [](const CoinOperator& u, Amplitude alpha, Amplitude beta, std::int64_t n, StepOrdering ordering) {
        return walk_asymptotic_moments(u, to_init(alpha, beta), n, ordering);
      },
      py::arg("coin"), py::arg("alpha"), py::arg("beta"), py::arg("steps"),
      py::arg("ordering") = StepOrdering::CoinAfterShift);
  mod.def(
      "galton_predicted_moments",
      [](double delta, Amplitude alpha, Amplitude beta, std::int64_t n) {
        return galton_predicted_moments(delta, to_init(alpha, beta), n);
      },
      py::arg("delta"), py::arg("alpha"), py::arg("beta"), py::arg("steps"));

  mod.def(
      "cavity",
      [](const std::string& design, std::int64_t steps, std::int64_t f, Amplitude alpha, Amplitude beta,
         std::optional<std::int64_t> M, bool every_roundtrip, std::optional<double> galton_delta, Position origin) {
        optics::CavityConfig c;
        const auto parsed = cli::parse_design(design);
        if (!parsed) throw py::value_error("unknown design '" + design + "'");
        c.design = *parsed;
        c.roundtrips_per_step = f;
        c.topology = M ? WalkTopology::circle(*M) : WalkTopology::line();
        c.gating = every_roundtrip ? optics::CoinGating::EveryRoundtrip : optics::CoinGating::EveryFRoundtrips;
        c.galton_delta = galton_delta;
        return as_arrays(optics::spectrum(optics::run_cavity(optics::inject(c, origin, to_init(alpha, beta)), c, steps)));
      },
      py::arg("design"), py::arg("steps"), py::arg("f") = 1, py::arg("alpha") = Amplitude(1.0),
      py::arg("beta") = Amplitude(0.0), py::arg("M") = py::none(), py::arg("every_roundtrip") = false,
      py::arg("galton_delta") = py::none(), py::arg("origin") = 0,
      "Output spectrum of an element-level cavity run; `m` is in frequency-grid units of `resolution` per step.");

}
