#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hwm/agents/config.h"
#include "hwm/cli/commands.h"
#include "hwm/core/errors.h"
#include "hwm/data/clips.h"
#include "hwm/env/puppet_env.h"
#include "hwm/env/rewards.h"
#include "hwm/planning/mppi.h"

namespace py = pybind11;

namespace {

using namespace hwm;

// Fixed per-step rewards/terminations, used to check the scoring rule.
class StepTable : public LatentModel {
 public:
  StepTable(std::vector<double> r, std::vector<double> d, double v) : r_(std::move(r)), d_(std::move(d)), v_(v) {}
  int latent_dim() const override { return 1; }
  int action_dim() const override { return 1; }
  int obs_dim() const override { return 1; }
  Mat EncodeObs(const Mat& obs) const override { return Mat::Zero(obs.rows(), 1); }
  void Step(const Mat& z, const Mat&, Mat* z_next, Vec* reward, Vec* termination) const override {
    const auto t = static_cast<std::size_t>(z(0, 0));
    if (z_next) *z_next = z.array() + 1.0;
    if (reward) *reward = Vec::Constant(z.rows(), r_.at(t));
    if (termination) *termination = Vec::Constant(z.rows(), d_.at(t));
  }
  Mat SamplePolicy(const Mat& z, std::mt19937_64&) const override { return Mat::Zero(z.rows(), 1); }
  Vec TerminalValue(const Mat& z, std::mt19937_64&) const override { return Vec::Constant(z.rows(), v_); }

 private:
  std::vector<double> r_, d_;
  double v_;
};

py::tuple RunCliPy(const std::vector<std::string>& args) {
  std::vector<std::string> full = {"hwm"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_hwm, m) {
  m.doc() = "hierarchical world-model toolkit";

  m.def("run_cli", &RunCliPy, py::arg("args"), "Runs a CLI subcommand; returns (exit_code, stdout, stderr).");

  m.def(
      "score_table",
      [](std::vector<double> rewards, std::vector<double> terminations, double terminal_value, double discount,
         const std::string& weighting) {
        if (rewards.size() != terminations.size() || rewards.empty()) {
          throw py::value_error("rewards and terminations need the same non-zero length");
        }
        const int h = static_cast<int>(rewards.size());
        StepTable model(std::move(rewards), std::move(terminations), terminal_value);
        std::mt19937_64 rng(0);
        return ScoreRollout(model, Mat::Zero(1, 1), Mat::Zero(h, 1), discount, TerminationWeightingFromName(weighting),
                            rng);
      },
      py::arg("rewards"), py::arg("terminations"), py::arg("terminal_value"), py::arg("discount") = 0.97,
      py::arg("weighting") = "survival");

  m.def("tracking_reward", [](double err_sq) { return TrackingReward(err_sq); }, py::arg("err_sq"));
  m.def("rest_height", [] { return BodyParams{}.RestHeight(); });
  m.def("task_names", [] {
    std::vector<std::string> names;
    for (TaskId t : {TaskId::kStand, TaskId::kWalk, TaskId::kRun, TaskId::kCorridor, TaskId::kHurdles, TaskId::kWalls,
                     TaskId::kGaps, TaskId::kStairs}) {
      names.emplace_back(TaskName(t));
    }
    return names;
  });

  m.def(
      "generate_clips",
      [](int count, unsigned long long seed) {
        py::list out;
        for (const auto& c : GenerateClips(count, seed)) {
          py::dict d;
          d["id"] = c.id;
          d["family"] = c.family;
          d["length"] = c.length();
          d["period"] = c.period;
          d["offsets"] = Mat(c.offsets);
          out.append(d);
        }
        return out;
      },
      py::arg("count") = 24, py::arg("seed") = 1);

  py::class_<PuppetEnv>(m, "PuppetEnv")
      .def(py::init([](const std::string& task) { return PuppetEnv(TaskSpec::Default(TaskFromName(task))); }),
           py::arg("task") = "gaps")
      .def("reset", &PuppetEnv::Reset, py::arg("seed"))
      .def("step",
           [](PuppetEnv& e, const Vec& action) {
             const StepResult r = e.Step(action);
             return py::make_tuple(r.reward, r.terminal, r.truncated);
           })
      .def("observation", &PuppetEnv::Observation)
      .def_property_readonly("done", &PuppetEnv::done)
      .def_property_readonly("t", &PuppetEnv::t)
      .def_property_readonly("torso", [](const PuppetEnv& e) { return py::make_tuple(e.state().pos.x(), e.state().pos.y()); })
      .def("ground_height", [](const PuppetEnv& e, double x) { return e.terrain().Height(x); });

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
}
