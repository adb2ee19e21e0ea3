#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arena/algorithms.hpp"
#include "arena/gateway.hpp"
#include "arena/guest_programs.hpp"
#include "arena/rl_math.hpp"
#include "arena/sandbox.hpp"
#include "arena/taskgen.hpp"
#include "arena/unlearn.hpp"
#include "arena/verdict.hpp"

namespace py = pybind11;
using namespace arena;

namespace {

Verdict verdict_from_message(const std::string& message) {
    auto v = parse_verdict(message);
    if (!v) throw std::invalid_argument("not a canonical verdict message: " + message);
    return *v;
}

py::dict verdict_to_dict(const Verdict& v) {
    py::dict d;
    d["kind"] = std::string(verdict_kind_name(v.kind));
    d["message"] = v.message;
    d["case_no"] = v.case_no;
    d["total_cases"] = v.total_cases;
    d["max_time_s"] = v.max_time_s;
    d["limit_s"] = v.limit_s;
    d["detail"] = v.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of the arena reinvention harness.";

    m.def("algorithms", [] {
        std::vector<std::string> names;
        for (AlgorithmId id : kAllAlgorithms) names.emplace_back(algorithm_name(id));
        return names;
    });

    m.def("solve_reference",
          [](const std::string& algo, const std::string& input) {
              return solve_reference(algorithm_from_name(algo), input);
          },
          py::arg("algo"), py::arg("input"));

    m.def("solve_naive",
          [](const std::string& algo, const std::string& input) {
              return solve_naive(algorithm_from_name(algo), input);
          },
          py::arg("algo"), py::arg("input"));

    m.def("generate_bundle_jsonl",
          [](const std::string& algo, int variants, uint64_t seed) {
              std::string out;
              for (const auto& spec : generate_bundle(algorithm_from_name(algo), variants, seed)) {
                  out += task_spec_to_json(spec);
                  out += '\n';
              }
              return out;
          },
          py::arg("algo"), py::arg("variants") = 8, py::arg("seed") = 0);

    m.def("run_submission",
          [](const std::string& guest_code, const std::string& spec_json,
             const std::string& runtime) {
              SandboxConfig cfg;
              cfg.runtime_cmd = runtime;
              const Sandbox sandbox(cfg);
              const TaskSpec spec = task_spec_from_json(spec_json);
              return verdict_to_dict(sandbox.run_submission(guest_code, spec));
          },
          py::arg("guest_code"), py::arg("spec_json"), py::arg("runtime") = "python3");

    m.def("reference_guest_code", [](const std::string& algo) {
        return guest_program(algorithm_from_name(algo)).reference;
    });

    m.def("parse_verdict",
          [](const std::string& message) { return verdict_to_dict(verdict_from_message(message)); });

    m.def("reward",
          [](int k, int c, int u) { return reward(JudgeVerdict{k, c, u}); },
          py::arg("k"), py::arg("c"), py::arg("u"));

    m.def("group_advantages", &group_advantages, py::arg("rewards"),
          py::arg("std_floor") = 1e-6);
    m.def("calibrated_advantages", &calibrated_advantages, py::arg("rewards"),
          py::arg("std_floor") = 1e-6);
    m.def("clipped_surrogate", &clipped_surrogate, py::arg("ratio"), py::arg("advantage"),
          py::arg("epsilon"));
    m.def("kl_penalty", &kl_penalty, py::arg("logp_theta"), py::arg("logp_ref"));
    m.def("ttrl_reward",
          [](const std::string& verdict_message) {
              return ttrl_reward(verdict_from_message(verdict_message));
          },
          py::arg("verdict_message"));

    m.def("extract_json_block",
          [](const std::string& text) { return extract_json_block(text).dump(); });

    m.def("render_judge_prompt",
          [](const std::string& algo, const std::string& query, const std::string& response) {
              return render_judge_prompt(algorithm_from_name(algo), query, response);
          });

    m.def("aggregate_labels", &aggregate_labels, py::arg("labels"));
}
