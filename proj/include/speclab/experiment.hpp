#ifndef SPECLAB_EXPERIMENT_HPP
#define SPECLAB_EXPERIMENT_HPP

#include <string>

#include "speclab/config.hpp"
#include "speclab/report.hpp"

namespace speclab {

struct RunResult {
    int exit_code = 0;  // 0: all checks hold; 2: some inequality/identity check failed
    Report report;
};

/// Executes the experiment and writes report.json / report.csv into
/// cfg.output_dir. Deterministic for a fixed (config, seed) pair. Solver
/// failures are recorded per rung or instance and the run continues with
/// exit code 2.
RunResult run_experiment(const ExperimentConfig& cfg);

/// Stable, sorted listing of sequence presets and experiment kinds.
std::string list_presets();

}  // namespace speclab

#endif
