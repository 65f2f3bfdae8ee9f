#ifndef SPECLAB_CONFIG_HPP
#define SPECLAB_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "speclab/analysis.hpp"
#include "speclab/sequences.hpp"
#include "speclab/types.hpp"

namespace speclab {

enum class ExperimentKind { Distribution, Cluster, Attract, Inequalities, Norms, BlockCheck };

std::string to_string(ExperimentKind kind);

/// Parsed experiment description. The file format is line-oriented
/// `key = value` under `[section]` headers; lists are comma separated;
/// `#` starts a comment. Unknown sections or keys are rejected with the
/// offending line number.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Distribution;
    std::uint64_t seed = 20240101;
    std::string output_dir = "speclab-out";
    std::size_t quadrature_n = 1024;
    double gap_threshold = 0.05;

    PeriodicBackground background;

    std::string preset = "free";
    double amplitude = 1.0;

    std::vector<std::size_t> n_ladder;
    std::vector<double> epsilons;
    std::vector<TestFunction> test_functions;

    std::vector<cxd> attract_points;
    std::size_t j_max = 3;

    std::size_t instances = 100;
    std::size_t min_order = 2;
    std::size_t max_order = 32;

    int matrix_diagonals = 3;  // band of the generated instances (odd)
    int c_upper = -1;          // upper sandwich constant; -1 means matrix_diagonals

    std::size_t max_m = 40;
    double block_epsilon = 1e-3;

    static ExperimentConfig parse_file(const std::string& path);
    static ExperimentConfig parse_string(const std::string& text);

    /// Throws ConfigInvalid when a field violates its contract.
    void validate() const;
};

}  // namespace speclab

#endif
