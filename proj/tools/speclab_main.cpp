#include <cstdio>
#include <cstring>
#include <string>

#include "speclab/experiment.hpp"

namespace {

void usage(std::FILE* to) {
    std::fprintf(to,
                 "usage:\n"
                 "  speclab run <config-path> [--out DIR] [--seed N]\n"
                 "  speclab presets\n"
                 "\n"
                 "exit codes: 0 all checks hold, 1 usage or config error,\n"
                 "            2 some inequality/identity check failed\n"
                 "environment: SPECLAB_THREADS caps internal parallelism\n");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        usage(stderr);
        return 1;
    }
    const std::string cmd = argv[1];
    if (cmd == "--help" || cmd == "-h" || cmd == "help") {
        usage(stdout);
        return 0;
    }
    if (cmd == "presets") {
        if (argc != 2) {
            usage(stderr);
            return 1;
        }
        std::fputs(speclab::list_presets().c_str(), stdout);
        return 0;
    }
    if (cmd != "run") {
        std::fprintf(stderr, "speclab: unknown command '%s'\n", cmd.c_str());
        usage(stderr);
        return 1;
    }
    if (argc < 3) {
        std::fprintf(stderr, "speclab: run needs a config path\n");
        usage(stderr);
        return 1;
    }

    const std::string config_path = argv[2];
    std::string out_override;
    std::string seed_override;
    for (int i = 3; i < argc; ++i) {
        if (std::strcmp(argv[i], "--out") == 0 && i + 1 < argc) {
            out_override = argv[++i];
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed_override = argv[++i];
        } else {
            std::fprintf(stderr, "speclab: unknown argument '%s'\n", argv[i]);
            usage(stderr);
            return 1;
        }
    }

    try {
        speclab::ExperimentConfig cfg = speclab::ExperimentConfig::parse_file(config_path);
        if (!out_override.empty()) cfg.output_dir = out_override;
        if (!seed_override.empty()) {
            try {
                cfg.seed = std::stoull(seed_override);
            } catch (const std::exception&) {
                std::fprintf(stderr, "speclab: --seed expects an integer\n");
                return 1;
            }
        }
        const speclab::RunResult result = speclab::run_experiment(cfg);
        if (result.exit_code != 0) {
            for (const std::string& f : result.report.failures)
                std::fprintf(stderr, "speclab: check failed: %s\n", f.c_str());
        }
        std::fprintf(stdout, "speclab: %s report written to %s (%s)\n",
                     result.report.kind.c_str(), cfg.output_dir.c_str(),
                     result.exit_code == 0 ? "all checks hold" : "checks FAILED");
        return result.exit_code;
    } catch (const speclab::ConfigInvalid& e) {
        if (e.line > 0)
            std::fprintf(stderr, "speclab: config error at line %d: %s\n", e.line, e.what());
        else
            std::fprintf(stderr, "speclab: config error: %s\n", e.what());
        return 1;
    } catch (const speclab::Error& e) {
        std::fprintf(stderr, "speclab: error: %s\n", e.what());
        return 1;
    }
}
