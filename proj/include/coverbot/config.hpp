#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverbot/world.hpp"

namespace coverbot {

enum class Mode { Train, Evaluate, Baseline, GenEnv, Plot };

struct RunConfig {
    Mode mode = Mode::Train;
    std::uint64_t master_seed = 1;
    int episodes = 5000;  // X when training, episode count when evaluating
    int mini_epochs = 5;
    double eps0 = 1.0;
    double eps_decay = 0.9994;
    double gamma = 0.99;
    double learning_rate = 2e-4;
    int budget = kDefaultBudget;
    int window = 50;
    bool raw_time = false;
    std::string out_dir = "out";  // COVERBOT_OUT overrides the default
    std::string checkpoint_path;  // evaluate: required input
    std::string input_csv;        // plot: required input
};

struct CliResult {
    std::optional<RunConfig> config;  // run proceeds iff set
    int exit_code = 0;
    std::string output;  // help text or diagnostic, already newline-terminated
};

// Parses argv (without the program name). Precedence: built-in defaults, then
// the --config file (flat key=value, '#' comments), then flags. No arguments
// prints help and exits 2.
CliResult parse_cli(const std::vector<std::string>& args);

// The key=value snapshot written next to training output; same syntax the
// --config file accepts.
std::string config_snapshot(const RunConfig& cfg);

}  // namespace coverbot
