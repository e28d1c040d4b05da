#include "coverbot/config.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace coverbot {

namespace {

CLI::Validator number_in(const std::string& field, double lo, double hi, bool incl_lo,
                         bool incl_hi, const std::string& range_text) {
    return CLI::Validator(
        [=](std::string& input) -> std::string {
            double v = 0.0;
            if (!CLI::detail::lexical_cast(input, v)) return field + " must be a number";
            const bool ok = (incl_lo ? v >= lo : v > lo) && (incl_hi ? v <= hi : v < hi);
            return ok ? std::string() : field + " must be in " + range_text;
        },
        range_text);
}

CLI::Validator at_least(const std::string& field, long lo) {
    return CLI::Validator(
        [=](std::string& input) -> std::string {
            long v = 0;
            if (!CLI::detail::lexical_cast(input, v)) return field + " must be an integer";
            return v >= lo ? std::string() : field + " must be >= " + std::to_string(lo);
        },
        ">=" + std::to_string(lo));
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Flat key=value file, '#' comments. Returned as "--key=value" tokens that are
// injected ahead of the explicit flags, so the command line wins on conflict.
std::vector<std::string> config_file_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config file not found: " + path);
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config file " + path + ": expected key=value, got '" +
                                     line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config file " + path + ": empty key in '" + line + "'");
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

// Splices config-file tokens in after the subcommand name; a later --config
// wins if repeated.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty() || args.empty() || args[0].rfind("-", 0) == 0) return args;

    const std::vector<std::string> injected = config_file_tokens(path);
    std::vector<std::string> out;
    out.push_back(args[0]);
    out.insert(out.end(), injected.begin(), injected.end());
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& config_path) {
    cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    cmd->add_option("--seed", cfg.master_seed, "master seed");
    cmd->add_option("--budget", cfg.budget, "steps per episode")
        ->check(at_least("budget", 1));
    cmd->add_option("--out", cfg.out_dir, "output directory")
        ->envname("COVERBOT_OUT");
    cmd->add_option("--config", config_path, "flat key=value config file");
}

void add_schedule(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--mini-epochs", cfg.mini_epochs, "mini epochs (n)")
        ->check(at_least("mini_epochs", 1));
    cmd->add_option("--eps0", cfg.eps0, "initial epsilon")
        ->check(number_in("eps0", 0.0, 1.0, true, true, "[0,1]"));
    cmd->add_option("--eps-decay", cfg.eps_decay, "per-episode epsilon decay rate")
        ->check(number_in("eps_decay", 0.0, 1.0, false, true, "(0,1]"));
    cmd->add_option("--gamma", cfg.gamma, "discount factor")
        ->check(number_in("gamma", 0.0, 1.0, true, false, "[0,1)"));
    cmd->add_option("--lr", cfg.learning_rate, "Adam learning rate")
        ->check(number_in("learning_rate", 0.0, 1.0, false, true, "(0,1]"));
    cmd->add_flag("--raw-time", cfg.raw_time, "feed the raw step count instead of step/budget");
}

}  // namespace

CliResult parse_cli(const std::vector<std::string>& args) {
    RunConfig cfg;
    std::string config_path;  // consumed by expand_config; kept for help text

    CLI::App app{"coverbot: coverage path planning in unknown gridworlds"};
    app.require_subcommand(1);

    CLI::App* train = app.add_subcommand("train", "train the DQN agent online");
    add_common(train, cfg, config_path);
    add_schedule(train, cfg);
    train->add_option("--episodes", cfg.episodes, "training episodes (X)")
        ->check(at_least("episodes", 1));

    int eval_episodes = 500;
    CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate a trained checkpoint");
    add_common(evaluate, cfg, config_path);
    evaluate->add_option("--episodes", eval_episodes, "evaluation episodes")
        ->check(at_least("episodes", 1));
    evaluate->add_option("--checkpoint", cfg.checkpoint_path, "checkpoint to load")
        ->required();
    evaluate->add_flag("--raw-time", cfg.raw_time,
                       "feed the raw step count instead of step/budget");

    CLI::App* baseline = app.add_subcommand("baseline", "evaluate the spiral/random-walk agent");
    add_common(baseline, cfg, config_path);
    baseline->add_option("--episodes", eval_episodes, "evaluation episodes")
        ->check(at_least("episodes", 1));

    CLI::App* gen_env = app.add_subcommand("gen-env", "print a generated layout");
    add_common(gen_env, cfg, config_path);

    CLI::App* plot = app.add_subcommand("plot", "render SVG trend charts from a metrics CSV");
    add_common(plot, cfg, config_path);
    plot->add_option("csv", cfg.input_csv, "metrics CSV produced by train/evaluate")
        ->required();
    plot->add_option("--window", cfg.window, "running-average window")
        ->check(at_least("window", 1));

    if (args.empty()) return {std::nullopt, 2, app.help()};

    std::vector<std::string> merged;
    try {
        merged = expand_config(args);
    } catch (const std::exception& e) {
        return {std::nullopt, 2, std::string(e.what()) + "\n"};
    }

    std::vector<const char*> argv;
    argv.push_back("coverbot");
    for (const std::string& a : merged) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return {std::nullopt, 0, app.help()};
    } catch (const CLI::ParseError& e) {
        return {std::nullopt, 2, std::string(e.what()) + "\n"};
    }

    if (train->parsed()) cfg.mode = Mode::Train;
    if (evaluate->parsed()) {
        cfg.mode = Mode::Evaluate;
        cfg.episodes = eval_episodes;
    }
    if (baseline->parsed()) {
        cfg.mode = Mode::Baseline;
        cfg.episodes = eval_episodes;
    }
    if (gen_env->parsed()) cfg.mode = Mode::GenEnv;
    if (plot->parsed()) cfg.mode = Mode::Plot;

    return {cfg, 0, ""};
}

std::string config_snapshot(const RunConfig& cfg) {
    std::ostringstream out;
    char buf[64];
    out << "# coverbot run configuration\n";
    out << "seed=" << cfg.master_seed << '\n';
    out << "episodes=" << cfg.episodes << '\n';
    out << "mini-epochs=" << cfg.mini_epochs << '\n';
    std::snprintf(buf, sizeof buf, "%.17g", cfg.eps0);
    out << "eps0=" << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.17g", cfg.eps_decay);
    out << "eps-decay=" << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.17g", cfg.gamma);
    out << "gamma=" << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.17g", cfg.learning_rate);
    out << "lr=" << buf << '\n';
    out << "budget=" << cfg.budget << '\n';
    out << "raw-time=" << (cfg.raw_time ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace coverbot
