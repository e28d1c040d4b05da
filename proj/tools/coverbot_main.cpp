#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "coverbot/checkpoint.hpp"
#include "coverbot/config.hpp"
#include "coverbot/env_gen.hpp"
#include "coverbot/report.hpp"
#include "coverbot/runner.hpp"

namespace fs = std::filesystem;
using namespace coverbot;

namespace {

DqnHyper hyper_from(const RunConfig& cfg) {
    DqnHyper hyper;
    hyper.gamma = cfg.gamma;
    hyper.learning_rate = cfg.learning_rate;
    hyper.raw_time_input = cfg.raw_time;
    hyper.schedule.eps0 = cfg.eps0;
    hyper.schedule.decay = cfg.eps_decay;
    hyper.schedule.mini_epochs = cfg.mini_epochs;
    hyper.schedule.total_episodes = cfg.episodes;
    return hyper;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error(path.string() + ": write failure");
}

void print_summary(const char* name, const EvalSummary& s) {
    std::printf("%s episodes: %d\n", name, s.episodes);
    std::printf("  coverage:   mean %.4f  stddev %.4f\n", s.coverage.mean, s.coverage.stddev);
    std::printf("  collisions: mean %.2f  stddev %.2f\n", s.collisions.mean, s.collisions.stddev);
    std::printf("  steps:      mean %.2f  stddev %.2f\n", s.steps.mean, s.steps.stddev);
}

int cmd_train(const RunConfig& cfg) {
    fs::create_directories(cfg.out_dir);

    TrainConfig tc;
    tc.master_seed = cfg.master_seed;
    tc.budget = cfg.budget;
    tc.hyper = hyper_from(cfg);

    const auto hook = [&](int episode, const DenseNet& net, const AdamState& adam) {
        char name[32];
        std::snprintf(name, sizeof name, "ckpt_%05d.txt", episode);
        save_checkpoint((fs::path(cfg.out_dir) / name).string(), net, adam);
    };

    const TrainResult result = train(tc, hook);

    save_checkpoint((fs::path(cfg.out_dir) / "ckpt_final.txt").string(), result.net, result.adam);
    write_metrics_csv(result.log.episodes, (fs::path(cfg.out_dir) / "metrics.csv").string());
    write_text(fs::path(cfg.out_dir) / "config_snapshot.txt", config_snapshot(cfg));

    double last_coverage = 0.0;
    int last_collisions = 0;
    if (!result.log.episodes.empty()) {
        last_coverage = result.log.episodes.back().coverage;
        last_collisions = result.log.episodes.back().collisions;
    }
    std::printf("trained %d episodes (seed %llu), %zu trough checkpoints -> %s\n",
                cfg.episodes, static_cast<unsigned long long>(cfg.master_seed),
                result.log.checkpoint_episodes.size(), cfg.out_dir.c_str());
    std::printf("final episode: coverage %.4f, collisions %d\n", last_coverage, last_collisions);
    return 0;
}

int cmd_evaluate(const RunConfig& cfg) {
    const Checkpoint ckpt = load_checkpoint(cfg.checkpoint_path);

    EvalConfig ec;
    ec.episodes = cfg.episodes;
    ec.master_seed = cfg.master_seed;
    ec.budget = cfg.budget;
    const EvalResult result = evaluate_dqn(ckpt.net, ec, cfg.raw_time);

    print_summary("dqn", result.summary);
    fs::create_directories(cfg.out_dir);
    write_metrics_csv(result.episodes, (fs::path(cfg.out_dir) / "eval_metrics.csv").string());
    return 0;
}

int cmd_baseline(const RunConfig& cfg) {
    EvalConfig ec;
    ec.episodes = cfg.episodes;
    ec.master_seed = cfg.master_seed;
    ec.budget = cfg.budget;
    const EvalResult result = evaluate_baseline(ec);

    print_summary("baseline", result.summary);
    fs::create_directories(cfg.out_dir);
    write_metrics_csv(result.episodes, (fs::path(cfg.out_dir) / "baseline_metrics.csv").string());
    return 0;
}

int cmd_gen_env(const RunConfig& cfg) {
    GenConfig gen;
    gen.seed = cfg.master_seed;
    std::fputs(layout_to_text(generate(gen)).c_str(), stdout);
    return 0;
}

int cmd_plot(const RunConfig& cfg) {
    const std::vector<EpisodeMetrics> episodes = read_metrics_csv(cfg.input_csv);
    if (episodes.empty()) {
        std::fprintf(stderr, "plot: %s has no episodes\n", cfg.input_csv.c_str());
        return 1;
    }
    std::vector<double> coverage, collisions;
    for (const EpisodeMetrics& m : episodes) {
        coverage.push_back(m.coverage);
        collisions.push_back(static_cast<double>(m.collisions));
    }
    fs::create_directories(cfg.out_dir);

    ChartSpec cov_spec;
    cov_spec.title = "Coverage (running average)";
    cov_spec.y_label = "coverage";
    cov_spec.color = "green";
    cov_spec.y_min = 0.0;
    cov_spec.y_max = 1.0;
    render_plot_svg(coverage, cfg.window, (fs::path(cfg.out_dir) / "coverage.svg").string(),
                    cov_spec);

    ChartSpec col_spec;
    col_spec.title = "Collisions (running average)";
    col_spec.y_label = "collisions";
    col_spec.color = "red";
    render_plot_svg(collisions, cfg.window, (fs::path(cfg.out_dir) / "collisions.svg").string(),
                    col_spec);

    std::printf("wrote %s/coverage.svg and %s/collisions.svg\n", cfg.out_dir.c_str(),
                cfg.out_dir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const CliResult parsed = parse_cli(args);
    if (!parsed.config) {
        std::fputs(parsed.output.c_str(), parsed.exit_code == 0 ? stdout : stderr);
        return parsed.exit_code;
    }

    const RunConfig& cfg = *parsed.config;
    try {
        switch (cfg.mode) {
            case Mode::Train: return cmd_train(cfg);
            case Mode::Evaluate: return cmd_evaluate(cfg);
            case Mode::Baseline: return cmd_baseline(cfg);
            case Mode::GenEnv: return cmd_gen_env(cfg);
            case Mode::Plot: return cmd_plot(cfg);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "coverbot: %s\n", e.what());
        return 1;
    }
    return 0;
}
