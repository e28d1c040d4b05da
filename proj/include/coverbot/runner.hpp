#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "coverbot/dqn.hpp"
#include "coverbot/env_gen.hpp"
#include "coverbot/net.hpp"
#include "coverbot/world.hpp"

namespace coverbot {

struct EpisodeMetrics {
    int episode_index = 0;
    double coverage = 0.0;
    int collisions = 0;
    int steps = 0;
    DoneReason terminal_reason = DoneReason::None;
    int total_reward = 0;
    double epsilon_used = 0.0;

    bool operator==(const EpisodeMetrics&) const = default;
};

struct TrainConfig {
    std::uint64_t master_seed = 1;
    int budget = kDefaultBudget;
    DqnHyper hyper;
};

struct TrainingLog {
    std::vector<EpisodeMetrics> episodes;
    std::vector<int> checkpoint_episodes;  // trough markers, ascending
    TrainConfig config;                    // snapshot of what produced the log
    std::uint64_t master_seed = 0;
};

struct TrainResult {
    TrainingLog log;
    DenseNet net;
    AdamState adam;
};

// Called after the trough episode finishes training; used to persist
// checkpoints.
using CheckpointHook = std::function<void(int episode, const DenseNet&, const AdamState&)>;

// Single episodes. Each builds a World over the layout and runs the policy to
// termination; the agent rng is seeded independently of the layout.
EpisodeMetrics run_baseline_episode(const Layout& layout, int budget, std::uint64_t agent_seed);
EpisodeMetrics run_random_episode(const Layout& layout, int budget, std::uint64_t agent_seed);
EpisodeMetrics run_dqn_episode(const Layout& layout, int budget, DenseNet& net,
                               AdamState* adam, const DqnHyper& hyper, double eps,
                               std::uint64_t agent_seed, bool train);

// Online training: episode x gets a freshly generated layout from
// derive_seed(master, TrainLayout, x), epsilon from the schedule, and one TD
// update per step. Strictly sequential. Throws (with the episode index) if a
// loss or parameter goes non-finite.
TrainResult train(const TrainConfig& cfg, const CheckpointHook& hook = {});

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;  // population
};

struct EvalSummary {
    int episodes = 0;
    Stats coverage;
    Stats collisions;
    Stats steps;
};

struct EvalResult {
    std::vector<EpisodeMetrics> episodes;
    EvalSummary summary;
};

struct EvalConfig {
    int episodes = 500;
    std::uint64_t master_seed = 1;
    int budget = kDefaultBudget;
    bool parallel = true;  // serial path kept as the reference implementation
};

// Frozen-policy evaluation over freshly generated layouts (seeds disjoint
// from training by stream). Episodes are independent, so the parallel path
// runs them across OpenMP threads; aggregation is by episode index, making
// the output identical to the serial reference bit for bit.
EvalResult evaluate_baseline(const EvalConfig& cfg);
EvalResult evaluate_random(const EvalConfig& cfg);
EvalResult evaluate_dqn(const DenseNet& net, const EvalConfig& cfg, bool raw_time = false);

EvalSummary summarize(const std::vector<EpisodeMetrics>& episodes);

// Trailing running mean: out[i] = mean(series[max(0, i-window+1) .. i]).
std::vector<double> running_average(std::span<const double> series, int window);

}  // namespace coverbot
