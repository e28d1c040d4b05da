#include "coverbot/runner.hpp"

#include <cmath>
#include <stdexcept>

#include "coverbot/baseline.hpp"

namespace coverbot {

namespace {

// Shared episode loop; `act` maps (observation, last outcome) to an action,
// `after_step` sees each transition (training hook).
template <typename ActFn, typename AfterFn>
EpisodeMetrics run_loop(World& world, ActFn&& act, AfterFn&& after_step) {
    EpisodeMetrics m;
    StepOutcome last;
    bool has_last = false;
    while (!world.done()) {
        const Observation obs = world.observe();
        const Action a = act(obs, has_last ? &last : nullptr);
        const StepOutcome out = world.apply_action(a);
        after_step(obs, a, out);
        m.total_reward += out.reward;
        last = out;
        has_last = true;
    }
    m.coverage = world.coverage();
    m.collisions = world.collision_count();
    m.steps = world.step();
    m.terminal_reason = world.done_reason();
    return m;
}

void no_hook(const Observation&, Action, const StepOutcome&) {}

}  // namespace

EpisodeMetrics run_baseline_episode(const Layout& layout, int budget, std::uint64_t agent_seed) {
    World world(layout, budget);
    BaselinePolicy policy(agent_seed);
    return run_loop(
        world, [&](const Observation& obs, const StepOutcome* last) { return policy.next(obs, last); },
        no_hook);
}

EpisodeMetrics run_random_episode(const Layout& layout, int budget, std::uint64_t agent_seed) {
    World world(layout, budget);
    Rng rng(agent_seed);
    return run_loop(
        world,
        [&](const Observation&, const StepOutcome*) {
            return static_cast<Action>(rng.below(kActionCount));
        },
        no_hook);
}

EpisodeMetrics run_dqn_episode(const Layout& layout, int budget, DenseNet& net,
                               AdamState* adam, const DqnHyper& hyper, double eps,
                               std::uint64_t agent_seed, bool train) {
    if (train && adam == nullptr)
        throw std::invalid_argument("run_dqn_episode: training requires an AdamState");

    World world(layout, budget);
    Rng rng(agent_seed);
    return run_loop(
        world,
        [&](const Observation& obs, const StepOutcome*) {
            return select_action(net, encode(obs, budget, hyper.raw_time_input), eps, rng);
        },
        [&](const Observation& obs, Action a, const StepOutcome& out) {
            if (!train) return;
            Transition tr;
            tr.s = encode(obs, budget, hyper.raw_time_input);
            tr.a = a;
            tr.r = out.reward;
            tr.next_s = encode(world.observe(), budget, hyper.raw_time_input);
            tr.terminal = out.done;
            const double loss = td_update(net, *adam, tr, hyper);
            if (!std::isfinite(loss)) throw std::runtime_error("non-finite loss");
        });
}

TrainResult train(const TrainConfig& cfg, const CheckpointHook& hook) {
    const EpsilonSchedule& sched = cfg.hyper.schedule;

    TrainResult result;
    result.log.config = cfg;
    result.log.master_seed = cfg.master_seed;
    result.net = init_net(derive_seed(cfg.master_seed, SeedStream::NetInit, 0));
    result.adam.alpha = cfg.hyper.learning_rate;

    const std::vector<int> troughs = trough_episodes(sched);
    std::size_t next_trough = 0;

    for (int x = 0; x < sched.total_episodes; ++x) {
        GenConfig gen;
        gen.seed = derive_seed(cfg.master_seed, SeedStream::TrainLayout, static_cast<std::uint64_t>(x));
        const Layout layout = generate(gen);
        const double eps = epsilon(x, sched);

        EpisodeMetrics m;
        try {
            m = run_dqn_episode(layout, cfg.budget, result.net, &result.adam, cfg.hyper,
                                eps, derive_seed(cfg.master_seed, SeedStream::TrainAgent,
                                                 static_cast<std::uint64_t>(x)),
                                /*train=*/true);
        } catch (const std::exception& e) {
            throw std::runtime_error("train: episode " + std::to_string(x) + ": " + e.what());
        }
        m.episode_index = x;
        m.epsilon_used = eps;
        result.log.episodes.push_back(m);

        if (next_trough < troughs.size() && troughs[next_trough] == x) {
            result.log.checkpoint_episodes.push_back(x);
            if (hook) hook(x, result.net, result.adam);
            ++next_trough;
        }
    }
    return result;
}

EvalSummary summarize(const std::vector<EpisodeMetrics>& episodes) {
    EvalSummary s;
    s.episodes = static_cast<int>(episodes.size());
    if (episodes.empty()) return s;

    const auto stats_of = [&](auto field) {
        Stats st;
        double sum = 0.0;
        for (const EpisodeMetrics& m : episodes) sum += static_cast<double>(field(m));
        st.mean = sum / episodes.size();
        double sq = 0.0;
        for (const EpisodeMetrics& m : episodes) {
            const double d = static_cast<double>(field(m)) - st.mean;
            sq += d * d;
        }
        st.stddev = std::sqrt(sq / episodes.size());
        return st;
    };
    s.coverage = stats_of([](const EpisodeMetrics& m) { return m.coverage; });
    s.collisions = stats_of([](const EpisodeMetrics& m) { return m.collisions; });
    s.steps = stats_of([](const EpisodeMetrics& m) { return m.steps; });
    return s;
}

namespace {

// Episode-indexed parallel map: results land in their slot, so aggregation
// order (and therefore every output byte) matches the serial reference.
template <typename EpisodeFn>
EvalResult eval_map(const EvalConfig& cfg, EpisodeFn&& run_one) {
    if (cfg.episodes < 1) throw std::invalid_argument("evaluate: episodes must be >= 1");
    EvalResult result;
    result.episodes.resize(static_cast<std::size_t>(cfg.episodes));

    if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < cfg.episodes; ++i) {
            result.episodes[static_cast<std::size_t>(i)] = run_one(i);
        }
    } else {
        for (int i = 0; i < cfg.episodes; ++i) {
            result.episodes[static_cast<std::size_t>(i)] = run_one(i);
        }
    }
    result.summary = summarize(result.episodes);
    return result;
}

Layout eval_layout(const EvalConfig& cfg, int i) {
    GenConfig gen;
    gen.seed = derive_seed(cfg.master_seed, SeedStream::EvalLayout, static_cast<std::uint64_t>(i));
    return generate(gen);
}

}  // namespace

EvalResult evaluate_baseline(const EvalConfig& cfg) {
    return eval_map(cfg, [&](int i) {
        EpisodeMetrics m = run_baseline_episode(
            eval_layout(cfg, i), cfg.budget,
            derive_seed(cfg.master_seed, SeedStream::EvalAgent, static_cast<std::uint64_t>(i)));
        m.episode_index = i;
        return m;
    });
}

EvalResult evaluate_random(const EvalConfig& cfg) {
    return eval_map(cfg, [&](int i) {
        EpisodeMetrics m = run_random_episode(
            eval_layout(cfg, i), cfg.budget,
            derive_seed(cfg.master_seed, SeedStream::EvalAgent, static_cast<std::uint64_t>(i)));
        m.episode_index = i;
        return m;
    });
}

EvalResult evaluate_dqn(const DenseNet& net, const EvalConfig& cfg, bool raw_time) {
    DqnHyper hyper;
    hyper.raw_time_input = raw_time;
    return eval_map(cfg, [&](int i) {
        DenseNet frozen = net;  // forward-only copy per episode
        EpisodeMetrics m = run_dqn_episode(
            eval_layout(cfg, i), cfg.budget, frozen, nullptr, hyper, /*eps=*/0.0,
            derive_seed(cfg.master_seed, SeedStream::EvalAgent, static_cast<std::uint64_t>(i)),
            /*train=*/false);
        m.episode_index = i;
        return m;
    });
}

std::vector<double> running_average(std::span<const double> series, int window) {
    if (window < 1) throw std::invalid_argument("running_average: window must be >= 1");
    std::vector<double> out(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        const std::size_t lo = i + 1 >= static_cast<std::size_t>(window)
                                   ? i + 1 - static_cast<std::size_t>(window)
                                   : 0;
        double sum = 0.0;
        for (std::size_t j = lo; j <= i; ++j) sum += series[j];
        out[i] = sum / static_cast<double>(i - lo + 1);
    }
    return out;
}

}  // namespace coverbot
