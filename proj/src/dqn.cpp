#include "coverbot/dqn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace coverbot {

double epsilon(int episode, const EpsilonSchedule& s) {
    const double x = static_cast<double>(episode);
    const double phase = 2.0 * std::numbers::pi * x * static_cast<double>(s.mini_epochs) /
                         static_cast<double>(s.total_episodes);
    return s.eps0 * std::pow(s.decay, x) * 0.5 * (1.0 + std::cos(phase));
}

std::vector<int> trough_episodes(const EpsilonSchedule& s) {
    std::vector<int> out;
    for (int k = 0; k < s.mini_epochs; ++k) {
        const double exact = (2.0 * k + 1.0) * s.total_episodes / (2.0 * s.mini_epochs);
        const int episode = static_cast<int>(std::lround(exact));
        if (episode < s.total_episodes &&
            (out.empty() || out.back() != episode))
            out.push_back(episode);
    }
    return out;
}

InputVec encode(const Observation& obs, int budget, bool raw_time) {
    InputVec v;
    v[0] = raw_time ? static_cast<double>(obs.step)
                    : static_cast<double>(obs.step) / static_cast<double>(budget);
    for (int i = 0; i < kWindowCells; ++i) v[i + 1] = static_cast<double>(obs.window[i]);
    return v;
}

Action select_action(const DenseNet& net, const InputVec& x, double eps, Rng& rng) {
    const double u = rng.uniform01();
    if (u < eps) return static_cast<Action>(rng.below(kActionCount));
    const QVec q = forward(net, x);
    int best = 0;
    for (int i = 1; i < kActionCount; ++i)
        if (q[i] > q[best]) best = i;
    return static_cast<Action>(best);
}

double td_update(DenseNet& net, AdamState& adam, const Transition& tr, const DqnHyper& h) {
    ForwardCache cache;
    const QVec q = forward(net, tr.s, &cache);

    double target = static_cast<double>(tr.r);
    if (!tr.terminal) {
        const QVec q_next = forward(net, tr.next_s);
        target += h.gamma * *std::max_element(q_next.begin(), q_next.end());
    }

    const MaskedLoss ml = masked_l2_grad(q, tr.a, target);
    const Gradients grads = backward(net, cache, ml.dq);
    adam_step(net, adam, grads);
    return ml.loss;
}

}  // namespace coverbot
