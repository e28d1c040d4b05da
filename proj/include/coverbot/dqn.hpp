#pragma once

#include <vector>

#include "coverbot/net.hpp"
#include "coverbot/rng.hpp"
#include "coverbot/world.hpp"

namespace coverbot {

// Exploration decay: eps0 * decay^x * (1 + cos(2*pi*x*n/X)) / 2. An
// exponential envelope modulated by a raised cosine; epsilon returns to the
// envelope n times over a run and touches zero between those peaks.
struct EpsilonSchedule {
    double eps0 = 1.0;
    double decay = 0.9994;
    int mini_epochs = 5;      // n
    int total_episodes = 5000;  // X
};

double epsilon(int episode, const EpsilonSchedule& s);

// Trough episode indices round((2k+1)*X/(2n)), k = 0..n-1; where checkpoints
// are taken.
std::vector<int> trough_episodes(const EpsilonSchedule& s);

struct DqnHyper {
    double gamma = 0.99;
    double learning_rate = 2e-4;
    EpsilonSchedule schedule;
    bool raw_time_input = false;  // feed the step count unnormalized
};

// Network input: element 0 is step/budget (or the raw step count), elements
// 1..81 the 9x9 window row-major with values in {-1,0,1,2}.
InputVec encode(const Observation& obs, int budget, bool raw_time = false);

// Epsilon-greedy over the net's Q-values; argmax ties break toward the lowest
// action index. Always consumes one uniform draw, plus one more when the
// random branch is taken.
Action select_action(const DenseNet& net, const InputVec& x, double eps, Rng& rng);

struct Transition {
    InputVec s{};
    Action a = Action::Forward;
    int r = 0;
    InputVec next_s{};
    bool terminal = false;
};

// One online TD update against the current network (no target network):
// target = r, plus gamma*max_a' Q(s',a') when not terminal. Returns the loss
// measured before the update.
double td_update(DenseNet& net, AdamState& adam, const Transition& tr, const DqnHyper& h);

}  // namespace coverbot
