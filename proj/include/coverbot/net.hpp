#pragma once

#include <array>
#include <cstdint>

#include "coverbot/grid.hpp"

namespace coverbot {

// Dense 82 -> 64 -> 3 network, float64 throughout. Parameters live in one
// flat array in the fixed order W1 (row-major), b1, W2 (row-major), b2; the
// checkpoint format and Adam state use the same order.
inline constexpr int kInputDim = 82;
inline constexpr int kHiddenDim = 64;
inline constexpr int kW1Count = kHiddenDim * kInputDim;
inline constexpr int kB1Offset = kW1Count;
inline constexpr int kW2Offset = kB1Offset + kHiddenDim;
inline constexpr int kB2Offset = kW2Offset + kActionCount * kHiddenDim;
inline constexpr int kParamCount = kB2Offset + kActionCount;

struct NetParams {
    std::array<double, kParamCount> p{};

    double& w1(int unit, int in) { return p[static_cast<std::size_t>(unit) * kInputDim + in]; }
    double w1(int unit, int in) const { return p[static_cast<std::size_t>(unit) * kInputDim + in]; }
    double& b1(int unit) { return p[kB1Offset + unit]; }
    double b1(int unit) const { return p[kB1Offset + unit]; }
    double& w2(int out, int unit) { return p[kW2Offset + static_cast<std::size_t>(out) * kHiddenDim + unit]; }
    double w2(int out, int unit) const { return p[kW2Offset + static_cast<std::size_t>(out) * kHiddenDim + unit]; }
    double& b2(int out) { return p[kB2Offset + out]; }
    double b2(int out) const { return p[kB2Offset + out]; }

    bool operator==(const NetParams&) const = default;
};

using DenseNet = NetParams;
using Gradients = NetParams;

struct AdamState {
    NetParams m;  // first moments
    NetParams v;  // second moments
    long t = 0;
    double alpha = 2e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps_hat = 1e-8;
};

using InputVec = std::array<double, kInputDim>;
using QVec = std::array<double, kActionCount>;

struct ForwardCache {
    InputVec input{};
    std::array<double, kHiddenDim> pre{};     // W1*x + b1
    std::array<double, kHiddenDim> hidden{};  // relu(pre)
    QVec q{};
};

// Glorot-uniform weights, zero biases; deterministic in the seed.
DenseNet init_net(std::uint64_t seed);

// q = W2 * relu(W1 x + b1) + b2. Pure; fills *cache when given.
QVec forward(const DenseNet& net, const InputVec& x, ForwardCache* cache = nullptr);

struct MaskedLoss {
    double loss = 0.0;
    QVec dq{};  // dLoss/dq; exactly zero at the non-selected actions
};

// loss = (target - q[action])^2 applied to the selected action only.
MaskedLoss masked_l2_grad(const QVec& q, Action action, double target);

// Exact parameter gradients for the loss whose output gradient is dq. The
// cache must come from forward() on this net. ReLU subgradient at 0 is 0.
Gradients backward(const DenseNet& net, const ForwardCache& cache, const QVec& dq);

// Standard Adam update; throws std::runtime_error if any parameter is
// non-finite afterwards.
void adam_step(DenseNet& net, AdamState& adam, const Gradients& grads);

// Max (absolute-floored) relative error between `analytic` and central finite
// differences with step h over every parameter: |a-f| / max(1, |a|+|f|).
double max_rel_error_vs_fd(const DenseNet& net, const InputVec& x, Action action,
                           double target, const Gradients& analytic,
                           double h = 1e-5, bool parallel = true);

// Convenience: checks backward() against finite differences.
double grad_check(const DenseNet& net, const InputVec& x, Action action,
                  double target, bool parallel = true);

}  // namespace coverbot
