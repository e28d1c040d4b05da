#include "coverbot/net.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coverbot/rng.hpp"

namespace coverbot {

DenseNet init_net(std::uint64_t seed) {
    Rng rng(seed);
    DenseNet net;
    const double limit1 = std::sqrt(6.0 / (kInputDim + kHiddenDim));
    for (int u = 0; u < kHiddenDim; ++u)
        for (int i = 0; i < kInputDim; ++i) net.w1(u, i) = rng.uniform(-limit1, limit1);
    const double limit2 = std::sqrt(6.0 / (kHiddenDim + kActionCount));
    for (int o = 0; o < kActionCount; ++o)
        for (int u = 0; u < kHiddenDim; ++u) net.w2(o, u) = rng.uniform(-limit2, limit2);
    // Biases stay zero.
    return net;
}

QVec forward(const DenseNet& net, const InputVec& x, ForwardCache* cache) {
    std::array<double, kHiddenDim> pre;
    std::array<double, kHiddenDim> hidden;
    for (int u = 0; u < kHiddenDim; ++u) {
        double acc = net.b1(u);
        for (int i = 0; i < kInputDim; ++i) acc += net.w1(u, i) * x[i];
        pre[u] = acc;
        hidden[u] = acc > 0.0 ? acc : 0.0;
    }
    QVec q;
    for (int o = 0; o < kActionCount; ++o) {
        double acc = net.b2(o);
        for (int u = 0; u < kHiddenDim; ++u) acc += net.w2(o, u) * hidden[u];
        q[o] = acc;
    }
    if (cache != nullptr) {
        cache->input = x;
        cache->pre = pre;
        cache->hidden = hidden;
        cache->q = q;
    }
    return q;
}

MaskedLoss masked_l2_grad(const QVec& q, Action action, double target) {
    MaskedLoss out;
    const int a = static_cast<int>(action);
    const double diff = q[a] - target;
    out.loss = diff * diff;
    out.dq[a] = 2.0 * diff;
    return out;
}

Gradients backward(const DenseNet& net, const ForwardCache& cache, const QVec& dq) {
    Gradients g;
    std::array<double, kHiddenDim> dhidden{};
    for (int o = 0; o < kActionCount; ++o) {
        if (dq[o] == 0.0) continue;  // masked outputs contribute nothing
        g.b2(o) = dq[o];
        for (int u = 0; u < kHiddenDim; ++u) {
            g.w2(o, u) = dq[o] * cache.hidden[u];
            dhidden[u] += dq[o] * net.w2(o, u);
        }
    }
    for (int u = 0; u < kHiddenDim; ++u) {
        if (cache.pre[u] <= 0.0) continue;  // ReLU gate, derivative at 0 is 0
        const double dpre = dhidden[u];
        g.b1(u) = dpre;
        for (int i = 0; i < kInputDim; ++i) g.w1(u, i) = dpre * cache.input[i];
    }
    return g;
}

void adam_step(DenseNet& net, AdamState& adam, const Gradients& grads) {
    ++adam.t;
    const double bc1 = 1.0 - std::pow(adam.beta1, static_cast<double>(adam.t));
    const double bc2 = 1.0 - std::pow(adam.beta2, static_cast<double>(adam.t));
    for (int i = 0; i < kParamCount; ++i) {
        const double g = grads.p[i];
        adam.m.p[i] = adam.beta1 * adam.m.p[i] + (1.0 - adam.beta1) * g;
        adam.v.p[i] = adam.beta2 * adam.v.p[i] + (1.0 - adam.beta2) * g * g;
        const double m_hat = adam.m.p[i] / bc1;
        const double v_hat = adam.v.p[i] / bc2;
        net.p[i] -= adam.alpha * m_hat / (std::sqrt(v_hat) + adam.eps_hat);
    }
    for (double p : net.p)
        if (!std::isfinite(p))
            throw std::runtime_error("adam_step: non-finite parameter after update");
}

namespace {

double loss_at(const DenseNet& net, const InputVec& x, Action action, double target) {
    const QVec q = forward(net, x);
    const double diff = q[static_cast<int>(action)] - target;
    return diff * diff;
}

}  // namespace

double max_rel_error_vs_fd(const DenseNet& net, const InputVec& x, Action action,
                           double target, const Gradients& analytic, double h,
                           bool parallel) {
    double max_err = 0.0;
#pragma omp parallel if (parallel)
    {
        DenseNet probe = net;  // private copy per thread
        double local_max = 0.0;
#pragma omp for schedule(static)
        for (int i = 0; i < kParamCount; ++i) {
            const double saved = probe.p[i];
            probe.p[i] = saved + h;
            const double up = loss_at(probe, x, action, target);
            probe.p[i] = saved - h;
            const double down = loss_at(probe, x, action, target);
            probe.p[i] = saved;
            const double fd = (up - down) / (2.0 * h);
            const double a = analytic.p[i];
            const double err = std::abs(a - fd) / std::max(1.0, std::abs(a) + std::abs(fd));
            local_max = std::max(local_max, err);
        }
#pragma omp critical
        max_err = std::max(max_err, local_max);
    }
    return max_err;
}

double grad_check(const DenseNet& net, const InputVec& x, Action action,
                  double target, bool parallel) {
    ForwardCache cache;
    const QVec q = forward(net, x, &cache);
    const MaskedLoss ml = masked_l2_grad(q, action, target);
    const Gradients analytic = backward(net, cache, ml.dq);
    return max_rel_error_vs_fd(net, x, action, target, analytic, 1e-5, parallel);
}

}  // namespace coverbot
