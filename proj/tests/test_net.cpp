#include <doctest.h>

#include <limits>
#include <stdexcept>
#include <cmath>
#include <vector>

#include "coverbot/net.hpp"
#include "coverbot/rng.hpp"

using namespace coverbot;

namespace {

InputVec random_input(Rng& rng) {
    InputVec x;
    for (double& v : x) v = rng.uniform(-1.0, 2.0);
    return x;
}

// Independent forward oracle: plain nested std::vector matrix product,
// written without reference to the production layout.
QVec forward_oracle(const DenseNet& net, const InputVec& x) {
    std::vector<double> hidden(kHiddenDim);
    for (int u = 0; u < kHiddenDim; ++u) {
        double s = 0.0;
        for (int i = 0; i < kInputDim; ++i) s += net.w1(u, i) * x[i];
        s += net.b1(u);
        hidden[u] = std::max(0.0, s);
    }
    QVec q{};
    for (int o = 0; o < kActionCount; ++o) {
        double s = 0.0;
        for (int u = 0; u < kHiddenDim; ++u) s += net.w2(o, u) * hidden[u];
        q[o] = s + net.b2(o);
    }
    return q;
}

}  // namespace

TEST_CASE("init_net is seed-deterministic and Glorot-bounded") {
    const DenseNet a = init_net(5);
    const DenseNet b = init_net(5);
    CHECK(a == b);

    const DenseNet c = init_net(6);
    CHECK(a != c);

    const double limit1 = std::sqrt(6.0 / (kInputDim + kHiddenDim));
    for (int u = 0; u < kHiddenDim; ++u) {
        CHECK(a.b1(u) == 0.0);
        for (int i = 0; i < kInputDim; ++i) {
            CHECK(a.w1(u, i) >= -limit1);
            CHECK(a.w1(u, i) <= limit1);
        }
    }
    for (int o = 0; o < kActionCount; ++o) CHECK(a.b2(o) == 0.0);
}

TEST_CASE("forward of the zero net is zero") {
    DenseNet net{};
    InputVec x{};
    x[3] = 1.5;
    const QVec q = forward(net, x);
    CHECK(q == QVec{0.0, 0.0, 0.0});
}

TEST_CASE("forward hand case through one hidden unit") {
    DenseNet net{};
    net.w1(0, 0) = 1.0;  // hidden unit 0 reads input 0
    net.w2(0, 0) = 1.0;  // action 0 reads hidden unit 0
    InputVec x{};
    x[0] = 2.0;
    const QVec q = forward(net, x);
    CHECK(q[0] == 2.0);
    CHECK(q[1] == 0.0);
    CHECK(q[2] == 0.0);

    // ReLU clips the negative side.
    x[0] = -2.0;
    CHECK(forward(net, x) == QVec{0.0, 0.0, 0.0});
}

TEST_CASE("forward matches the independent oracle") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const DenseNet net = init_net(rng.next_u64());
        const InputVec x = random_input(rng);
        const QVec q = forward(net, x);
        const QVec expected = forward_oracle(net, x);
        for (int o = 0; o < kActionCount; ++o)
            CHECK(q[o] == doctest::Approx(expected[o]).epsilon(1e-12));
    }
}

TEST_CASE("masked loss and gradient") {
    SUBCASE("perfect prediction") {
        const MaskedLoss ml = masked_l2_grad({1.0, 2.0, 3.0}, Action::Forward, 1.0);
        CHECK(ml.loss == 0.0);
        CHECK(ml.dq == QVec{0.0, 0.0, 0.0});
    }
    SUBCASE("worked example") {
        const MaskedLoss ml = masked_l2_grad({1.0, 2.0, 3.0}, Action::TurnRight, 5.0);
        CHECK(ml.loss == 4.0);
        CHECK(ml.dq == QVec{0.0, 0.0, -4.0});
    }
    SUBCASE("non-selected entries are exactly zero") {
        Rng rng(3);
        for (int i = 0; i < 1000; ++i) {
            const QVec q{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
            const int a = static_cast<int>(rng.below(3));
            const MaskedLoss ml = masked_l2_grad(q, static_cast<Action>(a), rng.uniform(-5, 5));
            for (int o = 0; o < kActionCount; ++o)
                if (o != a) CHECK(ml.dq[o] == 0.0);
        }
    }
}

TEST_CASE("backward with zero output gradient is zero everywhere") {
    const DenseNet net = init_net(8);
    Rng rng(9);
    ForwardCache cache;
    forward(net, random_input(rng), &cache);
    const Gradients g = backward(net, cache, QVec{0.0, 0.0, 0.0});
    for (double v : g.p) CHECK(v == 0.0);
}

TEST_CASE("backward matches central finite differences") {
    Rng rng(21);
    for (int trial = 0; trial < 3; ++trial) {
        const DenseNet net = init_net(rng.next_u64());
        const InputVec x = random_input(rng);
        const Action a = static_cast<Action>(rng.below(3));
        const double target = rng.uniform(-2.0, 2.0);
        CHECK(grad_check(net, x, a, target) < 1e-6);
    }
}

TEST_CASE("dead ReLU units receive no gradient") {
    DenseNet net = init_net(13);
    net.b1(7) = -1e6;  // force unit 7 off for bounded inputs
    Rng rng(14);
    ForwardCache cache;
    const QVec q = forward(net, random_input(rng), &cache);
    REQUIRE(cache.pre[7] < 0.0);
    const MaskedLoss ml = masked_l2_grad(q, Action::Forward, 3.0);
    const Gradients g = backward(net, cache, ml.dq);
    CHECK(g.b1(7) == 0.0);
    for (int i = 0; i < kInputDim; ++i) CHECK(g.w1(7, i) == 0.0);
}

TEST_CASE("masked loss keeps non-selected output rows at exactly zero gradient") {
    Rng rng(15);
    for (int trial = 0; trial < 50; ++trial) {
        const DenseNet net = init_net(rng.next_u64());
        ForwardCache cache;
        const QVec q = forward(net, random_input(rng), &cache);
        const int a = static_cast<int>(rng.below(3));
        const MaskedLoss ml = masked_l2_grad(q, static_cast<Action>(a), rng.uniform(-2, 2));
        const Gradients g = backward(net, cache, ml.dq);
        for (int o = 0; o < kActionCount; ++o) {
            if (o == a) continue;
            CHECK(g.b2(o) == 0.0);
            for (int u = 0; u < kHiddenDim; ++u) CHECK(g.w2(o, u) == 0.0);
        }
    }
}

TEST_CASE("adam with zero gradients leaves parameters untouched") {
    DenseNet net = init_net(30);
    const DenseNet before = net;
    AdamState adam;
    adam_step(net, adam, Gradients{});
    CHECK(net == before);
    CHECK(adam.t == 1);
}

TEST_CASE("first adam step moves by about alpha") {
    // Single live parameter: theta=1, g=1, alpha=0.1 -> theta' ~= 0.9.
    DenseNet net{};
    net.p[0] = 1.0;
    Gradients g{};
    g.p[0] = 1.0;
    AdamState adam;
    adam.alpha = 0.1;
    adam_step(net, adam, g);
    CHECK(net.p[0] == doctest::Approx(0.9).epsilon(1e-8));
}

TEST_CASE("adam steps stay bounded by alpha under constant gradient") {
    DenseNet net{};
    net.p[0] = 1.0;
    Gradients g{};
    g.p[0] = 0.37;
    AdamState adam;
    adam.alpha = 0.01;
    double prev = net.p[0];
    for (int i = 0; i < 100; ++i) {
        adam_step(net, adam, g);
        CHECK(std::abs(net.p[0] - prev) <= adam.alpha * (1.0 + 1e-6));
        prev = net.p[0];
    }
}

TEST_CASE("adam flags non-finite parameters") {
    DenseNet net{};
    net.p[5] = std::numeric_limits<double>::quiet_NaN();
    AdamState adam;
    CHECK_THROWS_AS(adam_step(net, adam, Gradients{}), std::runtime_error);
}

TEST_CASE("the gradient checker reports zero for a zero-loss case") {
    DenseNet net{};  // q = 0 everywhere
    InputVec x{};
    CHECK(grad_check(net, x, Action::Forward, 0.0) == 0.0);
}

TEST_CASE("the gradient checker catches a corrupted gradient") {
    Rng rng(55);
    const DenseNet net = init_net(rng.next_u64());
    const InputVec x = random_input(rng);
    const double target = 1.7;

    ForwardCache cache;
    const QVec q = forward(net, x, &cache);
    const MaskedLoss ml = masked_l2_grad(q, Action::TurnLeft, target);
    Gradients g = backward(net, cache, ml.dq);
    for (double& v : g.p) v = -v;  // sign flip

    CHECK(max_rel_error_vs_fd(net, x, Action::TurnLeft, target, g) > 0.1);
}

TEST_CASE("serial and parallel gradient checks agree") {
    Rng rng(56);
    const DenseNet net = init_net(rng.next_u64());
    const InputVec x = random_input(rng);
    const double serial = grad_check(net, x, Action::Forward, 0.5, /*parallel=*/false);
    const double parallel = grad_check(net, x, Action::Forward, 0.5, /*parallel=*/true);
    CHECK(serial == parallel);
}
