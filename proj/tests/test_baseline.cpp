#include <doctest.h>

#include <set>
#include <vector>

#include "coverbot/baseline.hpp"
#include "coverbot/env_gen.hpp"

using namespace coverbot;

namespace {

StepOutcome ok_outcome() { return {}; }

StepOutcome collision_outcome() {
    StepOutcome out;
    out.reward = -1;
    out.collided = true;
    return out;
}

Layout empty_layout(int rows, int cols, CellCoord base) {
    Layout l;
    l.rows = rows;
    l.cols = cols;
    l.cells.assign(static_cast<std::size_t>(rows) * cols, 0);
    l.base = base;
    return l;
}

// Drives the policy with synthetic non-colliding outcomes.
std::vector<Action> open_ground_actions(BaselinePolicy& policy, int n) {
    std::vector<Action> actions;
    const Observation obs;
    const StepOutcome ok = ok_outcome();
    for (int i = 0; i < n; ++i) actions.push_back(policy.next(obs, i == 0 ? nullptr : &ok));
    return actions;
}

}  // namespace

TEST_CASE("spiral opens with the 1,1,2,2 leg schedule") {
    BaselinePolicy policy(0, TurnDir::Left);
    const std::vector<Action> expected = {Action::Forward,  Action::TurnLeft, Action::Forward,
                                          Action::TurnLeft, Action::Forward,  Action::Forward,
                                          Action::TurnLeft, Action::Forward};
    CHECK(open_ground_actions(policy, 8) == expected);

    BaselinePolicy right(0, TurnDir::Right);
    const std::vector<Action> expected_r = {Action::Forward,   Action::TurnRight, Action::Forward,
                                            Action::TurnRight, Action::Forward,   Action::Forward,
                                            Action::TurnRight, Action::Forward};
    CHECK(open_ground_actions(right, 8) == expected_r);
}

TEST_CASE("spiral forward-run lengths grow in pairs") {
    BaselinePolicy policy(0, TurnDir::Left);
    const std::vector<Action> actions = open_ground_actions(policy, 60);

    std::vector<int> runs;
    int run = 0;
    for (Action a : actions) {
        if (a == Action::Forward) {
            ++run;
        } else {
            runs.push_back(run);
            run = 0;
        }
    }
    REQUIRE(runs.size() >= 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(runs[i] == static_cast<int>(i / 2) + 1);
}

TEST_CASE("spiral visits distinct cells on open ground") {
    World w(empty_layout(50, 50, {25, 25}));
    BaselinePolicy policy(1, TurnDir::Left);

    std::set<std::pair<int, int>> visited;
    visited.insert({25, 25});
    StepOutcome last;
    bool has_last = false;
    int forwards = 0;
    while (forwards < 12) {
        const Action a = policy.next(w.observe(), has_last ? &last : nullptr);
        last = w.apply_action(a);
        has_last = true;
        if (a == Action::Forward) {
            ++forwards;
            CHECK(visited.insert({w.pos().row, w.pos().col}).second);
        }
    }
}

TEST_CASE("first collision permanently ends the spiral") {
    BaselinePolicy policy(7);
    CHECK(policy.mode() == BaselineMode::Spiral);

    const Observation obs;
    const StepOutcome bump = collision_outcome();
    const StepOutcome ok = ok_outcome();

    policy.next(obs, &bump);
    CHECK(policy.mode() == BaselineMode::RandomWalk);
    for (int i = 0; i < 1800; ++i) {
        policy.next(obs, (i % 7 == 0) ? &bump : &ok);
        CHECK(policy.mode() == BaselineMode::RandomWalk);
    }
}

TEST_CASE("random walk drives forward between collisions") {
    BaselinePolicy policy(3);
    const Observation obs;
    const StepOutcome bump = collision_outcome();
    const StepOutcome ok = ok_outcome();

    policy.next(obs, &bump);  // enter random walk, emits a turn
    CHECK(policy.next(obs, &ok) == Action::Forward);
    CHECK(policy.next(obs, &ok) == Action::Forward);
    CHECK(policy.next(obs, &ok) == Action::Forward);
}

TEST_CASE("post-collision turns are uniform over seeds") {
    int lefts = 0, rights = 0;
    const Observation obs;
    const StepOutcome bump = collision_outcome();
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        BaselinePolicy policy(seed);
        const Action a = policy.next(obs, &bump);
        if (a == Action::TurnLeft) ++lefts;
        if (a == Action::TurnRight) ++rights;
    }
    CHECK(lefts + rights == 10000);
    CHECK(lefts > 4500);
    CHECK(lefts < 5500);
}

TEST_CASE("a blocked forward repeats the committed turn") {
    BaselinePolicy policy(11);
    const Observation obs;
    const StepOutcome bump = collision_outcome();
    const StepOutcome ok = ok_outcome();

    const Action first_turn = policy.next(obs, &bump);   // commit
    CHECK(policy.next(obs, &ok) == Action::Forward);     // try ahead
    const Action second_turn = policy.next(obs, &bump);  // blocked again
    CHECK(second_turn == first_turn);
    CHECK(policy.next(obs, &ok) == Action::Forward);
    const Action third_turn = policy.next(obs, &bump);
    CHECK(third_turn == first_turn);
}

TEST_CASE("the agent escapes a one-cell dead end within 8 actions") {
    // Pocket open to the south; the agent starts inside facing the wall.
    const std::string text =
        "4 3 1 1\n"
        "xxx\n"
        "x.x\n"
        "x.x\n"
        "...\n";
    const Layout layout = layout_from_text(text);

    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        World w(layout);
        BaselinePolicy policy(seed);
        StepOutcome last;
        bool has_last = false;
        bool escaped = false;
        for (int i = 0; i < 8 && !escaped; ++i) {
            last = w.apply_action(policy.next(w.observe(), has_last ? &last : nullptr));
            has_last = true;
            escaped = w.pos() != layout.base;
        }
        CHECK(escaped);
    }
}

TEST_CASE("identical seed and environment give identical runs") {
    GenConfig cfg;
    cfg.seed = 77;
    const Layout layout = generate(cfg);

    const auto run = [&] {
        World w(layout, 600);
        BaselinePolicy policy(123);
        std::vector<Action> actions;
        StepOutcome last;
        bool has_last = false;
        while (!w.done()) {
            const Action a = policy.next(w.observe(), has_last ? &last : nullptr);
            actions.push_back(a);
            last = w.apply_action(a);
            has_last = true;
        }
        return actions;
    };
    CHECK(run() == run());
}

TEST_CASE("turns never come in pairs") {
    GenConfig cfg;
    cfg.seed = 31;
    const Layout layout = generate(cfg);
    World w(layout, 1800);
    BaselinePolicy policy(9);

    Action prev = Action::Forward;
    StepOutcome last;
    bool has_last = false;
    while (!w.done()) {
        const Action a = policy.next(w.observe(), has_last ? &last : nullptr);
        if (prev != Action::Forward) CHECK(a == Action::Forward);
        prev = a;
        last = w.apply_action(a);
        has_last = true;
    }
}
