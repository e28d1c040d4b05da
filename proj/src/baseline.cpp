#include "coverbot/baseline.hpp"

namespace coverbot {

BaselinePolicy::BaselinePolicy(std::uint64_t seed) : rng_(seed) {
    spiral_turn_ = rng_.below(2) == 0 ? TurnDir::Left : TurnDir::Right;
}

BaselinePolicy::BaselinePolicy(std::uint64_t seed, TurnDir spiral_turn)
    : rng_(seed), spiral_turn_(spiral_turn) {}

Action BaselinePolicy::next(const Observation& /*obs*/, const StepOutcome* last) {
    if (mode_ == BaselineMode::Spiral && last != nullptr && last->collided)
        mode_ = BaselineMode::RandomWalk;  // one-way transition

    const Action a = mode_ == BaselineMode::Spiral ? spiral_next() : random_walk_next(last);
    last_action_ = a;
    return a;
}

Action BaselinePolicy::spiral_next() {
    if (steps_remaining_ > 0) {
        --steps_remaining_;
        return Action::Forward;
    }
    // Leg finished: turn once and set up the next leg. Legs come in pairs of
    // equal length, then the length grows by one.
    if (legs_done_at_length_ == 0) {
        legs_done_at_length_ = 1;
    } else {
        legs_done_at_length_ = 0;
        ++leg_length_;
    }
    steps_remaining_ = leg_length_;
    return spiral_turn_ == TurnDir::Left ? Action::TurnLeft : Action::TurnRight;
}

Action BaselinePolicy::random_walk_next(const StepOutcome* last) {
    if (last != nullptr && last->collided) {
        if (!turn_committed_) {
            committed_turn_ = rng_.below(2) == 0 ? Action::TurnLeft : Action::TurnRight;
            turn_committed_ = true;
        }
        return committed_turn_;
    }
    if (last_action_ == Action::Forward) turn_committed_ = false;  // forward succeeded
    return Action::Forward;
}

}  // namespace coverbot
