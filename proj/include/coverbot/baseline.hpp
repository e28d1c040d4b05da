#pragma once

#include <cstdint>

#include "coverbot/rng.hpp"
#include "coverbot/world.hpp"

namespace coverbot {

enum class BaselineMode : std::uint8_t { Spiral, RandomWalk };
enum class TurnDir : std::uint8_t { Left, Right };

// The bumper-only baseline: an outward square spiral (forward runs of lengths
// 1,1,2,2,3,3,... separated by single turns in a per-episode fixed direction)
// until the first collision, then random walk for the rest of the episode:
// drive forward, and on a collision commit to a random turn direction, turning
// that way again after every blocked forward until a forward succeeds.
//
// Deliberately blind to the knowledge map: decisions use only the previous
// StepOutcome and internal state.
class BaselinePolicy {
public:
    explicit BaselinePolicy(std::uint64_t seed);
    BaselinePolicy(std::uint64_t seed, TurnDir spiral_turn);

    // last is null on the first call of an episode.
    Action next(const Observation& obs, const StepOutcome* last);

    BaselineMode mode() const { return mode_; }
    TurnDir spiral_turn() const { return spiral_turn_; }

private:
    Action spiral_next();
    Action random_walk_next(const StepOutcome* last);

    Rng rng_;
    BaselineMode mode_ = BaselineMode::Spiral;
    TurnDir spiral_turn_ = TurnDir::Left;
    int leg_length_ = 1;
    int steps_remaining_ = 1;
    int legs_done_at_length_ = 0;
    bool turn_committed_ = false;
    Action committed_turn_ = Action::TurnLeft;
    Action last_action_ = Action::Forward;
};

}  // namespace coverbot
