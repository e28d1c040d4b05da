#include "coverbot/world.hpp"

#include <stdexcept>

#include "coverbot/env_gen.hpp"

namespace coverbot {

const char* to_string(DoneReason r) {
    switch (r) {
        case DoneReason::BudgetExhausted: return "budget_exhausted";
        case DoneReason::FullCoverage: return "full_coverage";
        case DoneReason::None: break;
    }
    return "none";
}

World::World(Layout layout, int budget)
    : layout_(std::move(layout)), budget_(budget) {
    if (budget_ < 1) throw std::invalid_argument("world: budget must be >= 1");
    if (!layout_.in_bounds(layout_.base) || layout_.obstacle(layout_.base))
        throw std::invalid_argument("world: base must be an empty layout cell");
    if (!is_connected(layout_))
        throw std::invalid_argument("world: empty region must be 4-connected");

    for (std::uint8_t c : layout_.cells) empty_count_ += (c == 0);

    knowledge_.assign(layout_.cells.size(), kUnobserved);
    visited_.assign(layout_.cells.size(), 0);
    knowledge_[idx(layout_.base)] = kKnownBase;
    visited_[idx(layout_.base)] = 1;
    visited_count_ = 1;
    pos_ = layout_.base;
    refresh_done();
}

void World::refresh_done() {
    if (visited_count_ == empty_count_) {
        done_ = true;
        done_reason_ = DoneReason::FullCoverage;
    } else if (step_ >= budget_) {
        done_ = true;
        done_reason_ = DoneReason::BudgetExhausted;
    }
}

StepOutcome World::apply_action(Action action) {
    if (done_) throw std::logic_error("world: apply_action on a finished world");

    ++step_;
    StepOutcome out;

    switch (action) {
        case Action::TurnLeft:
            heading_ = turn_left(heading_);
            break;
        case Action::TurnRight:
            heading_ = turn_right(heading_);
            break;
        case Action::Forward: {
            const CellCoord t = cell_ahead(pos_, heading_);
            if (!layout_.in_bounds(t) || layout_.obstacle(t)) {
                // Bumper hit. The outer boundary is an implicit wall and has
                // no knowledge cell to write.
                if (layout_.in_bounds(t)) knowledge_[idx(t)] = kKnownObstacle;
                ++collision_count_;
                out.collided = true;
                out.reward = -1;
            } else {
                pos_ = t;
                if (knowledge_[idx(t)] == kUnobserved) knowledge_[idx(t)] = kKnownEmpty;
                if (!visited_[idx(t)]) {
                    visited_[idx(t)] = 1;
                    ++visited_count_;
                    out.newly_visited = true;
                    out.reward = 1;
                }
            }
            break;
        }
    }

    refresh_done();
    out.done = done_;
    out.done_reason = done_reason_;
    return out;
}

Observation World::observe() const {
    Observation obs;
    obs.step = step_;

    const CellCoord ahead = heading_delta(heading_);
    const CellCoord right = heading_delta(turn_right(heading_));
    constexpr int kHalf = kWindowSide / 2;

    for (int wr = 0; wr < kWindowSide; ++wr) {
        for (int wc = 0; wc < kWindowSide; ++wc) {
            const int f = kHalf - wr;  // cells ahead of the agent
            const int r = wc - kHalf;  // cells to the agent's right
            const CellCoord cell{pos_.row + f * ahead.row + r * right.row,
                                 pos_.col + f * ahead.col + r * right.col};
            obs.window[static_cast<std::size_t>(wr) * kWindowSide + wc] =
                layout_.in_bounds(cell) ? knowledge_[idx(cell)] : kUnobserved;
        }
    }
    return obs;
}

}  // namespace coverbot
