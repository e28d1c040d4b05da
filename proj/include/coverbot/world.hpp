#pragma once

#include <array>
#include <cstdint>

#include "coverbot/grid.hpp"

namespace coverbot {

inline constexpr int kDefaultBudget = 1800;  // one simulated hour, 1 step = 1 s
inline constexpr int kWindowSide = 9;
inline constexpr int kWindowCells = kWindowSide * kWindowSide;

enum class DoneReason : std::uint8_t { None = 0, BudgetExhausted, FullCoverage };

const char* to_string(DoneReason r);

struct StepOutcome {
    int reward = 0;  // -1 collision, +1 newly visited cell, 0 otherwise
    bool collided = false;
    bool newly_visited = false;
    bool done = false;
    DoneReason done_reason = DoneReason::None;
};

// What the agent is allowed to see: the step count plus a 9x9 egocentric crop
// of the knowledge map, rotated so the heading points toward the top row.
// Out-of-bounds cells read as Unobserved. Visited flags are not exposed.
struct Observation {
    int step = 0;
    std::array<std::int8_t, kWindowCells> window{};  // row-major
};

// Full simulation state: hidden ground truth, the agent's knowledge map and
// pose, and the coverage/collision accounting. Self-contained value; run as
// many worlds in parallel as you like, but mutate each from one thread.
class World {
public:
    explicit World(Layout layout, int budget = kDefaultBudget);

    StepOutcome apply_action(Action action);
    double coverage() const { return static_cast<double>(visited_count_) / empty_count_; }
    Observation observe() const;

    const Layout& layout() const { return layout_; }
    CellCoord pos() const { return pos_; }
    Heading heading() const { return heading_; }
    int step() const { return step_; }
    int budget() const { return budget_; }
    int visited_count() const { return visited_count_; }
    int empty_count() const { return empty_count_; }
    int collision_count() const { return collision_count_; }
    bool done() const { return done_; }
    DoneReason done_reason() const { return done_reason_; }
    std::int8_t knowledge_at(CellCoord c) const {
        return knowledge_[static_cast<std::size_t>(c.row) * layout_.cols + c.col];
    }

private:
    std::size_t idx(CellCoord c) const {
        return static_cast<std::size_t>(c.row) * layout_.cols + c.col;
    }
    void refresh_done();

    Layout layout_;
    std::vector<std::int8_t> knowledge_;
    std::vector<std::uint8_t> visited_;
    CellCoord pos_;
    Heading heading_ = Heading::North;
    int step_ = 0;
    int budget_ = kDefaultBudget;
    int visited_count_ = 0;
    int empty_count_ = 0;
    int collision_count_ = 0;
    bool done_ = false;
    DoneReason done_reason_ = DoneReason::None;
};

}  // namespace coverbot
