#pragma once

#include <cstdint>
#include <vector>

namespace coverbot {

struct CellCoord {
    int row = 0;
    int col = 0;
    bool operator==(const CellCoord&) const = default;
};

enum class Heading : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

// Action indices are fixed project-wide: 0=Forward, 1=TurnLeft, 2=TurnRight.
enum class Action : std::uint8_t { Forward = 0, TurnLeft = 1, TurnRight = 2 };

inline constexpr int kActionCount = 3;

constexpr Heading turn_left(Heading h) {
    return static_cast<Heading>((static_cast<int>(h) + 3) % 4);
}

constexpr Heading turn_right(Heading h) {
    return static_cast<Heading>((static_cast<int>(h) + 1) % 4);
}

// Row/col delta of one forward step. Row 0 is the top row, so North is -row.
constexpr CellCoord heading_delta(Heading h) {
    switch (h) {
        case Heading::North: return {-1, 0};
        case Heading::East: return {0, 1};
        case Heading::South: return {1, 0};
        case Heading::West: return {0, -1};
    }
    return {0, 0};
}

constexpr CellCoord cell_ahead(CellCoord pos, Heading h) {
    const CellCoord d = heading_delta(h);
    return {pos.row + d.row, pos.col + d.col};
}

// Knowledge-map cell values, as the agent sees them.
inline constexpr std::int8_t kUnobserved = -1;
inline constexpr std::int8_t kKnownEmpty = 0;
inline constexpr std::int8_t kKnownObstacle = 1;
inline constexpr std::int8_t kKnownBase = 2;

// Ground-truth room layout: rectangular grid of empty/obstacle plus the base
// cell. Generated layouts have dims in [10, 20]; hand-built test layouts may
// be any size.
struct Layout {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> cells;  // row-major, 0=empty 1=obstacle
    CellCoord base;

    bool in_bounds(CellCoord c) const {
        return c.row >= 0 && c.row < rows && c.col >= 0 && c.col < cols;
    }
    bool obstacle(CellCoord c) const {
        return cells[static_cast<std::size_t>(c.row) * cols + c.col] != 0;
    }
    void set_obstacle(CellCoord c, bool v) {
        cells[static_cast<std::size_t>(c.row) * cols + c.col] = v ? 1 : 0;
    }
};

}  // namespace coverbot
