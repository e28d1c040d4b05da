#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coverbot/grid.hpp"

namespace coverbot {

// One furniture piece: a small occupancy mask, bounding box at most 4x4.
struct FurniturePiece {
    int id = 0;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> mask;  // row-major, 1=solid

    bool solid(int r, int c) const {
        return mask[static_cast<std::size_t>(r) * cols + c] != 0;
    }
};

struct GenConfig {
    int min_dim = 10;
    int max_dim = 20;  // inclusive
    int max_pieces = 6;
    std::uint64_t seed = 0;
};

// The fixed 17-piece catalog: the ten rectangles 1x1..4x4 plus L, T, S, Z, U,
// plus and H shaped masks. Ids 0..16 in that order.
const std::vector<FurniturePiece>& furniture_catalog();

// Quarter-turn rotations of a piece mask (turns = 0..3, counterclockwise).
FurniturePiece rotate_piece(const FurniturePiece& piece, int turns);

// Procedurally generate a room: dims uniform in [min_dim, max_dim]^2, piece
// count uniform in 0..max_pieces, each piece drawn uniformly from the catalog
// with uniform orientation and position. Placements that overlap obstacles or
// disconnect the empty region are redrawn (50 tries, then the piece is
// skipped). The base is drawn uniformly over the remaining empty cells.
// Deterministic in cfg.seed.
Layout generate(const GenConfig& cfg);

// True iff flood fill (4-neighborhood) from layout.base reaches every empty
// cell. Requires at least one empty cell.
bool is_connected(const Layout& layout);

// Text format: "rows cols base_row base_col\n" then rows lines of '.'/'x',
// each newline-terminated.
std::string layout_to_text(const Layout& layout);
Layout layout_from_text(const std::string& text);  // throws on malformed input

}  // namespace coverbot
