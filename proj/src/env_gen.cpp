#include "coverbot/env_gen.hpp"

#include <cstring>
#include <sstream>
#include <stdexcept>

#include "coverbot/rng.hpp"

namespace coverbot {

namespace {

FurniturePiece piece_from_strings(int id, std::initializer_list<const char*> rows) {
    FurniturePiece p;
    p.id = id;
    p.rows = static_cast<int>(rows.size());
    p.cols = static_cast<int>(std::strlen(*rows.begin()));
    for (const char* row : rows)
        for (const char* c = row; *c; ++c) p.mask.push_back(*c == 'x' ? 1 : 0);
    return p;
}

std::vector<FurniturePiece> build_catalog() {
    std::vector<FurniturePiece> cat;
    int id = 0;
    // Rectangles.
    cat.push_back(piece_from_strings(id++, {"x"}));
    cat.push_back(piece_from_strings(id++, {"xx"}));
    cat.push_back(piece_from_strings(id++, {"xxx"}));
    cat.push_back(piece_from_strings(id++, {"xxxx"}));
    cat.push_back(piece_from_strings(id++, {"xx", "xx"}));
    cat.push_back(piece_from_strings(id++, {"xxx", "xxx"}));
    cat.push_back(piece_from_strings(id++, {"xxxx", "xxxx"}));
    cat.push_back(piece_from_strings(id++, {"xxx", "xxx", "xxx"}));
    cat.push_back(piece_from_strings(id++, {"xxxx", "xxxx", "xxxx"}));
    cat.push_back(piece_from_strings(id++, {"xxxx", "xxxx", "xxxx", "xxxx"}));
    // Non-rectangular.
    cat.push_back(piece_from_strings(id++, {"x.", "x.", "xx"}));          // L
    cat.push_back(piece_from_strings(id++, {"xxx", ".x."}));              // T
    cat.push_back(piece_from_strings(id++, {".xx", "xx."}));              // S
    cat.push_back(piece_from_strings(id++, {"xx.", ".xx"}));              // Z
    cat.push_back(piece_from_strings(id++, {"x.x", "xxx"}));              // U
    cat.push_back(piece_from_strings(id++, {".x.", "xxx", ".x."}));       // plus
    cat.push_back(piece_from_strings(id++, {"x.x", "xxx", "x.x"}));       // H
    return cat;
}

// Flood fill over empty cells starting anywhere; returns the number reached.
int flood_count(const std::vector<std::uint8_t>& cells, int rows, int cols,
                CellCoord start) {
    std::vector<std::uint8_t> seen(cells.size(), 0);
    std::vector<CellCoord> stack{start};
    seen[static_cast<std::size_t>(start.row) * cols + start.col] = 1;
    int count = 0;
    while (!stack.empty()) {
        const CellCoord c = stack.back();
        stack.pop_back();
        ++count;
        const CellCoord nbrs[4] = {
            {c.row - 1, c.col}, {c.row + 1, c.col}, {c.row, c.col - 1}, {c.row, c.col + 1}};
        for (const CellCoord& n : nbrs) {
            if (n.row < 0 || n.row >= rows || n.col < 0 || n.col >= cols) continue;
            const std::size_t idx = static_cast<std::size_t>(n.row) * cols + n.col;
            if (seen[idx] || cells[idx] != 0) continue;
            seen[idx] = 1;
            stack.push_back(n);
        }
    }
    return count;
}

bool empty_region_connected(const std::vector<std::uint8_t>& cells, int rows, int cols) {
    int total_empty = 0;
    CellCoord first{-1, -1};
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (cells[static_cast<std::size_t>(r) * cols + c] == 0) {
                if (first.row < 0) first = {r, c};
                ++total_empty;
            }
    if (total_empty == 0) return false;
    return flood_count(cells, rows, cols, first) == total_empty;
}

}  // namespace

const std::vector<FurniturePiece>& furniture_catalog() {
    static const std::vector<FurniturePiece> catalog = build_catalog();
    return catalog;
}

FurniturePiece rotate_piece(const FurniturePiece& piece, int turns) {
    FurniturePiece out = piece;
    for (int t = 0; t < (turns & 3); ++t) {
        FurniturePiece r;
        r.id = out.id;
        r.rows = out.cols;
        r.cols = out.rows;
        r.mask.assign(out.mask.size(), 0);
        for (int i = 0; i < out.rows; ++i)
            for (int j = 0; j < out.cols; ++j)
                if (out.solid(i, j))
                    r.mask[static_cast<std::size_t>(out.cols - 1 - j) * r.cols + i] = 1;
        out = std::move(r);
    }
    return out;
}

Layout generate(const GenConfig& cfg) {
    if (cfg.min_dim < 1 || cfg.min_dim > cfg.max_dim)
        throw std::invalid_argument("GenConfig: require 1 <= min_dim <= max_dim");
    if (cfg.max_pieces < 0) throw std::invalid_argument("GenConfig: max_pieces >= 0");

    Rng rng(cfg.seed);
    const std::uint64_t span = static_cast<std::uint64_t>(cfg.max_dim - cfg.min_dim) + 1;

    Layout layout;
    layout.rows = cfg.min_dim + static_cast<int>(rng.below(span));
    layout.cols = cfg.min_dim + static_cast<int>(rng.below(span));
    layout.cells.assign(static_cast<std::size_t>(layout.rows) * layout.cols, 0);

    const auto& catalog = furniture_catalog();
    const int n_pieces = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.max_pieces) + 1));

    constexpr int kMaxTriesPerPiece = 50;
    for (int p = 0; p < n_pieces; ++p) {
        for (int attempt = 0; attempt < kMaxTriesPerPiece; ++attempt) {
            const FurniturePiece& base_piece = catalog[rng.below(catalog.size())];
            const FurniturePiece piece = rotate_piece(base_piece, static_cast<int>(rng.below(4)));
            if (piece.rows > layout.rows || piece.cols > layout.cols) continue;
            const int r0 = static_cast<int>(rng.below(static_cast<std::uint64_t>(layout.rows - piece.rows) + 1));
            const int c0 = static_cast<int>(rng.below(static_cast<std::uint64_t>(layout.cols - piece.cols) + 1));

            bool overlap = false;
            for (int i = 0; i < piece.rows && !overlap; ++i)
                for (int j = 0; j < piece.cols && !overlap; ++j)
                    if (piece.solid(i, j) && layout.obstacle({r0 + i, c0 + j})) overlap = true;
            if (overlap) continue;

            for (int i = 0; i < piece.rows; ++i)
                for (int j = 0; j < piece.cols; ++j)
                    if (piece.solid(i, j)) layout.set_obstacle({r0 + i, c0 + j}, true);

            if (empty_region_connected(layout.cells, layout.rows, layout.cols)) break;

            for (int i = 0; i < piece.rows; ++i)
                for (int j = 0; j < piece.cols; ++j)
                    if (piece.solid(i, j)) layout.set_obstacle({r0 + i, c0 + j}, false);
        }
    }

    int n_empty = 0;
    for (std::uint8_t c : layout.cells) n_empty += (c == 0);
    const int base_rank = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_empty)));
    int seen = 0;
    for (int r = 0; r < layout.rows; ++r)
        for (int c = 0; c < layout.cols; ++c)
            if (!layout.obstacle({r, c}) && seen++ == base_rank) layout.base = {r, c};
    return layout;
}

bool is_connected(const Layout& layout) {
    int total_empty = 0;
    for (std::uint8_t c : layout.cells) total_empty += (c == 0);
    if (total_empty == 0 || layout.obstacle(layout.base)) return false;
    return flood_count(layout.cells, layout.rows, layout.cols, layout.base) == total_empty;
}

std::string layout_to_text(const Layout& layout) {
    std::ostringstream out;
    out << layout.rows << ' ' << layout.cols << ' ' << layout.base.row << ' '
        << layout.base.col << '\n';
    for (int r = 0; r < layout.rows; ++r) {
        for (int c = 0; c < layout.cols; ++c) out << (layout.obstacle({r, c}) ? 'x' : '.');
        out << '\n';
    }
    return out.str();
}

Layout layout_from_text(const std::string& text) {
    std::istringstream in(text);
    Layout layout;
    if (!(in >> layout.rows >> layout.cols >> layout.base.row >> layout.base.col))
        throw std::invalid_argument("layout text: bad header");
    if (layout.rows < 1 || layout.cols < 1)
        throw std::invalid_argument("layout text: bad dimensions");
    layout.cells.assign(static_cast<std::size_t>(layout.rows) * layout.cols, 0);
    std::string line;
    std::getline(in, line);  // rest of header line
    for (int r = 0; r < layout.rows; ++r) {
        if (!std::getline(in, line) || static_cast<int>(line.size()) != layout.cols)
            throw std::invalid_argument("layout text: bad row " + std::to_string(r));
        for (int c = 0; c < layout.cols; ++c) {
            if (line[c] == 'x')
                layout.set_obstacle({r, c}, true);
            else if (line[c] != '.')
                throw std::invalid_argument("layout text: bad character");
        }
    }
    if (!layout.in_bounds(layout.base) || layout.obstacle(layout.base))
        throw std::invalid_argument("layout text: base not on an empty cell");
    return layout;
}

}  // namespace coverbot
