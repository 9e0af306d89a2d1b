#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace aztec {

/// Unit square named by its lower-left integer corner.
struct Cell {
    long i = 0;
    long j = 0;
    auto operator<=>(const Cell&) const = default;
};

/// The order-n Aztec diamond contains cell (i,j) iff |i+1/2| + |j+1/2| <= n.
bool in_diamond(Cell c, long order);

/// Chessboard colouring with the left one of the top-most squares black:
/// cell (i,j) is black iff i + j == order (mod 2).
bool is_black(Cell c, long order);

// The symmetry maps of the diamond on cells (all three send the diamond of
// any order to itself and biject its tilings).
Cell reflect_cell(Cell c);  // (i,j) -> (-1-i, j)
Cell rot90_cell(Cell c);    // (i,j) -> (j, -1-i)
Cell rot180_cell(Cell c);   // (i,j) -> (-1-i, -1-j)

/// Unordered pair of adjacent cells, stored with the lexicographically
/// smaller cell first.
struct Domino {
    Cell a;
    Cell b;
    Domino() = default;
    Domino(Cell x, Cell y);
    bool horizontal() const { return a.j == b.j; }
    auto operator<=>(const Domino&) const = default;
};

/// Aztec diamond of a given order with a set of removed unit cells.
struct Region {
    long order = 1;
    std::set<Cell> removed;

    Region() = default;
    explicit Region(long n) : order(n) {}
    Region(long n, std::set<Cell> cells);

    /// Throws std::invalid_argument when a removed cell is outside the
    /// diamond (duplicates are absorbed by the set).
    void validate() const;
    /// Removed black cells minus removed white cells; tilings exist only
    /// when this is zero.
    long balance_indicator() const;
    Region without(const std::vector<Cell>& cells) const;
};

struct Tiling {
    long order = 0;
    std::vector<Domino> dominoes;  // sorted, canonical

    void sort_canonical();
    bool contains(const Domino& d) const;
    /// Every non-removed cell covered exactly once, no domino on a removed
    /// or outside cell.
    bool valid_for(const Region& region) const;
};

// JSON (region_oracle schema):
//   Region: {"order": n, "removed": [[i,j], ...]}
//   Tiling: {"order": n, "dominoes": [[[i,j],[i2,j2]], ...]}
// with cells in lexicographic order inside each pair and pairs sorted.
std::string region_to_json(const Region& region);
Region region_from_json(const std::string& text);
std::string tiling_to_json(const Tiling& tiling);
Tiling tiling_from_json(const std::string& text);

}  // namespace aztec
