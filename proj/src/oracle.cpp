#include "aztec/oracle.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace aztec {

namespace {

// Rows are indexed relative to -order, so bit (j + order) tracks whether the
// cell in that row of the next column is already covered by a protruding
// horizontal domino.
struct ColumnGeometry {
    long jmin, jmax;  // inclusive row range of the column, jmin > jmax if empty
};

ColumnGeometry column_range(long i, long order) {
    const long r = 2 * order - std::labs(2 * i + 1);
    if (r < 0) return {0, -1};
    return {-(r + 1) / 2, (r - 1) / 2};
}

}  // namespace

Int count_tilings(const Region& region, long cap) {
    region.validate();
    // The frontier is a 2n-bit mask; 32 is the hard ceiling no matter how
    // far the configurable cap is raised.
    if (region.order > std::min(cap, 32L))
        throw std::domain_error("region too large for oracle");
    if (region.balance_indicator() != 0) return 0;
    const long n = region.order;
    if (n == 0) return 1;

    auto removed = [&](long i, long j) { return region.removed.count(Cell{i, j}) != 0; };
    auto bit = [&](long j) { return std::uint64_t{1} << (j + n); };

    std::unordered_map<std::uint64_t, mpz_class> state{{0, mpz_class(1)}};
    for (long i = -n; i < n; ++i) {
        const auto [jmin, jmax] = column_range(i, n);
        const auto [njmin, njmax] = column_range(i + 1, n);
        auto next_exists = [&](long j) { return i + 1 < n && j >= njmin && j <= njmax; };

        std::unordered_map<std::uint64_t, mpz_class> next;
        // Fill the free cells of column i with vertical dominoes and
        // horizontal protrusions into column i+1.
        std::function<void(long, std::uint64_t, std::uint64_t, const mpz_class&)> fill =
            [&](long j, std::uint64_t covered, std::uint64_t out, const mpz_class& ways) {
                while (j <= jmax && ((covered & bit(j)) || removed(i, j))) ++j;
                if (j > jmax) {
                    next[out] += ways;
                    return;
                }
                if (j + 1 <= jmax && !(covered & bit(j + 1)) && !removed(i, j + 1))
                    fill(j + 2, covered | bit(j) | bit(j + 1), out, ways);
                if (next_exists(j) && !removed(i + 1, j))
                    fill(j + 1, covered | bit(j), out | bit(j), ways);
            };
        for (const auto& [in_mask, ways] : state) fill(jmin, in_mask, 0, ways);
        state = std::move(next);
    }
    auto it = state.find(0);
    return it == state.end() ? mpz_class(0) : it->second;
}

std::vector<Tiling> enumerate_tilings(const Region& region, std::size_t limit, long cap) {
    mpz_class total = count_tilings(region, cap);
    if (total > static_cast<unsigned long>(limit))
        throw std::domain_error("too many tilings to enumerate (" + total.get_str() + ")");

    const long n = region.order;
    std::vector<Cell> cells;
    for (long i = -n; i < n; ++i)
        for (long j = -n; j < n; ++j) {
            Cell c{i, j};
            if (in_diamond(c, n) && !region.removed.count(c)) cells.push_back(c);
        }

    std::set<Cell> free_cells(cells.begin(), cells.end());
    std::vector<Domino> current;
    std::vector<Tiling> result;
    std::function<void()> recurse = [&]() {
        if (free_cells.empty()) {
            Tiling t;
            t.order = n;
            t.dominoes = current;
            t.sort_canonical();
            result.push_back(std::move(t));
            return;
        }
        Cell c = *free_cells.begin();
        for (Cell d : {Cell{c.i + 1, c.j}, Cell{c.i, c.j + 1}}) {
            if (!free_cells.count(d)) continue;
            free_cells.erase(c);
            free_cells.erase(d);
            current.emplace_back(c, d);
            recurse();
            current.pop_back();
            free_cells.insert(c);
            free_cells.insert(d);
        }
    };
    recurse();
    return result;
}

bool kuo_check(const Region& region, Cell a, Cell b, Cell c, Cell d, long cap) {
    // The four cells must be a 2x2 block in cyclic order: consecutive cells
    // adjacent, opposite cells diagonal.
    const Cell cells[4] = {a, b, c, d};
    long imin = a.i, jmin = a.j;
    for (const Cell& x : cells) {
        imin = std::min(imin, x.i);
        jmin = std::min(jmin, x.j);
        if (!in_diamond(x, region.order) || region.removed.count(x))
            throw std::invalid_argument("kuo_check: cell outside the region");
    }
    std::set<Cell> block{cells, cells + 4};
    std::set<Cell> expected{{imin, jmin}, {imin + 1, jmin}, {imin, jmin + 1}, {imin + 1, jmin + 1}};
    if (block != expected) throw std::invalid_argument("kuo_check: cells are not a 2x2 block");
    auto adjacent = [](Cell x, Cell y) {
        return std::labs(x.i - y.i) + std::labs(x.j - y.j) == 1;
    };
    for (int k = 0; k < 4; ++k)
        if (!adjacent(cells[k], cells[(k + 1) % 4]))
            throw std::invalid_argument("kuo_check: cells are not in cyclic order");

    auto m = [&](const std::vector<Cell>& drop) { return count_tilings(region.without(drop), cap); };
    mpz_class lhs = m({}) * m({a, b, c, d});
    mpz_class rhs = m({a, b}) * m({c, d}) - m({a, c}) * m({b, d}) + m({a, d}) * m({b, c});
    return lhs == rhs;
}

}  // namespace aztec
