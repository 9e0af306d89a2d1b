#pragma once

#include <cstddef>
#include <vector>

#include "aztec/numeric.hpp"
#include "aztec/region.hpp"

namespace aztec {

inline constexpr long kDefaultOracleCap = 12;

/// Exact number of domino tilings of the region, by a column-sweep
/// broken-profile dynamic program with a bitmask of protruding dominoes.
/// Returns 0 for colour-unbalanced or untileable regions. Throws
/// std::domain_error("region too large for oracle") above the cap.
Int count_tilings(const Region& region, long cap = kDefaultOracleCap);

/// All tilings of the region. Throws std::domain_error when the count
/// exceeds the limit.
std::vector<Tiling> enumerate_tilings(const Region& region, std::size_t limit = 100000,
                                      long cap = kDefaultOracleCap);

/// Checks the condensation identity
///   M(G) M(G\{a,b,c,d}) = M(G\{a,b}) M(G\{c,d}) - M(G\{a,c}) M(G\{b,d})
///                         + M(G\{a,d}) M(G\{b,c})
/// for the four cells of a 2x2 block inside the region, listed cyclically.
/// Throws std::invalid_argument when the cells do not satisfy that
/// precondition.
bool kuo_check(const Region& region, Cell a, Cell b, Cell c, Cell d,
               long cap = kDefaultOracleCap);

}  // namespace aztec
