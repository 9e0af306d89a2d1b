#pragma once

#include <cstdint>
#include <string>

#include "aztec/region.hpp"

namespace aztec {

/// Deterministic fair-coin stream. Coin k is the least-significant bit of
/// the k-th output of a splitmix64 generator seeded from the 64-bit seed;
/// per-sample sub-streams mix the sample index into the seed, so samples are
/// independent and reproducible given (seed, index).
class CoinSource {
public:
    explicit CoinSource(std::uint64_t seed);
    static CoinSource for_sample(std::uint64_t seed, std::uint64_t index);
    bool flip();

private:
    std::uint64_t state_;
};

struct ShuffleState {
    long order = 0;
    Tiling tiling;  // valid full tiling of the order-`order` diamond
};

/// One destruction / sliding / creation round, growing the diamond by one.
/// Movement directions are fixed by the colour of a domino's left/bottom
/// cell in the current diamond's colouring: black-left horizontals move
/// north, white-left south; black-bottom verticals move east, white-bottom
/// west. Destruction removes the 2x2 blocks whose two parallel dominoes
/// point at each other; creation fills the leftover 2x2 blocks, taken in
/// row-major order of their lower-left cells, with one coin each (heads =
/// two horizontal dominoes). Throws std::invalid_argument on an invalid
/// input tiling.
ShuffleState shuffle_step(const ShuffleState& state, CoinSource& coins);

/// n shuffle rounds from the empty order-0 state; uniform over the coin
/// distribution.
Tiling sample(long n, CoinSource& coins);
Tiling sample(long n, std::uint64_t seed);

struct McEstimate {
    double frequency = 0;
    double stderr_ = 0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// Monte-Carlo frequency of the domino {a, b} over `samples` independent
/// tilings (sample k uses the sub-stream of (seed, k)).
McEstimate mc_estimate(long n, Cell a, Cell b, std::uint64_t samples, std::uint64_t seed);

/// Static SVG rendering of a tiling.
std::string tiling_to_svg(const Tiling& tiling);

}  // namespace aztec
