#include "aztec/shuffle.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace aztec {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

CoinSource::CoinSource(std::uint64_t seed) : state_(seed) {}

CoinSource CoinSource::for_sample(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    CoinSource c(splitmix64(s));
    return c;
}

bool CoinSource::flip() { return splitmix64(state_) & 1; }

ShuffleState shuffle_step(const ShuffleState& state, CoinSource& coins) {
    const long n0 = state.order;
    const long n1 = n0 + 1;
    if (!state.tiling.valid_for(Region(n0)))
        throw std::invalid_argument("shuffle_step: input is not a valid tiling of order " +
                                    std::to_string(n0));

    struct Move {
        Domino d;
        long di, dj;
        bool dead = false;
    };
    std::vector<Move> moves;
    moves.reserve(state.tiling.dominoes.size());
    std::map<Cell, std::size_t> by_anchor;  // left cell of horizontals, bottom of verticals
    for (const Domino& d : state.tiling.dominoes) {
        Move mv{d, 0, 0};
        if (d.horizontal()) {
            mv.dj = is_black(d.a, n0) ? 1 : -1;
        } else {
            mv.di = is_black(d.a, n0) ? 1 : -1;
        }
        by_anchor[d.a] = moves.size();
        moves.push_back(mv);
    }

    // Destruction: two stacked horizontals colliding (lower moves north,
    // upper south) or two side-by-side verticals colliding.
    for (Move& mv : moves) {
        if (mv.dead) continue;
        if (mv.d.horizontal() && mv.dj == 1) {
            auto it = by_anchor.find(Cell{mv.d.a.i, mv.d.a.j + 1});
            if (it != by_anchor.end()) {
                Move& other = moves[it->second];
                if (other.d.horizontal() && other.dj == -1) mv.dead = other.dead = true;
            }
        } else if (!mv.d.horizontal() && mv.di == 1) {
            auto it = by_anchor.find(Cell{mv.d.a.i + 1, mv.d.a.j});
            if (it != by_anchor.end()) {
                Move& other = moves[it->second];
                if (!other.d.horizontal() && other.di == -1) mv.dead = other.dead = true;
            }
        }
    }

    // Sliding.
    std::set<Cell> covered;
    Tiling next;
    next.order = n1;
    for (const Move& mv : moves) {
        if (mv.dead) continue;
        Cell a{mv.d.a.i + mv.di, mv.d.a.j + mv.dj};
        Cell b{mv.d.b.i + mv.di, mv.d.b.j + mv.dj};
        for (Cell c : {a, b}) {
            if (!in_diamond(c, n1) || !covered.insert(c).second)
                throw std::logic_error("shuffle slide produced an overlap");
        }
        next.dominoes.emplace_back(a, b);
    }

    // Creation: the uncovered area splits uniquely into 2x2 blocks; fill
    // them in row-major order of their lower-left cells.
    std::vector<Cell> uncovered;
    for (long j = -n1; j < n1; ++j)
        for (long i = -n1; i < n1; ++i) {
            Cell c{i, j};
            if (in_diamond(c, n1) && !covered.count(c)) uncovered.push_back(c);
        }
    std::set<Cell> open(uncovered.begin(), uncovered.end());
    for (const Cell& c : uncovered) {
        if (!open.count(c)) continue;
        const Cell east{c.i + 1, c.j}, north{c.i, c.j + 1}, ne{c.i + 1, c.j + 1};
        if (!open.count(east) || !open.count(north) || !open.count(ne))
            throw std::logic_error("uncovered area is not a disjoint union of 2x2 blocks");
        for (Cell x : {c, east, north, ne}) open.erase(x);
        if (coins.flip()) {
            next.dominoes.emplace_back(c, east);
            next.dominoes.emplace_back(north, ne);
        } else {
            next.dominoes.emplace_back(c, north);
            next.dominoes.emplace_back(east, ne);
        }
    }
    next.sort_canonical();
    return ShuffleState{n1, next};
}

Tiling sample(long n, CoinSource& coins) {
    if (n < 0) throw std::invalid_argument("sample: n must be nonnegative");
    ShuffleState state;
    for (long k = 0; k < n; ++k) state = shuffle_step(state, coins);
    return state.tiling;
}

Tiling sample(long n, std::uint64_t seed) {
    CoinSource coins(seed);
    return sample(n, coins);
}

McEstimate mc_estimate(long n, Cell a, Cell b, std::uint64_t samples, std::uint64_t seed) {
    if (n < 1 || samples == 0) throw std::invalid_argument("mc_estimate: need n >= 1, samples >= 1");
    if (std::labs(a.i - b.i) + std::labs(a.j - b.j) != 1)
        throw std::invalid_argument("cells are not adjacent");
    if (!in_diamond(a, n) || !in_diamond(b, n))
        throw std::invalid_argument("cell outside the diamond");
    const Domino d(a, b);
    McEstimate est;
    est.samples = samples;
    for (std::uint64_t k = 0; k < samples; ++k) {
        CoinSource coins = CoinSource::for_sample(seed, k);
        if (sample(n, coins).contains(d)) ++est.hits;
    }
    est.frequency = static_cast<double>(est.hits) / static_cast<double>(samples);
    est.stderr_ = std::sqrt(est.frequency * (1 - est.frequency) / static_cast<double>(samples));
    return est;
}

std::string tiling_to_svg(const Tiling& tiling) {
    const long n = tiling.order;
    const int unit = 20;
    const long size = 2 * n * unit;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    svg << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    for (const Domino& d : tiling.dominoes) {
        const long x = (d.a.i + n) * unit;
        // SVG y axis points down.
        const long y = (n - 1 - std::max(d.a.j, d.b.j)) * unit;
        const long w = d.horizontal() ? 2 * unit : unit;
        const long h = d.horizontal() ? unit : 2 * unit;
        const char* fill = d.horizontal() ? (is_black(d.a, n) ? "#4477aa" : "#66ccee")
                                          : (is_black(d.a, n) ? "#ee6677" : "#ccbb44");
        svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
            << "\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace aztec
