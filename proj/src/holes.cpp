#include "aztec/holes.hpp"

#include <stdexcept>

namespace aztec {

namespace {

struct HolePairs {
    // Horizontal pairs first (top, bottom), then vertical (left, right).
    std::array<std::pair<Cell, Cell>, 4> pairs;
};

HolePairs hole_pairs(long l, long m) {
    HolePairs hp;
    hp.pairs[0] = {Cell{l - 1, m}, Cell{l, m}};          // top
    hp.pairs[1] = {Cell{l - 1, m - 1}, Cell{l, m - 1}};  // bottom
    hp.pairs[2] = {Cell{l - 1, m - 1}, Cell{l - 1, m}};  // left
    hp.pairs[3] = {Cell{l, m - 1}, Cell{l, m}};          // right
    return hp;
}

Rat pow2_int(long e) {
    Int v = 1;
    v <<= e;
    return Rat(v);
}

}  // namespace

std::array<Cell, 4> HoleSpec::cells() const {
    return {Cell{center.l - 1, center.m}, Cell{center.l, center.m},
            Cell{center.l - 1, center.m - 1}, Cell{center.l, center.m - 1}};
}

Int hole_count(const HoleSpec& spec) {
    for (const Cell& c : spec.cells())
        if (!in_diamond(c, spec.order))
            throw std::invalid_argument("hole not inside the order-" +
                                        std::to_string(spec.order) + " diamond");
    HolePairs hp = hole_pairs(spec.center.l, spec.center.m);
    std::array<Rat, 4> prob;
    for (int k = 0; k < 4; ++k)
        prob[k] = prob_general(hp.pairs[k].first, hp.pairs[k].second, spec.order).value();

    Rat count = (prob[0] * prob[1] + prob[2] * prob[3]) *
                pow2_int(spec.order * (spec.order + 1) / 2);
    count.canonicalize();
    if (count.get_den() != 1)
        throw std::logic_error("hole count did not clear to an integer: " + count.get_str());
    return count.get_num();
}

HoleSymbolic hole_symbolic(long l, long m, int alpha) {
    if (alpha < 0 || alpha > 3) throw std::invalid_argument("alpha must be in 0..3");
    HolePairs hp = hole_pairs(l, m);
    std::array<RationalFunction, 4> f;
    for (int k = 0; k < 4; ++k) {
        Position pos = canonicalize_to_black_left(hp.pairs[k].first, hp.pairs[k].second, alpha);
        SymbolicPlacement sp = f_symbolic(pos.l, pos.m, alpha);
        if (!sp.f)
            throw std::domain_error("constituent " + std::to_string(k) +
                                    " of the hole formula vanishes by parity");
        f[k] = *sp.f;
    }
    HoleSymbolic result;
    result.alpha = alpha;
    result.g = f[0] + f[1] + f[2] + f[3];
    result.h = f[0] * f[1] + f[2] * f[3];
    return result;
}

Int hole_count_from_symbolic(long l, long m, long n) {
    SizeSplit split(n);
    if (split.p < 1) throw std::invalid_argument("hole_count_from_symbolic needs n >= 4");
    HoleSymbolic hs = hole_symbolic(l, m, split.alpha);
    const Rat p(split.p);
    const Int c = binomial(2 * split.p - 1, split.p);
    Rat value = Rat(1, 8) + Rat(c * c) * hs.g.eval(p) / pow2_int(n + 2) +
                Rat(c * c * c * c) * hs.h.eval(p) / pow2_int(2 * n);
    value *= pow2_int(n * (n + 1) / 2);
    value.canonicalize();
    if (value.get_den() != 1)
        throw std::logic_error("symbolic hole count did not clear to an integer");
    return value.get_num();
}

Int ciucu_count(long n) {
    if (n >= 2 && n % 4 == 2) {
        const long p = (n - 2) / 4;
        Int v = 1;
        v <<= 8 * p * p + 10 * p;
        return v;
    }
    if (n >= 3 && n % 4 == 3) {
        const long p = (n - 3) / 4;
        Int v = 1;
        v <<= 8 * p * p + 14 * p + 3;
        return v;
    }
    throw std::domain_error("not covered by Ciucu's theorem (need n == 2 or 3 mod 4)");
}

}  // namespace aztec
