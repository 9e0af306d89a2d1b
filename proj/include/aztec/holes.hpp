#pragma once

#include <array>

#include "aztec/placement.hpp"

namespace aztec {

/// 2x2-square hole centred at (l, m): the removed cells are (l-1, m),
/// (l, m), (l-1, m-1), (l, m-1).
struct HoleSpec {
    Position center;
    long order = 1;
    std::array<Cell, 4> cells() const;
};

/// The rational functions of the closed-form count
///   2^((4p+alpha+1)(4p+alpha)/2) * (1/8 + 2^(-4p-alpha-2) C(2p-1,p)^2 g(p)
///                                      + 2^(-8p-2alpha) C(2p-1,p)^4 h(p)).
struct HoleSymbolic {
    int alpha = 0;
    RationalFunction g;
    RationalFunction h;
};

/// Number of tilings of the holed diamond, from the condensation identity:
/// [P(top) P(bottom) + P(left) P(right)] * 2^(n(n+1)/2), with the four pair
/// probabilities canonicalized through prob_general. The rational expression
/// always clears to an integer (asserted). Throws when the hole is not
/// inside the diamond.
Int hole_count(const HoleSpec& spec);

/// g and h built from the four canonicalized constituent f-functions.
HoleSymbolic hole_symbolic(long l, long m, int alpha);

/// Evaluates the closed form at p >= 1 for n = 4p + alpha.
Int hole_count_from_symbolic(long l, long m, long n);

/// Central-hole counts from the reflection theorem: 2^(8p^2+10p) for
/// n = 4p+2 and 2^(8p^2+14p+3) for n = 4p+3. Throws for other residues.
Int ciucu_count(long n);

}  // namespace aztec
