#pragma once

#include <optional>

#include "aztec/kravchuk.hpp"
#include "aztec/region.hpp"

namespace aztec {

/// Centre of the lower side of a horizontal domino occupying cells
/// (l-1, m) and (l, m).
struct Position {
    long l = 0;
    long m = 0;
    auto operator<=>(const Position&) const = default;
};

/// n = 4p + alpha with alpha in {0,1,2,3}.
struct SizeSplit {
    long n;
    long p;
    int alpha;
    explicit SizeSplit(long size);
};

/// Arbitrary-precision rational constrained to [0, 1].
class ExactProbability {
public:
    ExactProbability() : value_(0) {}
    explicit ExactProbability(Rat v);
    const Rat& value() const { return value_; }
    std::string str() const { return value_.get_str(); }

private:
    Rat value_;
};

/// The rational-function description of a placement probability:
/// P(l, m; 4p+alpha) = 1/4 + 2^(-4p-alpha) C(2p-1, p)^2 f(p) whenever f is
/// present; f is absent exactly when l+m == alpha (mod 2), where the
/// probability is identically zero.
struct SymbolicPlacement {
    Position position;
    int alpha = 0;
    std::optional<RationalFunction> f;
};

/// Net creation rate Cr(l, m; n) of the black-left horizontal domino:
/// 2^(1-n) K(a, b; n-1) K(b, a; n-1) with a = (l+m+n-1)/2, b = (l-m+n-1)/2
/// when l+m == n-1 (mod 2) and |l|+|m| <= n-1, and 0 otherwise.
Rat creation_rate(long l, long m, long n);

/// Exact probability that a uniform tiling of the order-n diamond contains
/// the horizontal black-left domino at (l, m): the telescoped sum
/// (1/2) * sum_k Cr(l, m-k; n-k).
ExactProbability prob_numeric(long l, long m, long n);

/// h with Cr(l, m; 4p+alpha) = 2^(-4p-alpha+1) C(2p-1,p)^2 h(p); absent when
/// parity forces the creation rate to vanish identically.
std::optional<RationalFunction> cr_symbolic(long l, long m, int alpha);

/// The rational function f_{l,m,alpha}, built by the recursive reduction to
/// the origin (vertical steps through the creation rate, reflection, and the
/// axis identities). Memoized; valid for p with 4p+alpha >= |l|+|m|+2.
SymbolicPlacement f_symbolic(long l, long m, int alpha);

/// Evaluates the symbolic formula at the p of n = 4p+alpha (requires p >= 1).
ExactProbability prob_from_symbolic(long l, long m, long n);

/// Canonical black-left horizontal position of the domino {a, b} under the
/// diamond's symmetry group; only the parity of `order` affects the result.
Position canonicalize_to_black_left(Cell a, Cell b, long order);

/// Probability that the uniform tiling contains the domino {a, b}, for any
/// orientation and colour, via symmetry canonicalization. Throws
/// std::invalid_argument for non-adjacent or out-of-diamond cells.
ExactProbability prob_general(Cell a, Cell b, long n);

/// Asymptotic placement density P(x, y) for the normalized position (x, y);
/// on the critical circle the 0/1 branch is chosen by the y < 1/2 test.
double asymptotic_prob(double x, double y);

}  // namespace aztec
