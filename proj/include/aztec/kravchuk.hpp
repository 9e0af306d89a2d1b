#pragma once

#include "aztec/ratfunc.hpp"

namespace aztec {

/// C(n, k) with the usual convention that out-of-range k gives 0. For
/// negative upper index the generalized value (-1)^k * C(k-n-1, k) is used.
Int binomial(long n, long k);

/// Kravchuk polynomial K(a, b; n): the coefficient of z^a in
/// (1+z)^(n-b) * (1-z)^b, computed by the alternating binomial sum.
/// Returns 0 for a < 0 or a > n.
Int krav_eval(long a, long b, long n);

/// Test oracle: the same coefficient extracted by expanding the generating
/// product. Requires 0 <= b <= n.
Int krav_eval_by_expansion(long a, long b, long n);

/// The symmetry ratio ((a+2p)! (2p+alpha-1-a)!) / ((b+2p)! (2p+alpha-1-b)!)
/// as a rational function of p, so that
///   K(b+2p, a+2p; 4p+alpha-1) = factor * K(a+2p, b+2p; 4p+alpha-1).
RationalFunction krav_symmetry_factor(long a, long b, int alpha);

/// Growth function g_{a,b,alpha} with
///   K(a+2p, b+2p; 4p+alpha-1) = (-1)^p * C(2p-1, p) * g_{a,b,alpha}(p)
/// for every integer p >= 1 keeping both shifted indices inside the
/// polynomial range, 0 <= a+2p, b+2p <= 4p+alpha-1. Base cases are the
/// (0,0), (1,0), (1,1) entries plus (0,1) by symmetry; other keys reduce via
/// the index-raising three-term recurrence (forward for a >= 2, backward for
/// a < 0) and then the symmetry factor. Memoized.
RationalFunction growth_g(long a, long b, int alpha);

/// C(2(p+s)-1, p+s) / C(2p-1, p) as a rational function of p, derived from
/// the factorial quotients.
RationalFunction central_binomial_shift(int s);

}  // namespace aztec
