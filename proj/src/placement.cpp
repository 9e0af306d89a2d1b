#include "aztec/placement.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace aztec {

namespace {

bool same_parity(long x, long y) { return ((x - y) % 2) == 0; }

Rat pow2_rat(long e) {  // 2^e as an exact rational, e may be negative
    Int num = 1, den = 1;
    if (e >= 0)
        num <<= e;
    else
        den <<= -e;
    return Rat(num, den);
}

}  // namespace

SizeSplit::SizeSplit(long size) : n(size) {
    if (size < 0) throw std::invalid_argument("size must be nonnegative");
    p = size / 4;
    alpha = static_cast<int>(size % 4);
}

ExactProbability::ExactProbability(Rat v) : value_(std::move(v)) {
    value_.canonicalize();
    if (value_ < 0 || value_ > 1)
        throw std::logic_error("probability out of [0,1]: " + value_.get_str());
}

Rat creation_rate(long l, long m, long n) {
    if (n < 1) throw std::invalid_argument("creation_rate: n must be positive");
    if (!same_parity(l + m, n - 1)) return 0;
    if (std::labs(l) + std::labs(m) > n - 1) return 0;
    const long a = (l + m + n - 1) / 2;
    const long b = (l - m + n - 1) / 2;
    Rat r = Rat(krav_eval(a, b, n - 1) * krav_eval(b, a, n - 1)) * pow2_rat(1 - n);
    r.canonicalize();
    return r;
}

ExactProbability prob_numeric(long l, long m, long n) {
    if (n < 1) throw std::invalid_argument("prob_numeric: n must be positive");
    Rat sum = 0;
    for (long k = 0; k < n; ++k) sum += creation_rate(l, m - k, n - k);
    sum /= 2;
    sum.canonicalize();
    return ExactProbability(sum);
}

std::optional<RationalFunction> cr_symbolic(long l, long m, int alpha) {
    if (alpha < 0 || alpha > 3) throw std::invalid_argument("alpha must be in 0..3");
    if (!same_parity(l + m, alpha + 1)) return std::nullopt;
    const long a = (l + m + alpha - 1) / 2;
    const long b = (l - m + alpha - 1) / 2;
    RationalFunction g = growth_g(a, b, alpha);
    return g * g * krav_symmetry_factor(a, b, alpha);
}

namespace {

std::mutex g_f_mutex;
std::map<std::tuple<long, long, int>, std::optional<RationalFunction>> g_f_memo;

std::optional<RationalFunction> f_symbolic_impl(long l, long m, int alpha);

std::optional<RationalFunction> f_cached(long l, long m, int alpha) {
    const std::tuple<long, long, int> key{l, m, alpha};
    {
        std::lock_guard<std::mutex> lock(g_f_mutex);
        auto it = g_f_memo.find(key);
        if (it != g_f_memo.end()) return it->second;
    }
    std::optional<RationalFunction> result = f_symbolic_impl(l, m, alpha);
    std::lock_guard<std::mutex> lock(g_f_mutex);
    return g_f_memo.emplace(key, std::move(result)).first->second;
}

RationalFunction f_present(long l, long m, int alpha) {
    auto f = f_cached(l, m, alpha);
    if (!f) throw std::logic_error("f_symbolic recursion reached a parity-zero key");
    return *f;
}

RationalFunction cr_present(long l, long m, int alpha) {
    auto h = cr_symbolic(l, m, alpha);
    if (!h) throw std::logic_error("cr_symbolic vanished inside the recursion");
    return *h;
}

std::optional<RationalFunction> f_symbolic_impl(long l, long m, int alpha) {
    if (same_parity(l + m, alpha)) return std::nullopt;
    if (l < 0) return f_cached(-l, m, alpha);

    const RationalFunction half(Rat(1, 2));
    if (m > 0) {
        // P(l,m;4p+a) = P(l,m-1;4p+a-1) + Cr(l,m;4p+a)/2. For alpha = 0 the
        // smaller diamond is 4(p-1)+3, so shift p and renormalize the
        // prefactor by the central-binomial ratio.
        if (alpha >= 1)
            return RationalFunction(2) * f_present(l, m - 1, alpha - 1) +
                   cr_present(l, m, alpha);
        RationalFunction ratio = central_binomial_shift(-1);
        return RationalFunction(2) * ratio * ratio * f_present(l, m - 1, 3).shifted(-1) +
               cr_present(l, m, 0);
    }
    if (m < 0) {
        // P(l,m;4p+a) = P(l,m+1;4p+a+1) - Cr(l,m+1;4p+a+1)/2, wrapping
        // alpha = 3 into the 4(p+1) diamond.
        if (alpha <= 2)
            return half * (f_present(l, m + 1, alpha + 1) - cr_present(l, m + 1, alpha + 1));
        RationalFunction ratio = central_binomial_shift(1);
        return half * ratio * ratio *
               (f_present(l, m + 1, 0).shifted(1) - cr_present(l, m + 1, 0).shifted(1));
    }
    // m == 0
    if (l == 0) {
        if (alpha == 1) return RationalFunction(2);
        return RationalFunction(0);  // alpha == 3
    }
    if (l == 1) return -f_present(0, -1, alpha);
    return -f_present(l - 1, -1, alpha) - f_present(1, l - 1, alpha) - f_present(0, -l, alpha);
}

}  // namespace

SymbolicPlacement f_symbolic(long l, long m, int alpha) {
    if (alpha < 0 || alpha > 3) throw std::invalid_argument("alpha must be in 0..3");
    return SymbolicPlacement{Position{l, m}, alpha, f_cached(l, m, alpha)};
}

ExactProbability prob_from_symbolic(long l, long m, long n) {
    SizeSplit split(n);
    if (split.p < 1)
        throw std::invalid_argument("prob_from_symbolic needs n >= 4 (use prob_numeric)");
    SymbolicPlacement sp = f_symbolic(l, m, split.alpha);
    if (!sp.f) return ExactProbability(Rat(0));
    Int c = binomial(2 * split.p - 1, split.p);
    Rat value = Rat(1, 4) + pow2_rat(-n) * Rat(c * c) * sp.f->eval(Rat(split.p));
    value.canonicalize();
    return ExactProbability(value);
}

Position canonicalize_to_black_left(Cell a, Cell b, long order) {
    for (int reflected = 0; reflected < 2; ++reflected) {
        Cell x = a, y = b;
        if (reflected) {
            x = reflect_cell(x);
            y = reflect_cell(y);
        }
        for (int rot = 0; rot < 4; ++rot) {
            if (x.j == y.j && std::labs(x.i - y.i) == 1) {
                Cell left = x.i < y.i ? x : y;
                if (is_black(left, order)) return Position{left.i + 1, left.j};
            }
            x = rot90_cell(x);
            y = rot90_cell(y);
        }
    }
    throw std::logic_error("no symmetry maps the pair to a black-left horizontal domino");
}

ExactProbability prob_general(Cell a, Cell b, long n) {
    if (n < 1) throw std::invalid_argument("prob_general: n must be positive");
    if (std::labs(a.i - b.i) + std::labs(a.j - b.j) != 1)
        throw std::invalid_argument("cells are not adjacent");
    if (!in_diamond(a, n) || !in_diamond(b, n))
        throw std::invalid_argument("cell outside the order-" + std::to_string(n) + " diamond");
    Position pos = canonicalize_to_black_left(a, b, n);
    return prob_numeric(pos.l, pos.m, n);
}

double asymptotic_prob(double x, double y) {
    const double r2 = x * x + y * y;
    if (r2 >= 0.5) return y < 0.5 ? 0.0 : 1.0;
    return 0.5 + std::atan((2 * y - 1) / std::sqrt(1 - 2 * x * x - 2 * y * y)) / M_PI;
}

}  // namespace aztec
