#include "aztec/kravchuk.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace aztec {

Int binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        Int r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    // (-1)^k * C(k - n - 1, k)
    Int r = binomial(k - n - 1, k);
    return (k % 2 == 0) ? r : Int(-r);
}

Int krav_eval(long a, long b, long n) {
    if (n < 0) throw std::invalid_argument("krav_eval: n must be nonnegative");
    if (a < 0 || a > n) return 0;
    Int sum = 0;
    // For b > n the factor (1+z)^(n-b) is a power series and every j up to
    // a contributes; otherwise its degree bounds j from below.
    const long lo = n - b >= 0 ? std::max(0L, a - (n - b)) : 0;
    for (long j = lo; j <= a; ++j) {
        Int t = binomial(b, j) * binomial(n - b, a - j);
        if (j % 2 != 0) t = -t;
        sum += t;
    }
    return sum;
}

Int krav_eval_by_expansion(long a, long b, long n) {
    if (b < 0 || b > n) throw std::invalid_argument("krav_eval_by_expansion: need 0 <= b <= n");
    if (a < 0 || a > n) return 0;
    std::vector<Int> c{1};
    auto mul_linear = [&](long c1) {  // multiply by (1 + c1*z)
        std::vector<Int> r(c.size() + 1, Int(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            r[k] += c[k];
            r[k + 1] += c1 * c[k];
        }
        c = std::move(r);
    };
    for (long k = 0; k < n - b; ++k) mul_linear(1);
    for (long k = 0; k < b; ++k) mul_linear(-1);
    return c[static_cast<std::size_t>(a)];
}

namespace {

// (u*p + c)! / (u*p + d)! as a rational function of p (c - d is a fixed
// integer, so the quotient telescopes into linear factors).
RationalFunction factorial_ratio(long u, long c, long d) {
    Polynomial num(1);
    Polynomial den(1);
    for (long t = d + 1; t <= c; ++t) num = num * Polynomial::linear(u, t);
    for (long t = c + 1; t <= d; ++t) den = den * Polynomial::linear(u, t);
    return RationalFunction::normalized(num, den);
}

}  // namespace

RationalFunction krav_symmetry_factor(long a, long b, int alpha) {
    return factorial_ratio(2, a, b) * factorial_ratio(2, alpha - 1 - a, alpha - 1 - b);
}

RationalFunction central_binomial_shift(int s) {
    return factorial_ratio(2, 2 * s - 1, -1) * factorial_ratio(1, 0, s) *
           factorial_ratio(1, -1, s - 1);
}

namespace {

RationalFunction table_entry(long a, long b, int alpha) {
    const Polynomial p = Polynomial::variable();
    if (a == 0 && b == 0) {
        switch (alpha) {
            case 0: return RationalFunction(1);
            case 1: return RationalFunction(2);
            case 2: return RationalFunction(2);
            case 3: return RationalFunction::normalized(Polynomial(2), p + Polynomial(1));
        }
    }
    if (a == 1 && b == 0) {
        switch (alpha) {
            case 0: return RationalFunction(-1);
            case 1: return RationalFunction(0);
            case 2: return RationalFunction(2);
            case 3: return RationalFunction(4);
        }
    }
    if (a == 1 && b == 1) {
        switch (alpha) {
            case 0:
                return RationalFunction::normalized(Polynomial(3) - p * Rat(2),
                                                    p * Rat(2) - Polynomial(1));
            case 1: return RationalFunction(-2);
            case 2: return RationalFunction(-2);
            case 3: return RationalFunction(0);
        }
    }
    throw std::logic_error("table_entry: not a base key");
}

std::mutex g_growth_mutex;
std::map<std::tuple<long, long, int>, RationalFunction> g_growth_memo;

}  // namespace

RationalFunction growth_g(long a, long b, int alpha) {
    if (alpha < 0 || alpha > 3) throw std::invalid_argument("growth_g: alpha must be in 0..3");
    const std::tuple<long, long, int> key{a, b, alpha};
    {
        std::lock_guard<std::mutex> lock(g_growth_mutex);
        auto it = g_growth_memo.find(key);
        if (it != g_growth_memo.end()) return it->second;
    }

    RationalFunction result;
    if ((a == 0 || a == 1) && (b == 0 || b == 1)) {
        if (a == 0 && b == 1)
            result = krav_symmetry_factor(1, 0, alpha) * growth_g(1, 0, alpha);
        else
            result = table_entry(a, b, alpha);
    } else if (a >= 2) {
        // (a+2p) K(a+2p) = (alpha-2b-1) K(a-1+2p) - (2p+alpha-a+1) K(a-2+2p)
        RationalFunction lhs = RationalFunction(alpha - 2 * b - 1) * growth_g(a - 1, b, alpha) -
                               RationalFunction(Polynomial::linear(2, alpha - a + 1)) *
                                   growth_g(a - 2, b, alpha);
        result = lhs / RationalFunction(Polynomial::linear(2, a));
    } else if (a < 0) {
        // Backward form of the same recurrence, solved for the lower index.
        RationalFunction lhs = RationalFunction(alpha - 2 * b - 1) * growth_g(a + 1, b, alpha) -
                               RationalFunction(Polynomial::linear(2, a + 2)) *
                                   growth_g(a + 2, b, alpha);
        result = lhs / RationalFunction(Polynomial::linear(2, alpha - a - 1));
    } else {
        // a in {0,1}, b outside {0,1}: swap the indices via the symmetry
        // factor, then the branches above shrink |b|.
        result = krav_symmetry_factor(b, a, alpha) * growth_g(b, a, alpha);
    }

    std::lock_guard<std::mutex> lock(g_growth_mutex);
    return g_growth_memo.emplace(key, std::move(result)).first->second;
}

}  // namespace aztec
