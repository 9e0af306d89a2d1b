#pragma once

#include <cstddef>
#include <vector>

#include "aztec/numeric.hpp"

namespace aztec {

/// Dense univariate polynomial in the variable p with exact rational
/// coefficients. coeffs()[k] is the coefficient of p^k; the highest stored
/// coefficient is nonzero, and the zero polynomial stores no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Rat& constant_term);
    explicit Polynomial(long constant_term);

    static Polynomial variable();  // the polynomial p
    static Polynomial from_coeffs(std::vector<Rat> coeffs);
    /// u*p + c, handy for the linear factors that dominate this codebase.
    static Polynomial linear(long u, long c);

    bool is_zero() const { return coeff_.empty(); }
    /// Degree, with -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeff_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeff_; }
    /// Coefficient of p^k (zero beyond the degree).
    const Rat& coeff(std::size_t k) const;
    const Rat& leading() const;  // pre: !is_zero()

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& s) const;
    bool operator==(const Polynomial& o) const = default;

    Rat eval(const Rat& p) const;
    /// The polynomial q with q(p) = this(p + k).
    Polynomial shifted(long k) const;

private:
    void trim();
    std::vector<Rat> coeff_;
};

}  // namespace aztec
