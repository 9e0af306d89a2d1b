#pragma once

#include <stdexcept>
#include <string>

#include "aztec/polynomial.hpp"

namespace aztec {

/// Thrown by RationalFunction::parse; position is a 0-based offset into the
/// input text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Univariate rational function of p in canonical form: numerator and
/// denominator are integer-coefficient polynomials, coprime as polynomials,
/// the gcd of all their coefficients taken together is 1, and the leading
/// coefficient of the denominator is positive. Zero is 0/1. Two equal values
/// always have identical representations, so operator== decides equality of
/// functions.
class RationalFunction {
public:
    RationalFunction();  // the zero function 0/1
    explicit RationalFunction(long v);
    explicit RationalFunction(const Rat& v);
    explicit RationalFunction(const Polynomial& poly);

    /// Canonicalize num/den. Throws std::domain_error("zero denominator")
    /// when den is the zero polynomial.
    static RationalFunction normalized(const Polynomial& num, const Polynomial& den);
    static RationalFunction variable();

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    /// Throws std::domain_error on division by the zero function.
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const = default;

    /// Exact evaluation; throws std::domain_error("pole") when the
    /// denominator vanishes at p.
    Rat eval(const Rat& p) const;
    /// The function q with q(p) = this(p + k).
    RationalFunction shifted(long k) const;

    /// Canonical text form: "(<num>)/(<den>)", or "(<num>)" when the
    /// denominator is 1. Terms appear in increasing degree.
    std::string str() const;
    /// Inverse of str() and acceptor of the wider input grammar (factored
    /// parenthesized products, ^ powers, unary signs). Throws ParseError.
    static RationalFunction parse(const std::string& text);

private:
    Polynomial num_;  // integer coefficients
    Polynomial den_;  // integer coefficients, positive leading coefficient
};

std::string format_polynomial(const Polynomial& poly);

}  // namespace aztec
