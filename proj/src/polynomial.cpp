#include "aztec/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace aztec {

namespace {
const Rat kZeroRat = 0;
}

Polynomial::Polynomial(const Rat& constant_term) {
    if (constant_term != 0) coeff_.push_back(constant_term);
}

Polynomial::Polynomial(long constant_term) : Polynomial(Rat(constant_term)) {}

Polynomial Polynomial::variable() { return from_coeffs({Rat(0), Rat(1)}); }

Polynomial Polynomial::from_coeffs(std::vector<Rat> coeffs) {
    Polynomial r;
    r.coeff_ = std::move(coeffs);
    for (auto& c : r.coeff_) c.canonicalize();
    r.trim();
    return r;
}

Polynomial Polynomial::linear(long u, long c) {
    if (u == 0) return Polynomial(c);
    return from_coeffs({Rat(c), Rat(u)});
}

const Rat& Polynomial::coeff(std::size_t k) const {
    return k < coeff_.size() ? coeff_[k] : kZeroRat;
}

const Rat& Polynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeff_.back();
}

void Polynomial::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.coeff_.resize(std::max(coeff_.size(), o.coeff_.size()));
    for (std::size_t k = 0; k < r.coeff_.size(); ++k) r.coeff_[k] = coeff(k) + o.coeff(k);
    r.trim();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    Polynomial r;
    r.coeff_.assign(coeff_.size() + o.coeff_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        for (std::size_t j = 0; j < o.coeff_.size(); ++j)
            r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const Rat& s) const {
    if (s == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& c : r.coeff_) c *= s;
    return r;
}

Rat Polynomial::eval(const Rat& p) const {
    Rat acc = 0;
    for (std::size_t k = coeff_.size(); k-- > 0;) acc = acc * p + coeff_[k];
    return acc;
}

Polynomial Polynomial::shifted(long k) const {
    // Horner in the polynomial ring: substitute p -> p + k.
    const Polynomial base = from_coeffs({Rat(k), Rat(1)});
    Polynomial acc;
    for (std::size_t i = coeff_.size(); i-- > 0;) acc = acc * base + Polynomial(coeff_[i]);
    return acc;
}

}  // namespace aztec
