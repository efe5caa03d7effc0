#pragma once

#include "combpfaff/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace combpfaff {

// A formal fraction of polynomials. No multivariate GCD reduction is
// performed; the only normalization is scalar (every denominator factor is
// kept monic, scale folded into the numerator). Semantic equality is by
// cross-multiplication.
//
// The denominator is stored as a product of monic factors with exponents and
// is only expanded on demand: determinant and Pfaffian expansions repeat the
// same denominator over and over, and bumping an exponent is free while
// expanding Z^k is not.
class RationalFunction {
public:
    using DenFactor = std::pair<Polynomial, int>;  // base (monic), exponent >= 1

    RationalFunction() = default;  // zero
    RationalFunction(int value) : num_(value) {}
    RationalFunction(const Rational& value) : num_(value) {}
    RationalFunction(Polynomial p) : num_(std::move(p)) {}
    RationalFunction(Polynomial num, Polynomial den);  // throws DivisionByZero

    const Polynomial& num() const { return num_; }
    const std::vector<DenFactor>& den_factors() const { return den_; }
    Polynomial den() const;  // expanded product

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_.is_one(); }
    bool is_polynomial() const { return den_.empty(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& other);
    RationalFunction& operator-=(const RationalFunction& other);
    RationalFunction& operator*=(const RationalFunction& other);
    RationalFunction& operator/=(const RationalFunction& other);  // throws DivisionByZero

    // num_a * den_b == num_b * den_a as canonical polynomials, with shared
    // denominator factors cancelled first.
    bool equals(const RationalFunction& other) const;

    // Power series expansion through the given total degree. Requires every
    // denominator factor to have a nonzero constant term.
    Polynomial series(int max_total_degree) const;

    // "num" when the denominator is 1, otherwise "(num) / (den)".
    std::string str() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.equals(b);
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

private:
    Polynomial num_;
    std::vector<DenFactor> den_;

    void push_factor(Polynomial base, int exponent);  // normalizes and merges
    void clear_if_zero();
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

}  // namespace combpfaff
