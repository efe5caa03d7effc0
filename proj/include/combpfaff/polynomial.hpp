#pragma once

#include "combpfaff/rational.hpp"
#include "combpfaff/variable.hpp"

#include <string>
#include <utility>
#include <vector>

namespace combpfaff {

// A product of variables with positive exponents. The empty monomial is 1.
// Factors are kept sorted by the cheap intern id; rendering re-sorts by name,
// so canonical strings follow the lexicographic variable order while the hot
// comparison paths stay on integers.
class Monomial {
public:
    using Factor = std::pair<Variable, int>;

    Monomial() = default;
    explicit Monomial(Variable v, int exponent = 1);
    // Takes a factor list already sorted by variable id with positive exponents.
    static Monomial from_sorted_factors(std::vector<Factor>&& factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int total_degree() const;
    Monomial times(const Monomial& other) const;

    // Storage order: factor-wise by variable id, lower exponent first, strict
    // prefixes first. Deterministic within a process.
    int compare(const Monomial& other) const;

    // Rendering order: same shape, but variables ordered by name; this is the
    // order canonical strings are sorted in.
    int compare_names(const Monomial& other) const;

    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.compare(b) < 0;
    }

private:
    std::vector<Factor> factors_;
};

// Sparse multivariate polynomial over Rational, stored canonically: terms
// sorted by monomial, no zero coefficients. Equality is structural.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;  // zero
    Polynomial(int value) : Polynomial(Rational(value)) {}
    Polynomial(const Rational& value);
    Polynomial(Variable v) : Polynomial(Monomial(v), Rational(1)) {}
    Polynomial(const Monomial& m, const Rational& coefficient = Rational(1));

    static Polynomial variable(std::string_view name) {
        return Polynomial(Variable::intern(name));
    }
    // Takes ownership of a sorted, duplicate-free, zero-free term vector.
    static Polynomial from_sorted_terms(std::vector<Term>&& terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    int total_degree() const;  // 0 for the zero polynomial
    Rational constant_term() const;
    Rational leading_coefficient() const;  // coefficient of the first term; 0 if zero
    Rational coefficient(const Monomial& m) const;

    // Drops every term of total degree > max_total_degree.
    Polynomial truncated(int max_total_degree) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    std::string str() const;

    // Deterministic total order (term-wise), used to keep factor lists sorted.
    int compare(const Polynomial& other) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Rational& scalar);
Polynomial operator*(const Rational& scalar, const Polynomial& a);
Polynomial pow(const Polynomial& base, unsigned exponent);

// Truncated power series utilities, total degree across all variables.
Polynomial series_truncate(const Polynomial& p, int max_total_degree);

// q with p*q == 1 modulo terms of total degree > max_total_degree.
// Throws NonUnitConstantTerm if the constant term of p is zero.
Polynomial series_inverse(const Polynomial& p, int max_total_degree);

}  // namespace combpfaff
