#include "combpfaff/rational_function.hpp"

#include "combpfaff/errors.hpp"

#include <algorithm>

namespace combpfaff {

namespace {

Rational rational_pow(const Rational& base, int exponent) {
    Rational out(1);
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

Polynomial times_factors(Polynomial p, const std::vector<RationalFunction::DenFactor>& fs) {
    for (const auto& [base, exponent] : fs) {
        for (int i = 0; i < exponent; ++i) p *= base;
    }
    return p;
}

// a / b as factor multisets (assumes b divides a factor-wise)
std::vector<RationalFunction::DenFactor> factor_difference(
    const std::vector<RationalFunction::DenFactor>& a,
    const std::vector<RationalFunction::DenFactor>& b) {
    std::vector<RationalFunction::DenFactor> out;
    std::size_t j = 0;
    for (const auto& [base, exponent] : a) {
        int remaining = exponent;
        if (j < b.size() && b[j].first == base) {
            remaining -= b[j].second;
            ++j;
        }
        if (remaining > 0) out.emplace_back(base, remaining);
    }
    return out;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) return;
    push_factor(std::move(den), 1);
}

void RationalFunction::push_factor(Polynomial base, int exponent) {
    if (exponent <= 0) return;
    if (base.is_constant()) {
        // the value is exact, so constant factors fold into the numerator
        num_ *= rational_pow(1 / base.constant_term(), exponent);
        return;
    }
    Rational lead = base.leading_coefficient();
    if (lead != 1) {
        base *= 1 / lead;
        num_ *= rational_pow(1 / lead, exponent);
    }
    auto it = std::lower_bound(den_.begin(), den_.end(), base,
                               [](const DenFactor& f, const Polynomial& key) {
                                   return f.first.compare(key) < 0;
                               });
    if (it != den_.end() && it->first == base) {
        it->second += exponent;
    } else {
        den_.insert(it, {std::move(base), exponent});
    }
}

void RationalFunction::clear_if_zero() {
    if (num_.is_zero()) den_.clear();
}

Polynomial RationalFunction::den() const {
    return times_factors(Polynomial(1), den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out(*this);
    out.num_ = -out.num_;
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) {
        *this = other;
        return *this;
    }
    if (den_ == other.den_) {
        num_ += other.num_;
        clear_if_zero();
        return *this;
    }
    // common denominator: factor-wise lcm
    std::vector<DenFactor> lcm;
    {
        std::size_t i = 0, j = 0;
        while (i < den_.size() || j < other.den_.size()) {
            if (j == other.den_.size()) {
                lcm.push_back(den_[i++]);
            } else if (i == den_.size()) {
                lcm.push_back(other.den_[j++]);
            } else {
                int cmp = den_[i].first.compare(other.den_[j].first);
                if (cmp < 0) {
                    lcm.push_back(den_[i++]);
                } else if (cmp > 0) {
                    lcm.push_back(other.den_[j++]);
                } else {
                    lcm.emplace_back(den_[i].first,
                                     std::max(den_[i].second, other.den_[j].second));
                    ++i, ++j;
                }
            }
        }
    }
    Polynomial left = times_factors(num_, factor_difference(lcm, den_));
    Polynomial right = times_factors(other.num_, factor_difference(lcm, other.den_));
    num_ = left + right;
    den_ = std::move(lcm);
    clear_if_zero();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
    *this += -other;
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
    if (is_zero() || other.is_zero()) {
        *this = RationalFunction();
        return *this;
    }
    if (&other == this) {
        RationalFunction copy(other);
        return *this *= copy;
    }
    num_ *= other.num_;
    for (const auto& [base, exponent] : other.den_) {
        auto it = std::lower_bound(den_.begin(), den_.end(), base,
                                   [](const DenFactor& f, const Polynomial& key) {
                                       return f.first.compare(key) < 0;
                                   });
        if (it != den_.end() && it->first == base) {
            it->second += exponent;
        } else {
            den_.insert(it, {base, exponent});
        }
    }
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
    if (other.is_zero()) throw DivisionByZero("division by the zero rational function");
    if (is_zero()) return *this;
    if (&other == this) {
        *this = RationalFunction(1);
        return *this;
    }
    num_ = times_factors(num_, other.den_);
    push_factor(other.num_, 1);
    return *this;
}

bool RationalFunction::equals(const RationalFunction& other) const {
    if (den_ == other.den_) return num_ == other.num_;
    // cancel the shared part of the denominators, then cross-multiply
    std::vector<DenFactor> common;
    {
        std::size_t i = 0, j = 0;
        while (i < den_.size() && j < other.den_.size()) {
            int cmp = den_[i].first.compare(other.den_[j].first);
            if (cmp < 0) {
                ++i;
            } else if (cmp > 0) {
                ++j;
            } else {
                common.emplace_back(den_[i].first,
                                    std::min(den_[i].second, other.den_[j].second));
                ++i, ++j;
            }
        }
    }
    Polynomial left = times_factors(num_, factor_difference(other.den_, common));
    Polynomial right = times_factors(other.num_, factor_difference(den_, common));
    return left == right;
}

Polynomial RationalFunction::series(int max_total_degree) const {
    if (num_.is_zero()) return Polynomial();
    Polynomial out = num_.truncated(max_total_degree);
    for (const auto& [base, exponent] : den_) {
        Polynomial inv = series_inverse(base, max_total_degree);
        for (int i = 0; i < exponent; ++i) {
            out = (out * inv).truncated(max_total_degree);
        }
    }
    return out;
}

std::string RationalFunction::str() const {
    if (den_.empty()) return num_.str();
    return "(" + num_.str() + ") / (" + den().str() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    RationalFunction r(a);
    r += b;
    return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    RationalFunction r(a);
    r -= b;
    return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    RationalFunction r(a);
    r *= b;
    return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    RationalFunction r(a);
    r /= b;
    return r;
}

}  // namespace combpfaff
