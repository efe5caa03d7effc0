#include "combpfaff/polynomial.hpp"

#include "combpfaff/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>

namespace combpfaff {

Monomial::Monomial(Variable v, int exponent) {
    if (exponent < 0) throw Error("monomial exponents must be positive");
    if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_sorted_factors(std::vector<Factor>&& factors) {
    Monomial m;
    m.factors_ = std::move(factors);
    return m;
}

int Monomial::total_degree() const {
    int degree = 0;
    for (const auto& [v, e] : factors_) degree += e;
    return degree;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial result;
    result.factors_.reserve(factors_.size() + other.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < other.factors_.size()) {
        if (factors_[i].first == other.factors_[j].first) {
            result.factors_.emplace_back(factors_[i].first,
                                         factors_[i].second + other.factors_[j].second);
            ++i, ++j;
        } else if (factors_[i].first.id() < other.factors_[j].first.id()) {
            result.factors_.push_back(factors_[i++]);
        } else {
            result.factors_.push_back(other.factors_[j++]);
        }
    }
    for (; i < factors_.size(); ++i) result.factors_.push_back(factors_[i]);
    for (; j < other.factors_.size(); ++j) result.factors_.push_back(other.factors_[j]);
    return result;
}

int Monomial::compare(const Monomial& other) const {
    std::size_t n = std::min(factors_.size(), other.factors_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Factor& a = factors_[i];
        const Factor& b = other.factors_[i];
        if (a.first.id() != b.first.id()) return a.first.id() < b.first.id() ? -1 : 1;
        if (a.second != b.second) return a.second < b.second ? -1 : 1;
    }
    if (factors_.size() == other.factors_.size()) return 0;
    return factors_.size() < other.factors_.size() ? -1 : 1;
}

namespace {

std::vector<Monomial::Factor> factors_by_name(const Monomial& m) {
    std::vector<Monomial::Factor> out = m.factors();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first < b.first;  // Variable order is by name
    });
    return out;
}

}  // namespace

int Monomial::compare_names(const Monomial& other) const {
    std::vector<Factor> mine = factors_by_name(*this);
    std::vector<Factor> theirs = factors_by_name(other);
    std::size_t n = std::min(mine.size(), theirs.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (mine[i].first != theirs[i].first) {
            return mine[i].first < theirs[i].first ? -1 : 1;
        }
        if (mine[i].second != theirs[i].second) {
            return mine[i].second < theirs[i].second ? -1 : 1;
        }
    }
    if (mine.size() == theirs.size()) return 0;
    return mine.size() < theirs.size() ? -1 : 1;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : factors_by_name(*this)) {
        if (!out.empty()) out += '*';
        out += v.name();
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

Polynomial::Polynomial(const Rational& value) {
    if (value != 0) terms_.emplace_back(Monomial(), value);
}

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) {
    if (coefficient != 0) terms_.emplace_back(m, coefficient);
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term>&& terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

int Polynomial::total_degree() const {
    int degree = 0;
    for (const auto& [m, c] : terms_) degree = std::max(degree, m.total_degree());
    return degree;
}

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
    return Rational(0);
}

Rational Polynomial::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.front().second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) {
                                   return t.first < key;
                               });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rational(0);
}

Polynomial Polynomial::truncated(int max_total_degree) const {
    std::vector<Term> kept;
    kept.reserve(terms_.size());
    for (const auto& term : terms_) {
        if (term.first.total_degree() <= max_total_degree) kept.push_back(term);
    }
    return from_sorted_terms(std::move(kept));
}

Polynomial Polynomial::operator-() const {
    Polynomial result(*this);
    for (auto& [m, c] : result.terms_) c = -c;
    return result;
}

namespace {

std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b,
                                          bool subtract) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int cmp = a[i].first.compare(b[j].first);
        if (cmp < 0) {
            out.push_back(a[i++]);
        } else if (cmp > 0) {
            out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
            ++j;
        } else {
            Rational c = a[i].second;
            if (subtract) {
                c -= b[j].second;
            } else {
                c += b[j].second;
            }
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    terms_ = merge_terms(terms_, other.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    terms_ = merge_terms(terms_, other.terms_, true);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a);
    r += b;
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a);
    r -= b;
    return r;
}

namespace {

using PackedKey = unsigned __int128;

// Packs a monomial as one exponent nibble per variable, so multiplying
// monomials is integer addition. Applicable when the two operands together
// use at most 32 variables and no product exponent can reach 16.
struct NibblePacking {
    std::vector<std::uint32_t> var_ids;  // sorted; nibble position = index

    static std::optional<NibblePacking> plan(const Polynomial& a, const Polynomial& b) {
        std::map<std::uint32_t, std::pair<int, int>> max_exponents;
        for (const auto& [m, c] : a.terms()) {
            for (const auto& [v, e] : m.factors()) {
                auto& entry = max_exponents[v.id()];
                entry.first = std::max(entry.first, e);
            }
        }
        for (const auto& [m, c] : b.terms()) {
            for (const auto& [v, e] : m.factors()) {
                auto& entry = max_exponents[v.id()];
                entry.second = std::max(entry.second, e);
            }
        }
        if (max_exponents.size() > 32) return std::nullopt;
        NibblePacking packing;
        for (const auto& [id, exps] : max_exponents) {
            if (exps.first + exps.second > 15) return std::nullopt;
            packing.var_ids.push_back(id);
        }
        return packing;
    }

    PackedKey encode(const Monomial& m) const {
        PackedKey key = 0;
        for (const auto& [v, e] : m.factors()) {
            std::size_t pos = std::lower_bound(var_ids.begin(), var_ids.end(), v.id()) -
                              var_ids.begin();
            key |= static_cast<PackedKey>(e) << (4 * pos);
        }
        return key;
    }

    Monomial decode(PackedKey key) const {
        std::vector<Monomial::Factor> factors;
        for (std::size_t pos = 0; key != 0; ++pos, key >>= 4) {
            int e = static_cast<int>(key & 0xF);
            if (e != 0) factors.emplace_back(Variable::by_id(var_ids[pos]), e);
        }
        return Monomial::from_sorted_factors(std::move(factors));
    }
};

// k-way merge over the streams {key_a[i] + key_b[j] : j}, each of which is
// already sorted; coefficients accumulate on key collisions.
Polynomial multiply_packed(const Polynomial& a, const Polynomial& b,
                           const NibblePacking& packing) {
    const auto& small = a.terms().size() <= b.terms().size() ? a.terms() : b.terms();
    const auto& large = a.terms().size() <= b.terms().size() ? b.terms() : a.terms();

    std::vector<PackedKey> large_keys(large.size());
    std::vector<std::size_t> large_order(large.size());
    for (std::size_t j = 0; j < large.size(); ++j) {
        large_keys[j] = packing.encode(large[j].first);
        large_order[j] = j;
    }
    std::sort(large_order.begin(), large_order.end(),
              [&](std::size_t x, std::size_t y) { return large_keys[x] < large_keys[y]; });

    struct Head {
        PackedKey key;
        std::uint32_t stream;
        std::uint32_t position;  // index into large_order
    };
    auto later = [](const Head& x, const Head& y) { return x.key > y.key; };
    std::vector<Head> heap;
    std::vector<PackedKey> small_keys(small.size());
    heap.reserve(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) {
        small_keys[i] = packing.encode(small[i].first);
        heap.push_back({small_keys[i] + large_keys[large_order[0]],
                        static_cast<std::uint32_t>(i), 0});
    }
    std::make_heap(heap.begin(), heap.end(), later);

    std::vector<std::pair<PackedKey, Rational>> acc;
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), later);
        Head head = heap.back();
        heap.pop_back();
        const Rational& ca = small[head.stream].second;
        const Rational& cb = large[large_order[head.position]].second;
        if (!acc.empty() && acc.back().first == head.key) {
            acc.back().second += ca * cb;
        } else {
            acc.emplace_back(head.key, ca * cb);
        }
        if (++head.position < large_order.size()) {
            head.key = small_keys[head.stream] + large_keys[large_order[head.position]];
            heap.push_back(head);
            std::push_heap(heap.begin(), heap.end(), later);
        }
    }

    std::vector<Polynomial::Term> out;
    out.reserve(acc.size());
    for (auto& [key, c] : acc) {
        if (c != 0) out.emplace_back(packing.decode(key), std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return Polynomial::from_sorted_terms(std::move(out));
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    // Single-term factors keep term products distinct, so sort once and done.
    if (a.terms().size() == 1 || b.terms().size() == 1) {
        const auto& single = a.terms().size() == 1 ? a.terms()[0] : b.terms()[0];
        const auto& many = a.terms().size() == 1 ? b.terms() : a.terms();
        std::vector<Polynomial::Term> out;
        out.reserve(many.size());
        for (const auto& [m, c] : many) {
            out.emplace_back(single.first.times(m), single.second * c);
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return Polynomial::from_sorted_terms(std::move(out));
    }
    if (a.terms().size() * b.terms().size() >= 64) {
        if (auto packing = NibblePacking::plan(a, b)) {
            return multiply_packed(a, b, *packing);
        }
    }
    std::map<Monomial, Rational> acc;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma.times(mb);
            auto [it, inserted] = acc.emplace(std::move(m), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    std::vector<Polynomial::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (c != 0) out.emplace_back(m, std::move(c));
    }
    return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Rational& scalar) {
    Polynomial r(a);
    r *= scalar;
    return r;
}

Polynomial operator*(const Rational& scalar, const Polynomial& a) {
    return a * scalar;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<Term> ordered = terms_;
    std::sort(ordered.begin(), ordered.end(), [](const Term& a, const Term& b) {
        return a.first.compare_names(b.first) < 0;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        Rational magnitude = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            out += rational_str(magnitude);
        } else if (magnitude == 1) {
            out += m.str();
        } else {
            out += rational_str(magnitude);
            out += '*';
            out += m.str();
        }
    }
    return out;
}

int Polynomial::compare(const Polynomial& other) const {
    std::size_t n = std::min(terms_.size(), other.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int cmp = terms_[i].first.compare(other.terms_[i].first);
        if (cmp != 0) return cmp;
        if (terms_[i].second != other.terms_[i].second) {
            return terms_[i].second < other.terms_[i].second ? -1 : 1;
        }
    }
    if (terms_.size() == other.terms_.size()) return 0;
    return terms_.size() < other.terms_.size() ? -1 : 1;
}

Polynomial series_truncate(const Polynomial& p, int max_total_degree) {
    return p.truncated(max_total_degree);
}

Polynomial series_inverse(const Polynomial& p, int max_total_degree) {
    Rational c = p.constant_term();
    if (c == 0) {
        throw NonUnitConstantTerm("series inverse requires a unit constant term");
    }
    // 1/p = (1/c) * sum of r^i with r = 1 - p/c; r has no constant term.
    Polynomial r = Polynomial(Rational(1)) - p * Rational(1 / c);
    Polynomial acc(Rational(1));
    Polynomial power(Rational(1));
    for (int i = 1; i <= max_total_degree; ++i) {
        power = (power * r).truncated(max_total_degree);
        if (power.is_zero()) break;
        acc += power;
    }
    return acc * Rational(1 / c);
}

}  // namespace combpfaff
