#include "combpfaff/rational.hpp"

#include "combpfaff/errors.hpp"

#include <cctype>

namespace combpfaff {

std::string rational_str(const Rational& value) {
    return value.str();
}

Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    auto digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out.push_back(text[pos++]);
        }
        if (pos == start) fail();
    };

    std::string num, den;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') num.push_back('-');
        ++pos;
    }
    digits(num);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        digits(den);
    }
    if (pos != text.size()) fail();

    Integer n(num);
    if (den.empty()) return Rational(n);
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

}  // namespace combpfaff
