#include "symgrowth/rational.hpp"

#include <cctype>

#include "symgrowth/error.hpp"

namespace symgrowth {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) throw InvalidArgument("malformed fraction '" + std::string(whole) + "'");
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw InvalidArgument("malformed fraction '" + std::string(whole) + "'");
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        const auto c = static_cast<unsigned char>(text[pos]);
        if (!std::isdigit(c)) {
            throw InvalidArgument("malformed fraction '" + std::string(whole) +
                                  "' (expected p/q with integer p, q)");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const Integer num = parse_integer(text.substr(0, slash), text);
    const Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::uint64_t ceil_log_steps(const Rational& value, const Rational& ratio) {
    if (ratio < 0 || ratio >= 1) throw InvalidArgument("ceil_log_steps: ratio must lie in [0,1)");
    std::uint64_t steps = 0;
    Rational current = value;
    while (current > 1) {
        current *= ratio;
        ++steps;
    }
    return steps;
}

}  // namespace symgrowth
