#include "qssep/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace qssep {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
        value = value * 10 + (text[pos] - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    std::string out = boost::multiprecision::numerator(value).str();
    const BigInt den = boost::multiprecision::denominator(value);
    if (den != 1) {
        out += "/" + den.str();
    }
    return out;
}

}  // namespace qssep
