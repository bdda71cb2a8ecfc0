#include "dsw/integer.hpp"

#include <cctype>
#include <limits>

namespace dsw {

std::optional<Integer> parse_integer(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) return std::nullopt;
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

std::optional<std::int64_t> to_int64(const Integer& value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min()) {
        return std::nullopt;
    }
    return value.convert_to<std::int64_t>();
}

Integer abs(const Integer& value) { return value < 0 ? Integer(-value) : value; }

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer factorial(int n) {
    Integer result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

Integer power(const Integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

}  // namespace dsw
