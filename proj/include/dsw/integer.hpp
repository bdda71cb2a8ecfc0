#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dsw {

// Exact coefficients everywhere; reductions mod p happen only on request.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

// Parses an optionally signed decimal integer. Returns nullopt on malformed input.
std::optional<Integer> parse_integer(std::string_view text);

// Narrowing conversion; nullopt when the value does not fit.
std::optional<std::int64_t> to_int64(const Integer& value);

Integer abs(const Integer& value);
Integer gcd(const Integer& a, const Integer& b);
Integer factorial(int n);
Integer power(const Integer& base, unsigned exponent);

}  // namespace dsw
