#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace artin {

using Rational = boost::rational<std::int64_t>;

/// Always "a/b" with b > 0 and gcd(a, b) = 1, including integers ("3/1").
inline std::string to_string(const Rational& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

}  // namespace artin
