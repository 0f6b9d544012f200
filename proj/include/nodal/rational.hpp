#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nodal {

// Exact rational scalar. Always reduced, denominator positive.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or
// zero denominator.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in rational '" + text + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace nodal
