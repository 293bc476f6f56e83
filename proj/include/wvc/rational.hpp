#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace wvc {

// Every weight, budget and LP value in the toolkit is an exact rational.
// cpp_rational keeps lowest terms and a positive denominator by construction,
// so equality and threshold comparisons (e.g. against 1/2) are exact.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Weight = Rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// "p" when integral, "p/q" otherwise. This is the one spelling used by the
// instance format, the JSON reports and the bench CSV.
inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

// Strict parser for the same spelling: [-]digits[/digits], denominator > 0.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();

    std::size_t pos = 0;
    if (text[0] == '-') pos = 1;
    std::size_t digits_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_begin) fail();
    BigInt num(std::string(text.substr(0, pos)));

    if (pos == text.size()) return Rational(num);
    if (text[pos] != '/') fail();
    ++pos;
    std::size_t den_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == den_begin || pos != text.size()) fail();
    BigInt den(std::string(text.substr(den_begin)));
    if (den == 0) fail();
    return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

}  // namespace wvc
