#ifndef IHX_RATIONAL_HPP
#define IHX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ihx {

// Exact coefficients. cpp_rational keeps values reduced with positive
// denominator, which is the invariant the whole workbench relies on.
// No floating point appears anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return numerator(q); }
inline Int rat_den(const Rational& q) { return denominator(q); }

/// floor(q) as an integer, exact for negative values too.
inline Int rat_floor(const Rational& q)
{
    Int n = numerator(q), d = denominator(q);
    Int quot = n / d;
    if (n % d != 0 && n < 0)
        --quot;
    return quot;
}

inline bool rat_is_integer(const Rational& q) { return denominator(q) == 1; }

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
/// std::invalid_argument on malformed text; floats are rejected.
inline Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    if (text.find_first_of(".eE") != std::string::npos &&
        text.find_first_not_of("0123456789+-/") != std::string::npos)
        throw std::invalid_argument("rational literal must be integral or p/q: '" + text + "'");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
}

inline std::string rational_to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace ihx

#endif
