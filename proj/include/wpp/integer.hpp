#ifndef WPP_INTEGER_HPP
#define WPP_INTEGER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wpp/error.hpp"

namespace wpp {

// Exact arithmetic everywhere; structure constants outgrow 64 bits quickly.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return boost::multiprecision::lcm(a, b);
}

inline bool divides(const Integer& d, const Integer& n) {
    if (d == 0) {
        return n == 0;
    }
    return n % d == 0;
}

inline Integer ipow(const Integer& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

// Trial division; inputs are desk-scale.
inline bool is_prime(const Integer& n) {
    if (n < 2) {
        return false;
    }
    if (n < 4) {
        return true;
    }
    if (n % 2 == 0) {
        return false;
    }
    for (Integer d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Ascending primes. factorize(1) is empty.
inline std::vector<PrimePower> factorize(Integer n) {
    if (n < 1) {
        throw PreconditionError("factorize: argument must be positive, got " + n.str());
    }
    std::vector<PrimePower> out;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            out.push_back({p, e});
        }
    };
    strip(2);
    for (Integer d = 3; d * d <= n; d += 2) {
        strip(d);
    }
    if (n > 1) {
        out.push_back({n, 1});
    }
    return out;
}

// p-adic valuation of n > 0.
inline unsigned valuation(Integer n, const Integer& p) {
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

// Returns k with n == p^k, or -1 when n is not a power of p.
inline long power_exponent(const Integer& n, const Integer& p) {
    if (n < 1) {
        return -1;
    }
    Integer rest = n;
    long e = 0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    return rest == 1 ? e : -1;
}

// "n" when integral, "num/den" in lowest terms otherwise.
inline std::string to_string(const Rational& r) {
    if (is_integral(r)) {
        return numerator_of(r).str();
    }
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline std::string to_string(const Integer& n) { return n.str(); }

inline Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw ParseError("empty integer literal");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) {
        throw ParseError("malformed integer literal '" + s + "'");
    }
    for (std::size_t k = start; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') {
            throw ParseError("malformed integer literal '" + s + "'");
        }
    }
    return Integer(s);
}

inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

}  // namespace wpp

#endif  // WPP_INTEGER_HPP
