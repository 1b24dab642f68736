#pragma once

// Exact rational scalars and the error types shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace intersect {

/// Arbitrary precision rational, always canonical (lowest terms, positive
/// denominator) as long as it is built through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string numerator_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string denominator_string(const Rational& q) { return q.get_den().get_str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Parses "p" or "p/q" with an optional leading sign. Returns false on junk or a
/// zero denominator.
inline bool parse_rational(std::string_view text, Rational& out) {
    if (text.empty()) return false;
    std::size_t slash = text.find('/');
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string num(text.substr(0, slash));
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(text.substr(0, slash), true)) return false;
    Integer n(num, 10);
    Integer d = 1;
    if (slash != std::string_view::npos) {
        std::string_view ds = text.substr(slash + 1);
        if (!valid_int(ds, false)) return false;
        d = Integer(std::string(ds), 10);
        if (d == 0) return false;
    }
    out = make_rational(n, d);
    return true;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Mathematically invalid request: bad space, bundle not valid on a space,
/// degree mismatch. The CLI maps it to exit code 3.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error with a 0-based character offset. The CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace intersect
