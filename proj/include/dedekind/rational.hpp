#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational arithmetic and integer helpers.
 *
 * The numeric substrate for the whole library. A Rational is always held in
 * canonical form:
 *   - denominator >= 1 (the sign lives in the numerator),
 *   - gcd(|num|, den) = 1,
 *   - zero is uniquely 0/1.
 * Equality is therefore structural equality of (num, den), which makes
 * rationals safe as exact map keys.
 *
 * Integers are boost::multiprecision::cpp_int; fixed-width arithmetic is
 * deliberately absent because products such as 12*a1*a2*b overflow 64 bits
 * already for moderate moduli.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <ostream>
#include <utility>

namespace dedekind {

using Int = boost::multiprecision::cpp_int;

/// Floor division: greatest q with q*b <= a. Requires b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
    Int q = a / b;                  // cpp_int division truncates toward zero
    if (a % b != 0 && a < 0) --q;
    return q;
}

/// Least non-negative residue of a mod b, in [0, b). Requires b > 0.
inline Int mod_floor(const Int& a, const Int& b) {
    if (b <= 0) throw std::domain_error("mod_floor: modulus must be positive");
    Int r = a % b;
    if (r < 0) r += b;
    return r;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
    Rational(T n) : num_(n), den_(1) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    /// Greatest integer <= *this (floor toward -infinity, also for negatives).
    Int floor() const { return floor_div(num_, den_); }

    Rational operator-() const { return Rational(-num_, den_, canonical_tag{}); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::strong_ordering operator<=>(const Rational& o) const {
        // a/b <=> c/d iff a*d <=> c*b, denominators being positive
        Int lhs = num_ * o.den_;
        Int rhs = o.num_ * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Canonical text form: "p/q" in lowest terms with q >= 1, or "p" when q = 1.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "p" or "p/q" (optional leading '-' on either part).
    /// Throws std::invalid_argument on malformed text, std::domain_error on q = 0.
    static Rational from_string(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)),
                        parse_int(text.substr(slash + 1)));
    }

private:
    struct canonical_tag {};
    Rational(Int n, Int d, canonical_tag) : num_(std::move(n)), den_(std::move(d)) {
        assert(invariant_holds());
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
        } else {
            Int g = boost::multiprecision::gcd(num_, den_);
            num_ /= g;
            den_ /= g;
        }
        assert(invariant_holds());
    }

    bool invariant_holds() const {
        return den_ >= 1 && (num_ == 0 ? den_ == 1
                                       : boost::multiprecision::gcd(num_, den_) == 1);
    }

    static Int parse_int(std::string_view s) {
        bool neg = !s.empty() && s.front() == '-';
        std::string_view digits = neg ? s.substr(1) : s;
        if (digits.empty())
            throw std::invalid_argument("Rational: malformed integer literal");
        for (char c : digits)
            if (c < '0' || c > '9')
                throw std::invalid_argument("Rational: malformed integer literal");
        Int v{std::string(digits)};
        return neg ? Int(-v) : v;
    }

    Int num_;  // sign carrier
    Int den_;  // always >= 1
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline Int floor(const Rational& r) { return r.floor(); }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

/// Modular inverse: the unique u in [1, m-1] with a*u = 1 (mod m).
/// Requires m >= 2 and gcd(a, m) = 1; throws std::domain_error otherwise.
inline Int mod_inverse(const Int& a, const Int& m) {
    if (m < 2) throw std::domain_error("mod_inverse: modulus must be >= 2");
    // extended Euclid on (a mod m, m), tracking only the coefficient of a
    Int old_r = mod_floor(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return mod_floor(old_s, m);
}

/// Number of distinct primes dividing b (0 for b = 1). Trial division;
/// intended for desk-scale moduli. Requires b >= 1.
inline int distinct_prime_factor_count(Int b) {
    if (b < 1) throw std::domain_error("distinct_prime_factor_count: b must be >= 1");
    int count = 0;
    if (b % 2 == 0) {
        ++count;
        while (b % 2 == 0) b /= 2;
    }
    for (Int p = 3; p * p <= b; p += 2) {
        if (b % p == 0) {
            ++count;
            while (b % p == 0) b /= p;
        }
    }
    if (b > 1) ++count;
    return count;
}

}  // namespace dedekind
