#pragma once

/**
 * @file sums.hpp
 * @brief Dedekind sums s(a,b) and Dedekind-Rademacher sums r_n(a,b).
 *
 * Two independent evaluation routes are provided for the classical sum:
 *
 *   dedekind_naive  - the defining O(b) summation of sawtooth products,
 *   dedekind_fast   - an O(log b) Euclidean recursion driven by the
 *                     reciprocity law s(a,b) + s(b,a) = rhs(a,b).
 *
 * Both reciprocity right-hand sides are exposed as standalone operations so
 * they can serve as cross-check oracles against the summation route.
 *
 * r_n(a,b) has only the defining O(b) evaluator: its reciprocity law is
 * stated for n in [1, a+b] only, which rules out a naive recursion; the law
 * is used as a checker, not an evaluator.
 *
 * Everything here is a pure function of its arguments.
 */

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "rational.hpp"

namespace dedekind {

/// Argument bundle for s(a,b). Validates b >= 1 and gcd(a,b) = 1 on construction.
struct SumArgs {
    Int a;
    Int b;

    SumArgs(Int a_in, Int b_in) : a(std::move(a_in)), b(std::move(b_in)) {
        if (b < 1) throw std::domain_error("SumArgs: b must be a positive integer");
        if (boost::multiprecision::gcd(a, b) != 1)
            throw std::domain_error("SumArgs: a and b must be coprime");
    }
};

/// Argument bundle for r_n(a,b). Validates n >= 0, b >= 1, gcd(a,b) = 1.
struct RadArgs {
    Int n;
    Int a;
    Int b;

    RadArgs(Int n_in, Int a_in, Int b_in)
        : n(std::move(n_in)), a(std::move(a_in)), b(std::move(b_in)) {
        if (n < 0) throw std::domain_error("RadArgs: n must be non-negative");
        if (b < 1) throw std::domain_error("RadArgs: b must be a positive integer");
        if (boost::multiprecision::gcd(a, b) != 1)
            throw std::domain_error("RadArgs: a and b must be coprime");
    }
};

/// Sawtooth ((x)): {x} - 1/2 for non-integer x, 0 for integer x.
/// The fractional part uses floor toward -infinity, so {x} is in [0,1)
/// for negative x as well; the result is odd and 1-periodic.
inline Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational();
    Rational frac = x - Rational(x.floor());
    return frac - Rational(1, 2);
}

/// Indicator chi_a(n): 1 if a | n, 0 otherwise. Requires a >= 1.
inline int chi(const Int& a, const Int& n) {
    if (a < 1) throw std::domain_error("chi: a must be a positive integer");
    return mod_floor(n, a) == 0 ? 1 : 0;
}

namespace detail {

inline Int int128_to_int(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    Int out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? Int(-out) : out;
}

// Moduli below this bound run the word-size loop; 4*b^3 then stays inside
// __int128, which bounds the accumulated numerator.
inline const Int& word_loop_limit() {
    static const Int limit = Int(1) << 40;
    return limit;
}

inline Int folded_numerator_u64(std::uint64_t a, std::uint64_t n, std::uint64_t b) {
    __int128 acc = 0;
    const __int128 bw = b;
    for (std::uint64_t k = 1; k < b; ++k) {
        auto m = static_cast<unsigned __int128>(k) * a + n;
        auto r = static_cast<std::uint64_t>(m % b);
        if (r == 0) continue;  // integer sawtooth argument, term vanishes
        acc += (2 * static_cast<__int128>(r) - bw) * (2 * static_cast<__int128>(k) - bw);
    }
    return int128_to_int(acc);
}

inline Int folded_numerator_big(const Int& a, const Int& n, const Int& b) {
    Int acc = 0;
    for (Int k = 1; k < b; ++k) {
        Int r = (k * a + n) % b;
        if (r == 0) continue;
        acc += (2 * r - b) * (2 * k - b);
    }
    return acc;
}

// Exact value of sum_{k=0}^{b-1} (((k*a + n)/b)) ((k/b)).
//
// The k = 0 term always vanishes, and for 0 < k < b a sawtooth with
// argument m/b equals (2*(m mod b) - b) / (2b) unless b | m, so the whole
// sum collapses onto the single denominator 4b^2.
inline Rational defining_sum(const Int& a, const Int& n, const Int& b) {
    if (b == 1) return Rational();
    Int a_red = mod_floor(a, b);
    Int n_red = mod_floor(n, b);
    Int numerator =
        b < word_loop_limit()
            ? folded_numerator_u64(a_red.convert_to<std::uint64_t>(),
                                   n_red.convert_to<std::uint64_t>(),
                                   b.convert_to<std::uint64_t>())
            : folded_numerator_big(a_red, n_red, b);
    return Rational(numerator, 4 * b * b);
}

}  // namespace detail

/// s(a,b) by the defining summation over k = 0..b-1. Exact; O(b).
inline Rational dedekind_naive(const SumArgs& args) {
    return detail::defining_sum(args.a, 0, args.b);
}
inline Rational dedekind_naive(const Int& a, const Int& b) {
    return dedekind_naive(SumArgs(a, b));
}

/// r_n(a,b) by the defining summation over k = 0..b-1. Exact; O(b).
inline Rational rademacher_naive(const RadArgs& args) {
    return detail::defining_sum(args.a, args.n, args.b);
}
inline Rational rademacher_naive(const Int& n, const Int& a, const Int& b) {
    return rademacher_naive(RadArgs(n, a, b));
}

/// Right-hand side of Dedekind reciprocity:
///   s(a,b) + s(b,a) = -1/4 + (1/12)(a/b + 1/(ab) + b/a).
/// Requires a, b >= 1 coprime.
inline Rational dedekind_reciprocity_rhs(const Int& a, const Int& b) {
    if (a < 1 || b < 1)
        throw std::domain_error("dedekind_reciprocity_rhs: a and b must be positive");
    if (boost::multiprecision::gcd(a, b) != 1)
        throw std::domain_error("dedekind_reciprocity_rhs: a and b must be coprime");
    return Rational(-1, 4) +
           Rational(1, 12) * (Rational(a, b) + Rational(1, a * b) + Rational(b, a));
}

/// s(a,b) by reciprocity-driven Euclidean descent; O(log b) steps.
///
/// a is first reduced mod b into [0, b) via periodicity. A reduced numerator
/// of 0 forces b = 1 (coprimality) and the sum is empty; otherwise one
/// reciprocity step swaps the arguments, exactly as in Euclid's algorithm:
///   s(a,b) = rhs(a,b) - s(b mod a, a).
inline Rational dedekind_fast(const SumArgs& args) {
    Int a = mod_floor(args.a, args.b);
    Int b = args.b;
    Rational acc;
    bool negate = false;
    while (a != 0) {
        Rational step = dedekind_reciprocity_rhs(a, b);
        acc = negate ? acc - step : acc + step;
        Int next = b % a;
        b = a;
        a = next;
        negate = !negate;
    }
    return acc;
}
inline Rational dedekind_fast(const Int& a, const Int& b) {
    return dedekind_fast(SumArgs(a, b));
}

/// Right-hand side of the reciprocity law for Dedekind-Rademacher sums:
///
///   r_n(a,b) + r_n(b,a) = n^2/(2ab) - (n/2)(1/a + 1/b + 1/(ab))
///                       + (1/12)(b/a + a/b + 1/(ab))
///                       + (1/2)( ((a^{-1}n/b)) + ((b^{-1}n/a)) + ((n/a)) + ((n/b)) )
///                       + (1/4)( 1 + chi_a(n) + chi_b(n) ),
///
/// where a*a^{-1} = 1 (mod b) and b*b^{-1} = 1 (mod a). The law is stated for
/// n = 1, 2, ..., a+b only; other n throw std::out_of_range rather than
/// extrapolate. When a modulus equals 1 the corresponding inverse term has an
/// integer sawtooth argument and vanishes, so 0 is substituted for the inverse.
inline Rational rademacher_reciprocity_rhs(const Int& n, const Int& a, const Int& b) {
    if (a < 1 || b < 1)
        throw std::domain_error("rademacher_reciprocity_rhs: a and b must be positive");
    if (boost::multiprecision::gcd(a, b) != 1)
        throw std::domain_error("rademacher_reciprocity_rhs: a and b must be coprime");
    if (n < 1 || n > a + b)
        throw std::out_of_range("rademacher_reciprocity_rhs: n must lie in [1, a+b]");

    Int a_inv = (b == 1) ? Int(0) : mod_inverse(a, b);
    Int b_inv = (a == 1) ? Int(0) : mod_inverse(b, a);

    Rational saw_terms = sawtooth(Rational(a_inv * n, b)) +
                         sawtooth(Rational(b_inv * n, a)) +
                         sawtooth(Rational(n, a)) +
                         sawtooth(Rational(n, b));

    return Rational(n * n, 2 * a * b) -
           Rational(n, 2) * (Rational(1, a) + Rational(1, b) + Rational(1, a * b)) +
           Rational(1, 12) * (Rational(b, a) + Rational(a, b) + Rational(1, a * b)) +
           Rational(1, 2) * saw_terms +
           Rational(1 + chi(a, n) + chi(b, n), 4);
}

}  // namespace dedekind
