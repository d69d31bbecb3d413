#pragma once

/**
 * @file theorems.hpp
 * @brief Machine checks for the divisibility theorems on equal Dedekind and
 *        Dedekind-Rademacher sums, plus level-set enumeration over the unit
 *        group mod b and the census used to explore solution counts of
 *        s(x,b) = c.
 *
 * Scans use the defining-sum evaluators as ground truth; the fast evaluator
 * is only ever a cross-check, selectable where enumeration speed matters
 * (level sets, census).
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "sums.hpp"

namespace dedekind {

enum class Verdict { consistent, violation };

inline const char* to_string(Verdict v) {
    return v == Verdict::consistent ? "consistent" : "violation";
}

/// Per-pair verdict record for the divisibility scans.
/// Invariant: verdict == violation exactly when the two sums are equal but
/// the divisibility condition fails.
struct TheoremReport {
    Int b;
    Int a1;
    Int a2;
    Rational s1;
    Rational s2;
    bool sums_equal;
    bool divisibility_holds;
    Verdict verdict;
};

inline TheoremReport make_report(Int b, Int a1, Int a2, Rational s1, Rational s2,
                                 bool divisibility_holds) {
    bool equal = s1 == s2;
    Verdict verdict = (equal && !divisibility_holds) ? Verdict::violation
                                                     : Verdict::consistent;
    return TheoremReport{std::move(b), std::move(a1), std::move(a2),
                         std::move(s1), std::move(s2), equal,
                         divisibility_holds, verdict};
}

/// Deterministic primality by trial division; moduli here are desk-scale.
inline bool is_prime_trial(const Int& p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// b | (1 - a1*a2)(a1 - a2), the necessary condition for s(a1,b) = s(a2,b).
inline bool thm1_divisibility(const Int& a1, const Int& a2, const Int& b) {
    if (b < 1) throw std::domain_error("thm1_divisibility: b must be positive");
    if (boost::multiprecision::gcd(a1, b) != 1 ||
        boost::multiprecision::gcd(a2, b) != 1)
        throw std::domain_error("thm1_divisibility: a1, a2 must be coprime to b");
    return (1 - a1 * a2) * (a1 - a2) % b == 0;
}

/// b | (6n^2 + 1 - a1*a2)(a2 - a1), the necessary condition for
/// r_n(a1,b) = r_n(a2,b).
inline bool thm3_divisibility(const Int& n, const Int& a1, const Int& a2,
                              const Int& b) {
    if (n < 0) throw std::domain_error("thm3_divisibility: n must be non-negative");
    if (b < 1) throw std::domain_error("thm3_divisibility: b must be positive");
    if (boost::multiprecision::gcd(a1, b) != 1 ||
        boost::multiprecision::gcd(a2, b) != 1)
        throw std::domain_error("thm3_divisibility: a1, a2 must be coprime to b");
    return (6 * n * n + 1 - a1 * a2) * (a2 - a1) % b == 0;
}

namespace detail {

/// Unit representatives in [1, b-1]; empty for b = 1.
inline std::vector<Int> units_mod(const Int& b) {
    std::vector<Int> out;
    for (Int a = 1; a < b; ++a)
        if (boost::multiprecision::gcd(a, b) == 1) out.push_back(a);
    return out;
}

}  // namespace detail

/// Scans all unordered unit pairs a1 < a2 mod b; emits one report per pair
/// with equal Dedekind sums (computed by the defining summation). Reports are
/// sorted by (a1, a2). The theorem predicts an empty violation list.
inline std::vector<TheoremReport> scan_theorem1(const Int& b) {
    if (b < 1) throw std::domain_error("scan_theorem1: b must be positive");
    std::map<Rational, std::vector<Int>> groups;
    for (const Int& a : detail::units_mod(b))
        groups[dedekind_naive(a, b)].push_back(a);

    std::vector<TheoremReport> reports;
    for (const auto& [value, members] : groups)
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                reports.push_back(make_report(b, members[i], members[j], value, value,
                                              thm1_divisibility(members[i], members[j], b)));

    std::sort(reports.begin(), reports.end(),
              [](const TheoremReport& x, const TheoremReport& y) {
                  return x.a1 != y.a1 ? x.a1 < y.a1 : x.a2 < y.a2;
              });
    return reports;
}

/// Same scan for r_n over the units mod b, against the Dedekind-Rademacher
/// divisibility condition.
inline std::vector<TheoremReport> scan_theorem3(const Int& n, const Int& b) {
    if (n < 0) throw std::domain_error("scan_theorem3: n must be non-negative");
    if (b < 1) throw std::domain_error("scan_theorem3: b must be positive");
    std::map<Rational, std::vector<Int>> groups;
    for (const Int& a : detail::units_mod(b))
        groups[rademacher_naive(n, a, b)].push_back(a);

    std::vector<TheoremReport> reports;
    for (const auto& [value, members] : groups)
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                reports.push_back(make_report(b, members[i], members[j], value, value,
                                              thm3_divisibility(n, members[i], members[j], b)));

    std::sort(reports.begin(), reports.end(),
              [](const TheoremReport& x, const TheoremReport& y) {
                  return x.a1 != y.a1 ? x.a1 < y.a1 : x.a2 < y.a2;
              });
    return reports;
}

/// Checks both directions of the prime-modulus characterization: for all unit
/// pairs mod p, s(a1,p) = s(a2,p) holds exactly when a1 = a2 (mod p) or
/// a1*a2 = 1 (mod p). Composite p is a domain error.
inline bool verify_corollary1(const Int& p) {
    if (!is_prime_trial(p)) throw std::domain_error("verify_corollary1: p must be prime");
    const std::vector<Int> units = detail::units_mod(p);
    std::vector<Rational> sums;
    sums.reserve(units.size());
    for (const Int& a : units) sums.push_back(dedekind_naive(a, p));

    for (std::size_t i = 0; i < units.size(); ++i) {
        for (std::size_t j = i + 1; j < units.size(); ++j) {
            bool equal = sums[i] == sums[j];
            bool congruent = mod_floor(units[i] - units[j], p) == 0 ||
                             mod_floor(units[i] * units[j], p) == 1;
            if (equal != congruent) return false;
        }
    }
    return true;
}

/// Necessary direction of the prime-modulus statement for r_n: every unit
/// pair with r_n(a1,p) = r_n(a2,p) satisfies a1 = a2 (mod p) or
/// a1*a2 = 1 + 6n^2 (mod p). The converse is not asserted; it fails, e.g.
/// at n = 6, b = 23.
inline bool verify_corollary2(const Int& p, const Int& n) {
    if (!is_prime_trial(p)) throw std::domain_error("verify_corollary2: p must be prime");
    if (n < 0) throw std::domain_error("verify_corollary2: n must be non-negative");
    const std::vector<Int> units = detail::units_mod(p);
    std::vector<Rational> sums;
    sums.reserve(units.size());
    for (const Int& a : units) sums.push_back(rademacher_naive(n, a, p));

    const Int target = mod_floor(1 + 6 * n * n, p);
    for (std::size_t i = 0; i < units.size(); ++i) {
        for (std::size_t j = i + 1; j < units.size(); ++j) {
            if (sums[i] != sums[j]) continue;
            bool congruent = mod_floor(units[i] - units[j], p) == 0 ||
                             mod_floor(units[i] * units[j], p) == target;
            if (!congruent) return false;
        }
    }
    return true;
}

struct Counterexample {
    std::string description;
    bool holds;
};

/// Re-derives from scratch the two converse-failure fixtures: pairs that pass
/// the divisibility condition yet have unequal sums. Returns all-true entries
/// when both fixtures reproduce.
inline std::vector<Counterexample> counterexample_fixtures() {
    std::vector<Counterexample> out;

    Rational s37 = dedekind_naive(37, 40);
    Rational s33 = dedekind_naive(33, 40);
    bool dedekind_case = thm1_divisibility(37, 33, 40) &&
                         s37 == Rational(-13, 16) && s33 == Rational(-5, 16) &&
                         s37 != s33;
    out.push_back({"dedekind-converse b=40 a1=37 a2=33", dedekind_case});

    Rational r3 = rademacher_naive(6, 3, 23);
    Rational r11 = rademacher_naive(6, 11, 23);
    bool rademacher_case = thm3_divisibility(6, 3, 11, 23) &&
                           r3 == Rational(-3, 92) && r11 == Rational(43, 92) &&
                           r3 != r11;
    out.push_back({"rademacher-converse n=6 b=23 a1=3 a2=11", rademacher_case});

    return out;
}

enum class Evaluator { naive, fast };

/// Partition of the units mod b keyed by the exact value of s(a,b).
/// Keys iterate in increasing value order; member lists are ascending.
struct LevelSetTable {
    Int b;
    std::map<Rational, std::vector<Int>> entries;
};

inline LevelSetTable level_sets(const Int& b, Evaluator ev = Evaluator::fast) {
    if (b < 1) throw std::domain_error("level_sets: b must be positive");
    LevelSetTable table{b, {}};
    for (const Int& a : detail::units_mod(b)) {
        Rational value = ev == Evaluator::naive ? dedekind_naive(a, b)
                                                : dedekind_fast(a, b);
        table.entries[value].push_back(a);
    }
    return table;
}

/// Number of residues x mod b, coprime to b, with s(x,b) = c; 0 when c is
/// not attained.
inline std::int64_t count_solutions(const Int& b, const Rational& c,
                                    Evaluator ev = Evaluator::fast) {
    LevelSetTable table = level_sets(b, ev);
    auto it = table.entries.find(c);
    return it == table.entries.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

/// Per-modulus statistics over a range: distinct-prime-factor count r, unit
/// count, and the class-size spread of the s(.,b) level sets. Reports data
/// only; asserts nothing about any lower bound on class counts.
struct CensusRow {
    Int b;
    int r;
    std::int64_t unit_count;
    std::int64_t num_classes;
    std::int64_t min_class_size;
    std::int64_t max_class_size;
};

inline std::vector<CensusRow> census(const Int& b_min, const Int& b_max,
                                     Evaluator ev = Evaluator::fast) {
    if (b_min < 1 || b_min > b_max)
        throw std::domain_error("census: need 1 <= b_min <= b_max");
    std::vector<CensusRow> rows;
    for (Int b = b_min; b <= b_max; ++b) {
        LevelSetTable table = level_sets(b, ev);
        CensusRow row{b, distinct_prime_factor_count(b), 0, 0, 0, 0};
        row.num_classes = static_cast<std::int64_t>(table.entries.size());
        for (const auto& [value, members] : table.entries) {
            auto size = static_cast<std::int64_t>(members.size());
            row.unit_count += size;
            row.min_class_size = row.min_class_size == 0 ? size
                                 : std::min(row.min_class_size, size);
            row.max_class_size = std::max(row.max_class_size, size);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dedekind
