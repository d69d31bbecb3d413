#pragma once

/**
 * @file bench.hpp
 * @brief Reproducible naive-vs-fast timing batches.
 *
 * Inputs are generated from a user seed with std::mt19937_64 so runs are
 * reproducible across machines: timings vary, checksums must not. Bounded
 * draws use rejection sampling on the raw 64-bit outputs instead of
 * std::uniform_int_distribution, whose mapping the standard does not pin
 * down across implementations.
 */

#include <chrono>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "sums.hpp"

namespace dedekind {

/// Timing record for one evaluator over one input batch.
struct BenchRecord {
    std::string method;  // "naive" or "fast"
    unsigned b_bits;
    std::uint64_t trials;
    std::uint64_t mean_time_ns;
    Rational checksum;  // exact sum of all results; 0 when skipped
    bool skipped;
};

/// Deterministic random source for benchmark inputs.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Unbiased draw from [0, n), n >= 1: modulo with tail rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

    /// Integer with exactly `bits` bits: top bit set, remaining bits drawn
    /// most-significant-word first from successive 64-bit outputs.
    Int exact_bits(unsigned bits) {
        if (bits == 0) throw std::domain_error("SeededRng: bits must be >= 1");
        Int value = 1;
        unsigned remaining = bits - 1;
        while (remaining >= 64) {
            value <<= 64;
            value += next();
            remaining -= 64;
        }
        if (remaining > 0) {
            value <<= remaining;
            value += next() >> (64 - remaining);
        }
        return value;
    }

    /// Unbiased draw from [0, n) for arbitrary n >= 1: rejection on draws of
    /// n's bit width.
    Int below_int(const Int& n) {
        if (n < 1) throw std::domain_error("SeededRng: bound must be >= 1");
        if (n <= UINT64_MAX) return Int(below(n.convert_to<std::uint64_t>()));
        unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
        for (;;) {
            Int v = 0;
            unsigned remaining = bits;
            while (remaining >= 64) {
                v <<= 64;
                v += next();
                remaining -= 64;
            }
            if (remaining > 0) {
                v <<= remaining;
                v += next() >> (64 - remaining);
            }
            if (v < n) return v;
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Modulus b with exactly `bits` bits (bits >= 2), numerator a uniform in
/// [1, b) with gcd(a, b) = 1 by rejection.
inline std::pair<Int, Int> random_coprime_pair(SeededRng& rng, unsigned bits) {
    if (bits < 2) throw std::domain_error("random_coprime_pair: bits must be >= 2");
    Int b = rng.exact_bits(bits);
    Int a;
    do {
        a = rng.below_int(b - 1) + 1;
    } while (boost::multiprecision::gcd(a, b) != 1);
    return {std::move(a), std::move(b)};
}

/// Largest modulus width (in bits) at which the O(b) defining sum is still
/// run by the benchmark; wider batches emit a skipped naive record.
inline constexpr unsigned naive_feasible_max_bits = 22;

/// Times both evaluators on an identical batch of `trials` coprime pairs at
/// the given modulus width. The naive record is marked skipped above
/// naive_feasible_max_bits. Emits naive first, then fast.
inline std::vector<BenchRecord> run_bench(unsigned bits, std::uint64_t trials,
                                          std::uint64_t seed) {
    if (bits < 2) throw std::domain_error("run_bench: bits must be >= 2");
    if (trials < 1) throw std::domain_error("run_bench: trials must be >= 1");

    SeededRng rng(seed);
    std::vector<SumArgs> batch;
    batch.reserve(static_cast<std::size_t>(trials));
    for (std::uint64_t i = 0; i < trials; ++i) {
        auto [a, b] = random_coprime_pair(rng, bits);
        batch.emplace_back(std::move(a), std::move(b));
    }

    auto timed = [&](auto&& eval) {
        Rational checksum;
        auto start = std::chrono::steady_clock::now();
        for (const SumArgs& args : batch) checksum += eval(args);
        auto stop = std::chrono::steady_clock::now();
        auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
        return std::pair<std::uint64_t, Rational>(
            static_cast<std::uint64_t>(ns.count()) / trials, std::move(checksum));
    };

    std::vector<BenchRecord> records;
    if (bits <= naive_feasible_max_bits) {
        auto [mean, checksum] = timed([](const SumArgs& args) { return dedekind_naive(args); });
        records.push_back({"naive", bits, trials, mean, std::move(checksum), false});
    } else {
        records.push_back({"naive", bits, trials, 0, Rational(), true});
    }
    auto [mean, checksum] = timed([](const SumArgs& args) { return dedekind_fast(args); });
    records.push_back({"fast", bits, trials, mean, std::move(checksum), false});
    return records;
}

}  // namespace dedekind
