#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace rfkit::arith {

// Sieved tables of the elementary arithmetic functions. Built once, then
// shared read-only by every estimator; all arrays are indexed by n and valid
// for 1 <= n <= limit.
//
// Memory is roughly 17 bytes per entry; the construction guard caps limit at
// 1e8 (about 1.7 GiB).
struct FactorTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> spf;     // smallest prime factor; spf[1] == 1 sentinel
    std::vector<std::int8_t> mu;        // Moebius function, in {-1, 0, 1}
    std::vector<std::uint32_t> phi;     // Euler totient
    std::vector<double> mangoldt;       // von Mangoldt: log p at prime powers p^k, else 0
};

inline constexpr std::uint64_t kFactorTableMaxLimit = 100'000'000;

// Linear sieve filling spf, mu, phi and mangoldt in one pass.
// Throws std::invalid_argument unless 2 <= limit <= 1e8.
FactorTable build_table(std::uint64_t limit);

// Divisors of n in ascending order, computed on demand from spf.
// Throws std::out_of_range if n > table.limit; std::invalid_argument if n == 0.
std::vector<std::uint64_t> divisors(std::uint64_t n, const FactorTable& table);

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

} // namespace rfkit::arith
