#include "rfkit/arith/factor_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rfkit::arith {

FactorTable build_table(std::uint64_t limit) {
    if (limit < 2 || limit > kFactorTableMaxLimit) {
        throw std::invalid_argument("build_table: limit must be in [2, 1e8], got " +
                                    std::to_string(limit));
    }

    FactorTable t;
    t.limit = limit;
    t.spf.assign(limit + 1, 0);
    t.mu.assign(limit + 1, 0);
    t.phi.assign(limit + 1, 0);
    t.mangoldt.assign(limit + 1, 0.0);

    t.spf[1] = 1;
    t.mu[1] = 1;
    t.phi[1] = 1;

    std::vector<std::uint32_t> primes;
    primes.reserve(static_cast<std::size_t>(limit / 10 + 16));

    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (t.spf[n] == 0) {
            t.spf[n] = static_cast<std::uint32_t>(n);
            t.mu[n] = -1;
            t.phi[n] = static_cast<std::uint32_t>(n - 1);
            primes.push_back(static_cast<std::uint32_t>(n));
        }
        for (std::uint32_t p : primes) {
            if (p > t.spf[n] || p > limit / n) break;
            const std::uint64_t m = p * n;
            t.spf[m] = p;
            if (p == t.spf[n]) {
                t.mu[m] = 0;
                t.phi[m] = t.phi[n] * p;
                break;
            }
            t.mu[m] = static_cast<std::int8_t>(-t.mu[n]);
            t.phi[m] = t.phi[n] * (p - 1);
        }
    }

    // mangoldt[n] = log p iff n = p^k. n/spf[n] must itself be 1 or a power
    // of the same prime; reuse the smaller entry so equal prime powers share
    // a bitwise-identical log value.
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const std::uint32_t p = t.spf[n];
        const std::uint64_t m = n / p;
        if (m == 1) {
            t.mangoldt[n] = std::log(static_cast<double>(p));
        } else if (t.spf[m] == p && t.mangoldt[m] != 0.0) {
            t.mangoldt[n] = t.mangoldt[m];
        }
    }

    return t;
}

std::vector<std::uint64_t> divisors(std::uint64_t n, const FactorTable& table) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    if (n > table.limit) {
        throw std::out_of_range("divisors: n = " + std::to_string(n) +
                                " exceeds table limit " + std::to_string(table.limit));
    }

    std::vector<std::uint64_t> divs{1};
    std::uint64_t rest = n;
    while (rest > 1) {
        const std::uint64_t p = table.spf[rest];
        std::uint32_t exp = 0;
        while (rest % p == 0) {
            rest /= p;
            ++exp;
        }
        const std::size_t count = divs.size();
        std::uint64_t pk = 1;
        for (std::uint32_t e = 1; e <= exp; ++e) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) {
                divs.push_back(divs[i] * pk);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace rfkit::arith
