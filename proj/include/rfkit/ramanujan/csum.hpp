#pragma once

#include <cstdint>
#include <vector>

#include "rfkit/arith/factor_table.hpp"

namespace rfkit::ramanujan {

// Exact table of c_q(n) for 1 <= q <= qmax, 0 <= n <= nmax, row-major.
// Row q is periodic in n with period q; values[q][0] == phi(q).
struct CSumTable {
    std::uint32_t qmax = 0;
    std::uint32_t nmax = 0;
    std::vector<std::int32_t> values;

    std::int32_t at(std::uint32_t q, std::uint32_t n) const {
        return values[static_cast<std::size_t>(q - 1) * (nmax + 1) + n];
    }
};

// Ramanujan sum by literal summation of e^{2*pi*i*k*n/q} over k coprime to q.
// O(q) complex arithmetic; used as the oracle for the closed form. The
// accumulated imaginary part must vanish to 1e-6 and the real part must sit
// within 1e-6 of an integer, else std::logic_error.
double csum_direct(std::uint64_t q, std::uint64_t n);

// Closed form mu(q/g) * phi(q) / phi(q/g) with g = gcd(n, q). Exact integer,
// O(log) after table lookup. c_q(0) = phi(q).
// Throws std::out_of_range if q > table.limit.
std::int64_t csum(std::uint64_t q, std::uint64_t n, const arith::FactorTable& table);

// Whether c_{q1*q2}(n) == c_{q1}(n) * c_{q2}(n). Multiplicativity is only
// claimed for coprime moduli; throws std::invalid_argument otherwise.
bool check_multiplicativity(std::uint64_t q1, std::uint64_t q2, std::uint64_t n,
                            const arith::FactorTable& table);

// Bulk table; guards qmax * (nmax + 1) entries against kCSumTableMaxEntries
// with resource_error.
CSumTable build_csum_table(std::uint32_t qmax, std::uint32_t nmax,
                           const arith::FactorTable& table);

inline constexpr std::uint64_t kCSumTableMaxEntries = 100'000'000;

} // namespace rfkit::ramanujan
