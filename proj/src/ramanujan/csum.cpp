#include "rfkit/ramanujan/csum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rfkit/errors.hpp"

namespace rfkit::ramanujan {

double csum_direct(std::uint64_t q, std::uint64_t n) {
    if (q == 0) throw std::invalid_argument("csum_direct: q must be >= 1");

    const std::uint64_t n_red = n % q;
    double re = 0.0;
    double im = 0.0;
    for (std::uint64_t k = 1; k <= q; ++k) {
        if (std::gcd(k, q) != 1) continue;
        // Reduce k*n mod q before forming the angle so the argument stays in
        // [0, 2*pi) and no range-reduction error accumulates.
        const std::uint64_t m = (k * n_red) % q;
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(q);
        re += std::cos(theta);
        im += std::sin(theta);
    }

    if (std::abs(im) >= 1e-6) {
        throw std::logic_error("csum_direct: imaginary part failed to cancel at q=" +
                               std::to_string(q) + ", n=" + std::to_string(n));
    }
    if (std::abs(re - std::round(re)) >= 1e-6) {
        throw std::logic_error("csum_direct: real part not near an integer at q=" +
                               std::to_string(q) + ", n=" + std::to_string(n));
    }
    return re;
}

std::int64_t csum(std::uint64_t q, std::uint64_t n, const arith::FactorTable& table) {
    if (q == 0) throw std::invalid_argument("csum: q must be >= 1");
    if (q > table.limit) {
        throw std::out_of_range("csum: q = " + std::to_string(q) +
                                " exceeds table limit " + std::to_string(table.limit));
    }
    const std::uint64_t g = std::gcd(n % q, q); // gcd(0, q) == q, so c_q(0) = phi(q)
    const std::uint64_t d = q / g;
    const std::int64_t mu_d = table.mu[d];
    if (mu_d == 0) return 0;
    return mu_d * static_cast<std::int64_t>(table.phi[q] / table.phi[d]);
}

bool check_multiplicativity(std::uint64_t q1, std::uint64_t q2, std::uint64_t n,
                            const arith::FactorTable& table) {
    if (std::gcd(q1, q2) != 1) {
        throw std::invalid_argument("check_multiplicativity: moduli must be coprime");
    }
    return csum(q1 * q2, n, table) == csum(q1, n, table) * csum(q2, n, table);
}

CSumTable build_csum_table(std::uint32_t qmax, std::uint32_t nmax,
                           const arith::FactorTable& table) {
    if (qmax == 0) throw std::invalid_argument("build_csum_table: qmax must be >= 1");
    const std::uint64_t entries =
        static_cast<std::uint64_t>(qmax) * (static_cast<std::uint64_t>(nmax) + 1);
    if (entries > kCSumTableMaxEntries) {
        throw resource_error("build_csum_table: " + std::to_string(entries) +
                             " entries exceed ceiling " +
                             std::to_string(kCSumTableMaxEntries));
    }

    CSumTable out;
    out.qmax = qmax;
    out.nmax = nmax;
    out.values.resize(entries);
    for (std::uint32_t q = 1; q <= qmax; ++q) {
        const std::size_t row = static_cast<std::size_t>(q - 1) * (nmax + 1);
        for (std::uint32_t n = 0; n <= nmax; ++n) {
            out.values[row + n] = static_cast<std::int32_t>(csum(q, n, table));
        }
    }
    return out;
}

} // namespace rfkit::ramanujan
