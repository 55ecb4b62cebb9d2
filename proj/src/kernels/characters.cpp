#include "rfkit/kernels/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "rfkit/errors.hpp"
#include "rfkit/rng.hpp"
#include "rfkit/simd/reduce.hpp"

namespace rfkit::kernels {

const char* mode_name(KernelDistribution::Mode mode) {
    switch (mode) {
        case KernelDistribution::Mode::exact: return "exact";
        case KernelDistribution::Mode::enumerated: return "enumerated";
        case KernelDistribution::Mode::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

std::vector<std::uint64_t> divisors_of(std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("divisors_of: r must be positive");
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d * d <= r; ++d) {
        if (r % d == 0) {
            divs.push_back(d);
            if (d != r / d) divs.push_back(r / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int mobius_of(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mobius_of: n must be positive");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::uint64_t kernel_order(std::uint64_t r, std::uint64_t k) {
    if (r == 0) throw std::invalid_argument("kernel_order: r must be >= 1");
    if (k >= r) {
        throw std::invalid_argument("kernel_order: character index " +
                                    std::to_string(k) + " out of [0, " +
                                    std::to_string(r) + ")");
    }
    return std::gcd(k, r); // gcd(0, r) == r: trivial character, full kernel
}

std::uint64_t joint_kernel_order(std::uint64_t r, std::span<const std::uint64_t> ks) {
    if (ks.empty()) {
        throw std::invalid_argument("joint_kernel_order: need at least one character");
    }
    std::uint64_t g = r;
    for (std::uint64_t k : ks) {
        if (k >= r) {
            throw std::invalid_argument("joint_kernel_order: index out of range");
        }
        g = std::gcd(g, k);
    }
    return g;
}

namespace {

// 1 / n^s with an exact integer power when it fits, pow fallback otherwise.
double inv_pow(std::uint64_t n, std::uint32_t s) {
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        if (acc > std::uint64_t{1} << 62 || acc * n / n != acc) {
            return std::pow(static_cast<double>(n), -static_cast<double>(s));
        }
        acc *= n;
    }
    return 1.0 / static_cast<double>(acc);
}

} // namespace

double prob_contains(std::uint64_t n, std::uint32_t s) {
    if (n == 0) throw std::invalid_argument("prob_contains: n must be >= 1");
    if (s == 0) throw std::invalid_argument("prob_contains: s must be >= 1");
    return inv_pow(n, s);
}

double prob_exact_finite(std::uint64_t r, std::uint64_t n, std::uint32_t s) {
    if (r == 0 || n == 0) throw std::invalid_argument("prob_exact_finite: r, n >= 1");
    if (s == 0) throw std::invalid_argument("prob_exact_finite: s must be >= 1");
    if (r % n != 0) {
        throw std::invalid_argument("prob_exact_finite: n = " + std::to_string(n) +
                                    " does not divide r = " + std::to_string(r));
    }
    // d = n * e with e running over the divisors of r / n.
    simd::detail::Neumaier acc;
    for (std::uint64_t e : divisors_of(r / n)) {
        const int mu = mobius_of(e);
        if (mu == 0) continue;
        acc.add(mu * inv_pow(n * e, s));
    }
    return acc.value();
}

KernelDistribution exact_distribution(std::uint64_t r, std::uint32_t s) {
    KernelDistribution dist;
    dist.r = r;
    dist.s = s;
    dist.mode = KernelDistribution::Mode::exact;
    dist.divisors = divisors_of(r);
    dist.prob.reserve(dist.divisors.size());
    for (std::uint64_t n : dist.divisors) {
        dist.prob.push_back(prob_exact_finite(r, n, s));
    }
    return dist;
}

KernelDistribution enumerate_exact(std::uint64_t r, std::uint32_t s) {
    if (r == 0) throw std::invalid_argument("enumerate_exact: r must be >= 1");
    if (s == 0) throw std::invalid_argument("enumerate_exact: s must be >= 1");

    double tuples_d = 1.0;
    for (std::uint32_t i = 0; i < s; ++i) tuples_d *= static_cast<double>(r);
    if (tuples_d > static_cast<double>(kEnumerationGuard)) {
        throw resource_error("enumerate_exact: r^s = " + std::to_string(tuples_d) +
                             " tuples exceed guard " + std::to_string(kEnumerationGuard));
    }

    KernelDistribution dist;
    dist.r = r;
    dist.s = s;
    dist.mode = KernelDistribution::Mode::enumerated;
    dist.divisors = divisors_of(r);

    std::map<std::uint64_t, std::uint64_t> counts;
    std::vector<std::uint64_t> ks(s, 0);
    std::uint64_t total = 0;
    for (;;) {
        ++total;
        std::uint64_t g = r;
        for (std::uint64_t k : ks) g = std::gcd(g, k);
        ++counts[g];
        // odometer increment over [0, r)^s
        std::uint32_t pos = 0;
        while (pos < s && ++ks[pos] == r) {
            ks[pos] = 0;
            ++pos;
        }
        if (pos == s) break;
    }

    dist.prob.reserve(dist.divisors.size());
    for (std::uint64_t n : dist.divisors) {
        const auto it = counts.find(n);
        const std::uint64_t c = it == counts.end() ? 0 : it->second;
        dist.prob.push_back(static_cast<double>(c) / static_cast<double>(total));
    }
    return dist;
}

KernelDistribution simulate(const KernelSimConfig& config) {
    if (config.r == 0) throw std::invalid_argument("simulate: r must be >= 1");
    if (config.s == 0) throw std::invalid_argument("simulate: s must be >= 1");
    if (config.trials == 0) throw std::invalid_argument("simulate: trials must be >= 1");

    KernelDistribution dist;
    dist.r = config.r;
    dist.s = config.s;
    dist.mode = KernelDistribution::Mode::monte_carlo;
    dist.trials = config.trials;
    dist.seed = config.seed;
    dist.divisors = divisors_of(config.r);

    std::map<std::uint64_t, std::uint64_t> counts;
    std::mt19937_64 gen(config.seed);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        std::uint64_t g = config.r;
        for (std::uint32_t i = 0; i < config.s; ++i) {
            g = std::gcd(g, rng::bounded(gen, config.r));
        }
        ++counts[g];
    }

    dist.prob.reserve(dist.divisors.size());
    for (std::uint64_t n : dist.divisors) {
        const auto it = counts.find(n);
        const std::uint64_t c = it == counts.end() ? 0 : it->second;
        dist.prob.push_back(static_cast<double>(c) /
                            static_cast<double>(config.trials));
    }
    return dist;
}

std::map<std::uint64_t, double> mobius_invert(
    std::uint64_t r, const std::map<std::uint64_t, double>& f) {
    const std::vector<std::uint64_t> divs = divisors_of(r);
    if (f.size() != divs.size()) {
        throw std::invalid_argument("mobius_invert: f must be keyed by the " +
                                    std::to_string(divs.size()) + " divisors of r");
    }
    for (std::uint64_t d : divs) {
        if (!f.contains(d)) {
            throw std::invalid_argument("mobius_invert: missing divisor key " +
                                        std::to_string(d));
        }
    }

    std::map<std::uint64_t, double> g;
    for (std::uint64_t n : divs) {
        simd::detail::Neumaier acc;
        for (std::uint64_t d : divs) {
            if (d % n != 0) continue;
            const int mu = mobius_of(d / n);
            if (mu == 0) continue;
            acc.add(mu * f.at(d));
        }
        g[n] = acc.value();
    }
    return g;
}

ProfiniteResult prob_exact_profinite(std::uint64_t n, double s,
                                     std::uint64_t n_trunc,
                                     const arith::FactorTable& table) {
    if (n == 0) throw std::invalid_argument("prob_exact_profinite: n must be >= 1");
    if (!(s > 1.0)) {
        throw std::domain_error("prob_exact_profinite: requires s > 1");
    }
    if (n_trunc > table.limit) {
        throw std::out_of_range("prob_exact_profinite: truncation exceeds table limit");
    }

    const zeta::MeasureResult z = zeta::zeta_value(s, n_trunc);
    const double n_pow = std::pow(static_cast<double>(n), -s);

    ProfiniteResult out;
    out.via_zeta.value = n_pow / z.value;
    out.via_zeta.tail_bound = n_pow * z.tail_bound / (z.value * z.value);

    simd::detail::Neumaier acc;
    for (std::uint64_t j = 1; j <= n_trunc; ++j) {
        if (table.mu[j] == 0) continue;
        acc.add(table.mu[j] *
                std::pow(static_cast<double>(n) * static_cast<double>(j), -s));
    }
    out.direct_sum = acc.value();
    out.gap = std::abs(out.via_zeta.value - out.direct_sum);
    return out;
}

} // namespace rfkit::kernels
