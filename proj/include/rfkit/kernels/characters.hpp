#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rfkit/arith/factor_table.hpp"
#include "rfkit/zeta/measure.hpp"

namespace rfkit::kernels {

// Characters of the cyclic group of order r are indexed by k in [0, r); the
// character k has kernel of order gcd(k, r). Subgroups are represented by
// their orders throughout (the subgroup lattice of a cyclic group is the
// divisor lattice of r).

struct KernelSimConfig {
    std::uint64_t r = 1;       // group order
    std::uint32_t s = 1;       // number of characters drawn per trial
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

struct KernelDistribution {
    enum class Mode { exact, enumerated, monte_carlo };

    std::uint64_t r = 1;
    std::uint32_t s = 1;
    Mode mode = Mode::exact;
    std::vector<std::uint64_t> divisors;  // ascending divisors of r
    std::vector<double> prob;             // prob[i] for joint kernel == C_{divisors[i]}
    std::uint64_t trials = 0;             // monte_carlo only
    std::uint64_t seed = 0;               // monte_carlo only
};

const char* mode_name(KernelDistribution::Mode mode);

// Order of the kernel of character k: gcd(k, r), with the trivial character
// k = 0 having full kernel. Requires 0 <= k < r.
std::uint64_t kernel_order(std::uint64_t r, std::uint64_t k);

// Order of the intersection of the kernels: gcd(k_1, ..., k_s, r).
// The list must be nonempty and every index must lie in [0, r).
std::uint64_t joint_kernel_order(std::uint64_t r, std::span<const std::uint64_t> ks);

// Probability that the joint kernel of s random characters contains C_n: n^-s.
double prob_contains(std::uint64_t n, std::uint32_t s);

// Probability that the joint kernel is exactly C_n, by Moebius inversion over
// the divisor lattice: sum over n | d | r of mu(d/n) / d^s. Requires n | r.
double prob_exact_finite(std::uint64_t r, std::uint64_t n, std::uint32_t s);

// Brute-force oracle: walks all r^s character tuples. Guarded at
// kEnumerationGuard tuples (resource_error beyond).
KernelDistribution enumerate_exact(std::uint64_t r, std::uint32_t s);

inline constexpr std::uint64_t kEnumerationGuard = 100'000'000;

// Monte Carlo: trials independent draws of s uniform character indices,
// classified by joint kernel order. Reproducible from the seed.
KernelDistribution simulate(const KernelSimConfig& config);

// Exact distribution via prob_exact_finite on every divisor of r.
KernelDistribution exact_distribution(std::uint64_t r, std::uint32_t s);

// Generic Moebius inversion on the divisor lattice of r: given
// f(n) = sum_{n | d | r} g(d), recovers g(n) = sum_{n | d | r} mu(d/n) f(d).
// f must be keyed by exactly the divisors of r.
std::map<std::uint64_t, double> mobius_invert(std::uint64_t r,
                                              const std::map<std::uint64_t, double>& f);

// Profinite limit P_{C_n} = n^-s / zeta(s), evaluated two ways: through the
// truncated zeta (with propagated tail bound) and as the direct truncated
// series sum_{j<=N} mu(j) (n j)^-s; gap reports their absolute difference.
struct ProfiniteResult {
    zeta::MeasureResult via_zeta;
    double direct_sum = 0.0;
    double gap = 0.0;
};

// Requires s > 1 and n_trunc <= table.limit (mu values come from the table).
ProfiniteResult prob_exact_profinite(std::uint64_t n, double s,
                                     std::uint64_t n_trunc,
                                     const arith::FactorTable& table);

// Divisors of r in ascending order by trial division; r need not be covered
// by any sieve table.
std::vector<std::uint64_t> divisors_of(std::uint64_t r);

// Moebius function of a single value by trial division.
int mobius_of(std::uint64_t n);

} // namespace rfkit::kernels
