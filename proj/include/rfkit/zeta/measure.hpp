#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rfkit::zeta {

// Parameters of the measure P_s(A) = (1/zeta(s)) * sum_{n in A} n^-s.
// The exponent is floored at 1.001: the measure degenerates as s -> 1 and
// the limit study is the supported way to approach that boundary.
struct ZetaParams {
    double s = 2.0;
    std::uint64_t n_trunc = 1'000'000;

    ZetaParams(double s_, std::uint64_t n_trunc_);
};

inline constexpr double kMinExponent = 1.001;
inline constexpr std::uint64_t kMinTruncation = 100;

// A truncated evaluation together with a guaranteed upper bound on the
// truncation error; exact-formula paths report tail_bound == 0.
struct MeasureResult {
    double value = 0.0;
    double tail_bound = 0.0;
};

// Subsets of the positive integers with decidable membership.
class EventSpec {
public:
    enum class Kind { multiples_of, residue_class, finite_set, predicate };

    static EventSpec all();   // multiples of 1
    static EventSpec multiples_of(std::uint64_t m);
    static EventSpec residue_class(std::uint64_t a, std::uint64_t m);
    static EventSpec finite_set(std::vector<std::uint64_t> elements);
    static EventSpec predicate(std::function<bool(std::uint64_t)> member,
                               std::string label);

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return m_; }
    std::uint64_t residue() const { return a_; }
    const std::vector<std::uint64_t>& elements() const { return elements_; }
    bool contains(std::uint64_t n) const;
    std::string describe() const;

private:
    EventSpec() = default;

    Kind kind_ = Kind::multiples_of;
    std::uint64_t m_ = 1;
    std::uint64_t a_ = 0;
    std::vector<std::uint64_t> elements_;
    std::function<bool(std::uint64_t)> member_;
    std::string label_;
};

// Truncated zeta: value = sum_{n<=N} n^-s, tail_bound = N^(1-s)/(s-1).
// The interval [value, value + tail_bound] brackets zeta(s).
// Throws std::domain_error for s <= 1.
MeasureResult zeta_value(double s, std::uint64_t n_trunc);

// P_s(A). Events with a closed form (multiples of m -> m^-s) are exact with
// zero tail; everything else is evaluated by truncated series with a
// propagated, guaranteed tail bound.
MeasureResult measure(const ZetaParams& params, const EventSpec& a);

// Forces the truncated-series route even when a closed form exists; used to
// check the truncation machinery against exact values.
MeasureResult measure_truncated(const ZetaParams& params, const EventSpec& a);

// |P_s(A_p intersect A_q) - P_s(A_p) * P_s(A_q)| from the exact formulas.
// Zero up to float rounding; p and q must be distinct primes.
double independence_gap(const ZetaParams& params, std::uint64_t p, std::uint64_t q);

// Arithmetic density |A intersect [1, X]| / X.
double density(const EventSpec& a, std::uint64_t x);

struct DensityLimitRow {
    double s = 0.0;
    double value = 0.0;
    double tail_bound = 0.0;
};

struct DensityLimitStudy {
    std::vector<DensityLimitRow> rows;
    double density_reference = 0.0;
    std::uint64_t density_x = 0;
};

// One measure row per exponent in the schedule (each must be > 1), plus the
// arithmetic density over [1, density_x] for comparison.
DensityLimitStudy density_limit_study(const EventSpec& a,
                                      const std::vector<double>& s_schedule,
                                      std::uint64_t n_trunc,
                                      std::uint64_t density_x);

bool is_prime(std::uint64_t n);

} // namespace rfkit::zeta
