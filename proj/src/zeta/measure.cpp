#include "rfkit/zeta/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "rfkit/simd/reduce.hpp"

namespace rfkit::zeta {

ZetaParams::ZetaParams(double s_, std::uint64_t n_trunc_) : s(s_), n_trunc(n_trunc_) {
    if (!(s >= kMinExponent)) {
        throw std::domain_error("ZetaParams: s must be >= " +
                                std::to_string(kMinExponent) + ", got " +
                                std::to_string(s));
    }
    if (n_trunc < kMinTruncation) {
        throw std::invalid_argument("ZetaParams: truncation must be >= " +
                                    std::to_string(kMinTruncation));
    }
}

EventSpec EventSpec::all() { return multiples_of(1); }

EventSpec EventSpec::multiples_of(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("EventSpec: modulus must be >= 1");
    EventSpec e;
    e.kind_ = Kind::multiples_of;
    e.m_ = m;
    return e;
}

EventSpec EventSpec::residue_class(std::uint64_t a, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("EventSpec: modulus must be >= 1");
    EventSpec e;
    e.kind_ = Kind::residue_class;
    e.m_ = m;
    e.a_ = a % m;
    return e;
}

EventSpec EventSpec::finite_set(std::vector<std::uint64_t> elements) {
    for (std::uint64_t n : elements) {
        if (n == 0) throw std::invalid_argument("EventSpec: elements must be positive");
    }
    EventSpec e;
    e.kind_ = Kind::finite_set;
    e.elements_ = std::move(elements);
    return e;
}

EventSpec EventSpec::predicate(std::function<bool(std::uint64_t)> member,
                               std::string label) {
    if (!member) throw std::invalid_argument("EventSpec: empty predicate");
    EventSpec e;
    e.kind_ = Kind::predicate;
    e.member_ = std::move(member);
    e.label_ = std::move(label);
    return e;
}

bool EventSpec::contains(std::uint64_t n) const {
    if (n == 0) return false;
    switch (kind_) {
        case Kind::multiples_of: return n % m_ == 0;
        case Kind::residue_class: return n % m_ == a_;
        case Kind::finite_set:
            for (std::uint64_t e : elements_) {
                if (e == n) return true;
            }
            return false;
        case Kind::predicate: return member_(n);
    }
    return false;
}

std::string EventSpec::describe() const {
    switch (kind_) {
        case Kind::multiples_of: return "multiples of " + std::to_string(m_);
        case Kind::residue_class:
            return std::to_string(a_) + " mod " + std::to_string(m_);
        case Kind::finite_set: {
            std::string out = "{";
            for (std::size_t i = 0; i < elements_.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(elements_[i]);
            }
            return out + "}";
        }
        case Kind::predicate: return "predicate:" + label_;
    }
    return "?";
}

MeasureResult zeta_value(double s, std::uint64_t n_trunc) {
    if (!(s > 1.0)) {
        throw std::domain_error("zeta_value: series diverges for s <= 1");
    }
    if (n_trunc == 0) throw std::invalid_argument("zeta_value: truncation must be >= 1");

    simd::detail::Neumaier acc;
    for (std::uint64_t n = 1; n <= n_trunc; ++n) {
        acc.add(std::pow(static_cast<double>(n), -s));
    }
    MeasureResult r;
    r.value = acc.value();
    r.tail_bound = std::pow(static_cast<double>(n_trunc), 1.0 - s) / (s - 1.0);
    return r;
}

namespace {

// Truncated numerator sum over A together with a guaranteed tail bound.
std::pair<double, double> event_series(const ZetaParams& params, const EventSpec& a) {
    const double s = params.s;
    const std::uint64_t n_max = params.n_trunc;
    simd::detail::Neumaier acc;

    switch (a.kind()) {
        case EventSpec::Kind::multiples_of:
        case EventSpec::Kind::residue_class: {
            const std::uint64_t m = a.modulus();
            const std::uint64_t res = a.kind() == EventSpec::Kind::multiples_of
                                          ? 0
                                          : a.residue();
            std::uint64_t first = res == 0 ? m : res;
            for (std::uint64_t n = first; n <= n_max; n += m) {
                acc.add(std::pow(static_cast<double>(n), -s));
            }
            // First omitted element of the class, then an integral bound for
            // the rest of the progression.
            std::uint64_t next = first;
            if (n_max >= first) {
                next = first + ((n_max - first) / m + 1) * m;
            }
            const double nd = static_cast<double>(next);
            const double tail = std::pow(nd, -s) +
                                std::pow(nd, 1.0 - s) /
                                    (static_cast<double>(m) * (s - 1.0));
            return {acc.value(), tail};
        }
        case EventSpec::Kind::finite_set: {
            for (std::uint64_t n : a.elements()) {
                acc.add(std::pow(static_cast<double>(n), -s));
            }
            return {acc.value(), 0.0}; // finite numerator is exact
        }
        case EventSpec::Kind::predicate: {
            for (std::uint64_t n = 1; n <= n_max; ++n) {
                if (a.contains(n)) acc.add(std::pow(static_cast<double>(n), -s));
            }
            // Nothing is known about the predicate past the truncation, so
            // charge the full zeta tail.
            const double tail = std::pow(static_cast<double>(n_max), 1.0 - s) / (s - 1.0);
            return {acc.value(), tail};
        }
    }
    return {0.0, 0.0};
}

MeasureResult truncated_measure(const ZetaParams& params, const EventSpec& a) {
    const auto [num, num_tail] = event_series(params, a);
    const MeasureResult z = zeta_value(params.s, params.n_trunc);
    MeasureResult r;
    r.value = num / z.value;
    // P = S/zeta with S in [num, num+num_tail], zeta in [z, z+z_tail]:
    // |num/z - P| <= num_tail/z + num * z_tail / z^2.
    r.tail_bound = num_tail / z.value + num * z.tail_bound / (z.value * z.value);
    return r;
}

} // namespace

MeasureResult measure(const ZetaParams& params, const EventSpec& a) {
    if (a.kind() == EventSpec::Kind::multiples_of) {
        // P_s(multiples of m) = m^-s exactly: the class sum is m^-s * zeta(s).
        return {std::pow(static_cast<double>(a.modulus()), -params.s), 0.0};
    }
    return truncated_measure(params, a);
}

MeasureResult measure_truncated(const ZetaParams& params, const EventSpec& a) {
    return truncated_measure(params, a);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

double independence_gap(const ZetaParams& params, std::uint64_t p, std::uint64_t q) {
    if (!is_prime(p) || !is_prime(q)) {
        throw std::invalid_argument("independence_gap: arguments must be prime");
    }
    if (p == q) {
        throw std::invalid_argument(
            "independence_gap: p and q must be distinct (an event is not "
            "independent of itself)");
    }
    const double joint = measure(params, EventSpec::multiples_of(p * q)).value;
    const double prod = measure(params, EventSpec::multiples_of(p)).value *
                        measure(params, EventSpec::multiples_of(q)).value;
    return std::abs(joint - prod);
}

double density(const EventSpec& a, std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("density: X must be >= 1");
    std::uint64_t count = 0;
    switch (a.kind()) {
        case EventSpec::Kind::multiples_of:
            count = x / a.modulus();
            break;
        case EventSpec::Kind::residue_class: {
            const std::uint64_t m = a.modulus();
            const std::uint64_t first = a.residue() == 0 ? m : a.residue();
            count = x >= first ? (x - first) / m + 1 : 0;
            break;
        }
        case EventSpec::Kind::finite_set:
            for (std::uint64_t e : a.elements()) {
                if (e <= x) ++count;
            }
            break;
        case EventSpec::Kind::predicate:
            for (std::uint64_t n = 1; n <= x; ++n) {
                if (a.contains(n)) ++count;
            }
            break;
    }
    return static_cast<double>(count) / static_cast<double>(x);
}

DensityLimitStudy density_limit_study(const EventSpec& a,
                                      const std::vector<double>& s_schedule,
                                      std::uint64_t n_trunc,
                                      std::uint64_t density_x) {
    if (s_schedule.empty()) {
        throw std::invalid_argument("density_limit_study: empty schedule");
    }
    for (double s : s_schedule) {
        if (!(s > 1.0)) {
            throw std::domain_error("density_limit_study: schedule requires s > 1");
        }
    }
    DensityLimitStudy study;
    study.rows.reserve(s_schedule.size());
    for (double s : s_schedule) {
        const ZetaParams params(s, n_trunc);
        const MeasureResult r = measure(params, a);
        study.rows.push_back({s, r.value, r.tail_bound});
    }
    study.density_x = density_x;
    study.density_reference = density(a, density_x);
    return study;
}

} // namespace rfkit::zeta
