#include "rfkit/wk/correlation.hpp"

#include <stdexcept>
#include <string>

#include "rfkit/ramanujan/csum.hpp"
#include "rfkit/simd/reduce.hpp"

namespace rfkit::wk {

double autocorrelation(const rf::SequenceWindow& seq, std::uint64_t h) {
    const std::uint64_t x = seq.x();
    if (h >= x) {
        throw std::invalid_argument("autocorrelation: shift h = " + std::to_string(h) +
                                    " must be < X = " + std::to_string(x));
    }
    const std::uint64_t pairs = x - h;
    const double total = simd::dot(seq.values.data(), seq.values.data() + h, pairs);
    return total / static_cast<double>(pairs);
}

double wk_predict(const rf::RFSpectrum& spec, std::uint64_t h,
                  const arith::FactorTable& table) {
    if (spec.qmax > table.limit) {
        throw std::out_of_range("wk_predict: spectrum qmax exceeds table limit");
    }
    simd::detail::Neumaier acc;
    for (std::uint32_t q = 1; q <= spec.qmax; ++q) {
        const double a = spec.coeffs[q - 1];
        if (a == 0.0) continue;
        acc.add(a * a * static_cast<double>(ramanujan::csum(q, h, table)));
    }
    return acc.value();
}

CorrelationReport compare(const rf::SequenceWindow& seq, const rf::RFSpectrum& spec,
                          const std::vector<std::uint64_t>& shifts,
                          const arith::FactorTable& table) {
    CorrelationReport report;
    report.sequence_name = seq.name;
    report.x = seq.x();
    report.qmax = spec.qmax;
    report.exploratory = seq.name == rf::builtin_name(rf::BuiltinSeq::mangoldt_relative);
    report.shifts = shifts;
    report.empirical.reserve(shifts.size());
    report.predicted.reserve(shifts.size());
    for (std::uint64_t h : shifts) {
        report.empirical.push_back(autocorrelation(seq, h));
        report.predicted.push_back(wk_predict(spec, h, table));
    }
    return report;
}

double twin_constant_series(std::uint64_t h, std::uint32_t qmax,
                            const arith::FactorTable& table) {
    if (h < 2 || h % 2 != 0) {
        throw std::invalid_argument("twin_constant_series: h must be even and >= 2");
    }
    if (qmax == 0) throw std::invalid_argument("twin_constant_series: qmax must be >= 1");
    if (qmax > table.limit) {
        throw std::out_of_range("twin_constant_series: qmax exceeds table limit");
    }
    simd::detail::Neumaier acc;
    for (std::uint64_t q = 1; q <= qmax; ++q) {
        if (table.mu[q] == 0) continue; // mu(q)^2 == 1 otherwise
        const double phi = static_cast<double>(table.phi[q]);
        acc.add(static_cast<double>(ramanujan::csum(q, h, table)) / (phi * phi));
    }
    return acc.value();
}

} // namespace rfkit::wk
