#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rfkit/arith/factor_table.hpp"
#include "rfkit/rf/sequence.hpp"
#include "rfkit/rf/spectrum.hpp"

namespace rfkit::wk {

// Paired empirical autocorrelation and spectral prediction per shift.
struct CorrelationReport {
    std::string sequence_name;
    std::uint64_t x = 0;
    std::uint32_t qmax = 0;
    bool exploratory = false;  // set for sequences whose expansion is conjectural
    std::vector<std::uint64_t> shifts;
    std::vector<double> empirical;
    std::vector<double> predicted;
};

// (1 / (X - h)) * sum_{n=1..X-h} a(n) * a(n + h). Normalizing by the number
// of available pairs keeps the h = 0 value exactly the mean square.
// Requires h < X.
double autocorrelation(const rf::SequenceWindow& seq, std::uint64_t h);

// Spectral prediction sum_q a_q^2 * c_q(h) for a real spectrum.
double wk_predict(const rf::RFSpectrum& spec, std::uint64_t h,
                  const arith::FactorTable& table);

CorrelationReport compare(const rf::SequenceWindow& seq, const rf::RFSpectrum& spec,
                          const std::vector<std::uint64_t>& shifts,
                          const arith::FactorTable& table);

// Truncated series sum_{q<=qmax} (mu(q)/phi(q))^2 * c_q(h) for even h >= 2.
// At h = 2 this converges toward twice the twin prime constant. Requires
// qmax <= table.limit; odd h is out of scope and rejected.
double twin_constant_series(std::uint64_t h, std::uint32_t qmax,
                            const arith::FactorTable& table);

} // namespace rfkit::wk
