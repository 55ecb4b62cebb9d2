#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rfkit/arith/factor_table.hpp"
#include "rfkit/rf/sequence.hpp"

namespace rfkit::rf {

// A finite vector of real Ramanujan-Fourier coefficients a_q, q = 1..qmax.
struct RFSpectrum {
    enum class Source { estimated, closed_form, synthetic };

    std::uint32_t qmax = 0;
    std::vector<double> coeffs;   // coeffs[q-1] = a_q
    Source source = Source::synthetic;
    std::uint64_t x_used = 0;     // sample length when source == estimated

    double a(std::uint32_t q) const { return coeffs[q - 1]; }
};

const char* source_name(RFSpectrum::Source source);

// Carmichael's coefficient extraction at finite X:
//   a_q = (1 / (phi(q) * X)) * sum_{n<=X} a(n) * c_q(n).
// Exact (up to float rounding) whenever X is a multiple of the periods
// involved. Throws std::invalid_argument on an empty sequence,
// std::out_of_range if q exceeds the table.
double carmichael_estimate(const SequenceWindow& seq, std::uint64_t q,
                           const arith::FactorTable& table);

// carmichael_estimate vectorized over q = 1..qmax.
RFSpectrum estimate_spectrum(const SequenceWindow& seq, std::uint32_t qmax,
                             const arith::FactorTable& table);

// Truncated series sum_{q<=qmax} a_q * c_q(n).
double reconstruct(const RFSpectrum& spec, std::uint64_t n,
                   const arith::FactorTable& table);

// Known coefficient families for the built-in sequences, cross-checked
// against the estimator in the test suite:
//   sigma_over_n      a_q = zeta(2) / q^2
//   phi_over_n        a_q = mu(q) / (zeta(2) * J2(q)),  J2 the second Jordan totient
//   mangoldt_relative a_q = mu(q) / phi(q)
RFSpectrum closed_form_spectrum(BuiltinSeq seq, std::uint32_t qmax,
                                const arith::FactorTable& table);

// Serialization: CSV with header "q,a_q" (readable back by
// read_spectrum_csv) and a JSON object mirror.
void write_spectrum_csv(std::ostream& out, const RFSpectrum& spec);
RFSpectrum read_spectrum_csv(const std::string& path);
RFSpectrum parse_spectrum_csv(std::istream& in, const std::string& origin);
std::string spectrum_to_json(const RFSpectrum& spec);

} // namespace rfkit::rf
