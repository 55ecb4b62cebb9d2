#include "rfkit/rf/spectrum.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "rfkit/errors.hpp"
#include "rfkit/ramanujan/csum.hpp"
#include "rfkit/simd/reduce.hpp"

namespace rfkit::rf {

namespace {

constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

// Second Jordan totient J2(q) = q^2 * prod_{p|q} (1 - p^-2), exact.
std::uint64_t jordan2(std::uint64_t q, const arith::FactorTable& table) {
    std::uint64_t j2 = 1;
    std::uint64_t rest = q;
    while (rest > 1) {
        const std::uint64_t p = table.spf[rest];
        std::uint64_t pe = 1;
        while (rest % p == 0) {
            rest /= p;
            pe *= p;
        }
        j2 *= pe * pe - (pe / p) * (pe / p);
    }
    return j2;
}

} // namespace

const char* source_name(RFSpectrum::Source source) {
    switch (source) {
        case RFSpectrum::Source::estimated: return "estimated";
        case RFSpectrum::Source::closed_form: return "closed-form";
        case RFSpectrum::Source::synthetic: return "synthetic";
    }
    return "unknown";
}

double carmichael_estimate(const SequenceWindow& seq, std::uint64_t q,
                           const arith::FactorTable& table) {
    if (seq.values.empty()) {
        throw std::invalid_argument("carmichael_estimate: sequence is empty");
    }
    if (q == 0) throw std::invalid_argument("carmichael_estimate: q must be >= 1");
    if (q > table.limit) {
        throw std::out_of_range("carmichael_estimate: q exceeds table limit");
    }

    // One period of c_q as weights; the window starts at n = 1.
    std::vector<double> pattern(q);
    for (std::uint64_t r = 0; r < q; ++r) {
        pattern[r] = static_cast<double>(ramanujan::csum(q, r, table));
    }
    const double total = simd::periodic_dot(seq.values.data(), seq.values.size(),
                                            pattern.data(), q, 1 % q);
    return total / (static_cast<double>(table.phi[q]) * static_cast<double>(seq.x()));
}

RFSpectrum estimate_spectrum(const SequenceWindow& seq, std::uint32_t qmax,
                             const arith::FactorTable& table) {
    if (qmax == 0) throw std::invalid_argument("estimate_spectrum: qmax must be >= 1");
    RFSpectrum spec;
    spec.qmax = qmax;
    spec.source = RFSpectrum::Source::estimated;
    spec.x_used = seq.x();
    spec.coeffs.resize(qmax);
    for (std::uint32_t q = 1; q <= qmax; ++q) {
        spec.coeffs[q - 1] = carmichael_estimate(seq, q, table);
    }
    return spec;
}

double reconstruct(const RFSpectrum& spec, std::uint64_t n,
                   const arith::FactorTable& table) {
    if (spec.qmax > table.limit) {
        throw std::out_of_range("reconstruct: spectrum qmax exceeds table limit");
    }
    simd::detail::Neumaier acc;
    for (std::uint32_t q = 1; q <= spec.qmax; ++q) {
        acc.add(spec.coeffs[q - 1] *
                static_cast<double>(ramanujan::csum(q, n, table)));
    }
    return acc.value();
}

RFSpectrum closed_form_spectrum(BuiltinSeq seq, std::uint32_t qmax,
                                const arith::FactorTable& table) {
    if (qmax == 0 || qmax > table.limit) {
        throw std::invalid_argument("closed_form_spectrum: bad qmax");
    }
    RFSpectrum spec;
    spec.qmax = qmax;
    spec.source = RFSpectrum::Source::closed_form;
    spec.coeffs.resize(qmax);
    for (std::uint64_t q = 1; q <= qmax; ++q) {
        double a = 0.0;
        switch (seq) {
            case BuiltinSeq::sigma_over_n:
                a = kZeta2 / (static_cast<double>(q) * static_cast<double>(q));
                break;
            case BuiltinSeq::phi_over_n:
                a = table.mu[q] == 0
                        ? 0.0
                        : static_cast<double>(table.mu[q]) /
                              (kZeta2 * static_cast<double>(jordan2(q, table)));
                break;
            case BuiltinSeq::mangoldt_relative:
                a = table.mu[q] == 0
                        ? 0.0
                        : static_cast<double>(table.mu[q]) /
                              static_cast<double>(table.phi[q]);
                break;
        }
        spec.coeffs[q - 1] = a;
    }
    return spec;
}

void write_spectrum_csv(std::ostream& out, const RFSpectrum& spec) {
    out << "q,a_q\n";
    char buf[40];
    for (std::uint32_t q = 1; q <= spec.qmax; ++q) {
        std::snprintf(buf, sizeof buf, "%.17g", spec.coeffs[q - 1]);
        out << q << ',' << buf << '\n';
    }
}

RFSpectrum parse_spectrum_csv(std::istream& in, const std::string& origin) {
    std::string line;
    std::uint64_t lineno = 0;

    auto fail = [&](const std::string& why) -> io_error {
        return io_error(origin + ":" + std::to_string(lineno) + ": " + why);
    };

    if (!std::getline(in, line)) throw fail("empty input, expected header 'q,a_q'");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "q,a_q") throw fail("expected header 'q,a_q', got '" + line + "'");

    RFSpectrum spec;
    spec.source = RFSpectrum::Source::synthetic;
    std::uint64_t expected_q = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) throw fail("expected 'q,a_q' row");

        std::uint64_t q = 0;
        auto [qp, qec] = std::from_chars(line.data(), line.data() + comma, q);
        if (qec != std::errc{} || qp != line.data() + comma) throw fail("bad q field");
        if (q != expected_q) {
            throw fail("q must run 1..qmax contiguously; expected " +
                       std::to_string(expected_q));
        }

        const std::string value_str = line.substr(comma + 1);
        std::size_t consumed = 0;
        double a = 0.0;
        try {
            a = std::stod(value_str, &consumed);
        } catch (const std::exception&) {
            throw fail("bad coefficient field '" + value_str + "'");
        }
        if (consumed != value_str.size()) throw fail("trailing junk in coefficient");
        if (!std::isfinite(a)) throw fail("coefficients must be finite");

        spec.coeffs.push_back(a);
        ++expected_q;
    }
    if (spec.coeffs.empty()) throw fail("no data rows");
    spec.qmax = static_cast<std::uint32_t>(spec.coeffs.size());
    return spec;
}

RFSpectrum read_spectrum_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open spectrum file '" + path + "'");
    return parse_spectrum_csv(in, path);
}

std::string spectrum_to_json(const RFSpectrum& spec) {
    nlohmann::ordered_json j;
    j["qmax"] = spec.qmax;
    j["source"] = source_name(spec.source);
    if (spec.source == RFSpectrum::Source::estimated) j["X_used"] = spec.x_used;
    j["coeffs"] = spec.coeffs;
    return j.dump();
}

} // namespace rfkit::rf
