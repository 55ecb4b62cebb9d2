#include "rfkit/rf/sequence.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rfkit/errors.hpp"

namespace rfkit::rf {

BuiltinSeq builtin_from_name(std::string_view name) {
    if (name == "sigma_over_n") return BuiltinSeq::sigma_over_n;
    if (name == "phi_over_n") return BuiltinSeq::phi_over_n;
    if (name == "mangoldt_relative") return BuiltinSeq::mangoldt_relative;
    throw std::invalid_argument("unknown builtin sequence '" + std::string(name) +
                                "' (expected sigma_over_n, phi_over_n or mangoldt_relative)");
}

std::string_view builtin_name(BuiltinSeq seq) {
    switch (seq) {
        case BuiltinSeq::sigma_over_n: return "sigma_over_n";
        case BuiltinSeq::phi_over_n: return "phi_over_n";
        case BuiltinSeq::mangoldt_relative: return "mangoldt_relative";
    }
    return "unknown";
}

namespace {

// sigma(n) from the spf factorization; fits uint64 far past the table ceiling.
std::uint64_t divisor_sum(std::uint64_t n, const arith::FactorTable& table) {
    std::uint64_t sigma = 1;
    std::uint64_t rest = n;
    while (rest > 1) {
        const std::uint64_t p = table.spf[rest];
        std::uint64_t pk = 1;
        std::uint64_t geom = 1; // 1 + p + ... + p^e
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            geom += pk;
        }
        sigma *= geom;
    }
    return sigma;
}

} // namespace

SequenceWindow builtin_sequence(BuiltinSeq seq, std::uint64_t x,
                                const arith::FactorTable& table) {
    if (x == 0) throw std::invalid_argument("builtin_sequence: X must be >= 1");
    if (x > table.limit) {
        throw std::out_of_range("builtin_sequence: X = " + std::to_string(x) +
                                " exceeds table limit " + std::to_string(table.limit));
    }

    SequenceWindow out;
    out.name = builtin_name(seq);
    out.values.resize(x);
    switch (seq) {
        case BuiltinSeq::sigma_over_n:
            for (std::uint64_t n = 1; n <= x; ++n) {
                out.values[n - 1] = static_cast<double>(divisor_sum(n, table)) /
                                    static_cast<double>(n);
            }
            break;
        case BuiltinSeq::phi_over_n:
            for (std::uint64_t n = 1; n <= x; ++n) {
                out.values[n - 1] = static_cast<double>(table.phi[n]) /
                                    static_cast<double>(n);
            }
            break;
        case BuiltinSeq::mangoldt_relative:
            for (std::uint64_t n = 1; n <= x; ++n) {
                out.values[n - 1] = table.mangoldt[n] *
                                    static_cast<double>(table.phi[n]) /
                                    static_cast<double>(n);
            }
            break;
    }
    return out;
}

SequenceWindow parse_sequence_csv(std::istream& in, const std::string& origin) {
    std::string line;
    std::uint64_t lineno = 0;

    auto fail = [&](const std::string& why) -> io_error {
        return io_error(origin + ":" + std::to_string(lineno) + ": " + why);
    };

    if (!std::getline(in, line)) throw fail("empty input, expected header 'n,value'");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,value") throw fail("expected header 'n,value', got '" + line + "'");

    SequenceWindow out;
    std::uint64_t expected_n = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) throw fail("expected 'n,value' row");

        std::uint64_t n = 0;
        const char* nb = line.data();
        const char* ne = line.data() + comma;
        auto [np, nec] = std::from_chars(nb, ne, n);
        if (nec != std::errc{} || np != ne) throw fail("bad index field");
        if (n != expected_n) {
            throw fail("indices must run 1..X contiguously; expected " +
                       std::to_string(expected_n) + ", got " + std::to_string(n));
        }

        const std::string value_str = line.substr(comma + 1);
        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(value_str, &consumed);
        } catch (const std::exception&) {
            throw fail("bad value field '" + value_str + "'");
        }
        if (consumed != value_str.size()) throw fail("trailing junk in value field");
        if (!std::isfinite(value)) throw fail("values must be finite");

        out.values.push_back(value);
        ++expected_n;
    }
    if (out.values.empty()) throw fail("no data rows");
    out.name = origin;
    return out;
}

SequenceWindow read_sequence_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open sequence file '" + path + "'");
    return parse_sequence_csv(in, path);
}

} // namespace rfkit::rf
