#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rfkit/arith/factor_table.hpp"

namespace rfkit::rf {

// A window a(1..X) of an arithmetic function. values[i] holds a(i+1).
struct SequenceWindow {
    std::string name;
    std::vector<double> values;

    std::uint64_t x() const { return values.size(); }
    double at(std::uint64_t n) const { return values[n - 1]; }
};

enum class BuiltinSeq {
    sigma_over_n,       // sigma(n)/n, sum of divisors over n
    phi_over_n,         // phi(n)/n
    mangoldt_relative,  // Lambda(n) * phi(n) / n
};

// Throws std::invalid_argument for unknown names.
BuiltinSeq builtin_from_name(std::string_view name);
std::string_view builtin_name(BuiltinSeq seq);

// Materializes one of the built-in sequences, exact from the sieved tables.
// Requires 1 <= X <= table.limit.
SequenceWindow builtin_sequence(BuiltinSeq seq, std::uint64_t x,
                                const arith::FactorTable& table);

// Reads a sequence from CSV with header "n,value"; n must run contiguously
// 1, 2, ..., X. Throws io_error on missing files or malformed content.
SequenceWindow read_sequence_csv(const std::string& path);
SequenceWindow parse_sequence_csv(std::istream& in, const std::string& origin);

} // namespace rfkit::rf
