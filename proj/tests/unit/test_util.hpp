#pragma once

#include <cstdint>
#include <random>

#include "rfkit/arith/factor_table.hpp"

namespace rfkit::test {

// Shared sieve tables, built once per process.
inline const arith::FactorTable& small_table() {
    static const arith::FactorTable t = arith::build_table(5000);
    return t;
}

inline const arith::FactorTable& mid_table() {
    static const arith::FactorTable t = arith::build_table(200'000);
    return t;
}

inline const arith::FactorTable& big_table() {
    static const arith::FactorTable t = arith::build_table(1'000'000);
    return t;
}

} // namespace rfkit::test
