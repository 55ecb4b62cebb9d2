#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>

#include "rfkit/errors.hpp"
#include "rfkit/ramanujan/csum.hpp"
#include "test_util.hpp"

using namespace rfkit;
using ramanujan::csum;
using ramanujan::csum_direct;

TEST_SUITE("ramanujan") {

TEST_CASE("direct exponential sum at hand-checked points") {
    CHECK(csum_direct(1, 0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(csum_direct(1, 17) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(csum_direct(2, 1) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(csum_direct(6, 4) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK_THROWS_AS(csum_direct(0, 1), std::invalid_argument);
}

TEST_CASE("closed form equals the direct sum for q, n <= 60") {
    const auto& t = test::small_table();
    for (std::uint64_t q = 1; q <= 60; ++q) {
        for (std::uint64_t n = 0; n <= 60; ++n) {
            const double direct = csum_direct(q, n);
            const std::int64_t fast = csum(q, n, t);
            REQUIRE(std::abs(direct - static_cast<double>(fast)) < 1e-6);
        }
    }
}

TEST_CASE("closed-form spot values") {
    const auto& t = test::small_table();
    CHECK(csum(6, 4, t) == -1);   // g=2: mu(3)*phi(6)/phi(3) = -1*2/2
    CHECK(csum(4, 2, t) == -2);
    for (std::uint64_t q : {1, 2, 3, 4, 6, 9, 12, 30}) {
        for (std::uint64_t m = 0; m <= 3; ++m) {
            CHECK(csum(q, q * m, t) == static_cast<std::int64_t>(t.phi[q]));
        }
    }
    CHECK_THROWS_AS(csum(t.limit + 1, 0, t), std::out_of_range);
}

TEST_CASE("periodicity, evenness and the phi bound") {
    const auto& t = test::small_table();
    std::mt19937_64 gen(31337);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t q = 1 + gen() % 150;
        const std::uint64_t n = gen() % 1000;
        const std::int64_t v = csum(q, n, t);
        CHECK(v == csum(q, n + q, t));
        CHECK(v == csum(q, (q - n % q) % q, t));
        CHECK(std::abs(v) <= static_cast<std::int64_t>(t.phi[q]));
    }
}

TEST_CASE("multiplicativity in coprime moduli") {
    const auto& t = test::small_table();
    CHECK(ramanujan::check_multiplicativity(2, 3, 1, t));
    CHECK(csum(2, 1, t) * csum(3, 1, t) == 1);
    CHECK(ramanujan::check_multiplicativity(1, 9, 5, t));
    CHECK(ramanujan::check_multiplicativity(3, 5, 7, t));
    for (std::uint64_t n = 0; n <= 40; ++n) {
        CHECK(ramanujan::check_multiplicativity(4, 9, n, t));
        CHECK(ramanujan::check_multiplicativity(5, 8, n, t));
    }
    CHECK_THROWS_AS(ramanujan::check_multiplicativity(4, 6, 1, t),
                    std::invalid_argument);
}

TEST_CASE("orthogonality over full periods, exact in integer arithmetic") {
    const auto& t = test::small_table();
    for (std::uint64_t q = 1; q <= 12; ++q) {
        for (std::uint64_t qp = 1; qp <= 12; ++qp) {
            const std::uint64_t x = std::lcm(q, qp) * 100;
            std::int64_t total = 0;
            for (std::uint64_t n = 1; n <= x; ++n) {
                total += csum(q, n, t) * csum(qp, n, t);
            }
            const std::int64_t expected =
                q == qp ? static_cast<std::int64_t>(x) * t.phi[q] : 0;
            REQUIRE(total == expected);
        }
    }
}

TEST_CASE("bulk table rows") {
    const auto& t = test::small_table();

    const auto ones = ramanujan::build_csum_table(1, 5, t);
    for (std::uint32_t n = 0; n <= 5; ++n) CHECK(ones.at(1, n) == 1);

    const auto t3 = ramanujan::build_csum_table(3, 5, t);
    const std::int32_t row3[] = {2, -1, -1, 2, -1, -1};
    for (std::uint32_t n = 0; n <= 5; ++n) CHECK(t3.at(3, n) == row3[n]);

    const auto t4 = ramanujan::build_csum_table(4, 3, t);
    const std::int32_t row4[] = {2, 0, -2, 0};
    for (std::uint32_t n = 0; n <= 3; ++n) CHECK(t4.at(4, n) == row4[n]);

    // rows are periodic and start at phi(q)
    const auto grid = ramanujan::build_csum_table(12, 40, t);
    for (std::uint32_t q = 1; q <= 12; ++q) {
        CHECK(grid.at(q, 0) == static_cast<std::int32_t>(t.phi[q]));
        for (std::uint32_t n = 0; n + q <= 40; ++n) {
            CHECK(grid.at(q, n) == grid.at(q, n + q));
        }
    }
}

TEST_CASE("bulk table memory guard") {
    const auto& t = test::small_table();
    CHECK_THROWS_AS(ramanujan::build_csum_table(3000, 40'000'000, t),
                    resource_error);
}

} // TEST_SUITE
