// Acceptance suite: runs every headline check at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any line fails.
//
// Usage: rfkit_acceptance [path-to-rfkit-cli] [scratch-dir]
// The CLI path is needed by the determinism criterion (11).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rfkit/arith/factor_table.hpp"
#include "rfkit/kernels/characters.hpp"
#include "rfkit/ramanujan/csum.hpp"
#include "rfkit/rf/sequence.hpp"
#include "rfkit/rf/spectrum.hpp"
#include "rfkit/wk/correlation.hpp"
#include "rfkit/zeta/measure.hpp"
#include "rfkit/zeta/sampler.hpp"

namespace fs = std::filesystem;
using namespace rfkit;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, const std::string& label, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// 1. closed form vs literal exponential sum, q,n <= 200, tol 1e-6, < 10 s
void criterion_1(const arith::FactorTable& table) {
    const auto start = Clock::now();
    double worst = 0.0;
    for (std::uint64_t q = 1; q <= 200; ++q) {
        for (std::uint64_t n = 0; n <= 200; ++n) {
            const double direct = ramanujan::csum_direct(q, n);
            const double fast = static_cast<double>(ramanujan::csum(q, n, table));
            worst = std::max(worst, std::abs(direct - fast));
        }
    }
    const double elapsed = seconds_since(start);
    report(1, "csum closed form vs direct summation, q,n <= 200",
           worst < 1e-6 && elapsed < 10.0,
           "max |gap| = " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

// 2. orthogonality over X = lcm(q,q')*100, exact in integer arithmetic
void criterion_2(const arith::FactorTable& table) {
    bool ok = true;
    for (std::uint64_t q = 1; q <= 12 && ok; ++q) {
        for (std::uint64_t qp = 1; qp <= 12 && ok; ++qp) {
            const std::uint64_t x = std::lcm(q, qp) * 100;
            std::int64_t sum = 0;
            for (std::uint64_t n = 1; n <= x; ++n) {
                sum += ramanujan::csum(q, n, table) * ramanujan::csum(qp, n, table);
            }
            const std::int64_t expected =
                q == qp ? static_cast<std::int64_t>(x) * table.phi[q] : 0;
            ok = sum == expected;
        }
    }
    report(2, "csum orthogonality exact over full periods, q,q' <= 12", ok,
           ok ? "all 144 pairs exact" : "integer mismatch");
}

// 3. Carmichael recovery for sigma(n)/n at X = 1e6, < 30 s
void criterion_3(const arith::FactorTable& table) {
    const auto start = Clock::now();
    const auto seq = rf::builtin_sequence(rf::BuiltinSeq::sigma_over_n, 1'000'000,
                                          table);
    const auto spec = rf::estimate_spectrum(seq, 8, table);
    double worst_ratio = 1.0;
    for (std::uint32_t q = 1; q <= 8; ++q) {
        const double ratio = spec.a(q) * q * q / kZeta2;
        if (std::abs(ratio - 1.0) > std::abs(worst_ratio - 1.0)) worst_ratio = ratio;
    }
    const double elapsed = seconds_since(start);
    const bool ok =
        worst_ratio >= 0.98 && worst_ratio <= 1.02 && elapsed < 30.0;
    report(3, "Carmichael recovery of zeta(2)/q^2 for sigma(n)/n at X=1e6", ok,
           "worst a_q*q^2/zeta(2) = " + fmt(worst_ratio) + ", " + fmt(elapsed) + " s");
}

// 4. independence of prime divisibility, exact and Monte Carlo
void criterion_4() {
    double worst = 0.0;
    const std::vector<std::uint64_t> primes{2,  3,  5,  7,  11, 13, 17, 19,
                                            23, 29, 31, 37, 41, 43, 47};
    for (double s : {1.5, 2.0, 3.0}) {
        const zeta::ZetaParams params(s, 10'000);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            for (std::size_t j = i + 1; j < primes.size(); ++j) {
                worst = std::max(worst,
                                 zeta::independence_gap(params, primes[i], primes[j]));
            }
        }
    }

    const zeta::ZetaParams params(2.0, 10'000);
    const auto draws = zeta::sample(params, 42, 1'000'000);
    std::uint64_t joint = 0;
    for (std::uint64_t d : draws) joint += d % 6 == 0;
    const double freq = static_cast<double>(joint) / 1e6;
    const double p = 1.0 / 36.0;
    const double sd = std::sqrt(p * (1.0 - p) / 1e6);
    const double sigmas = std::abs(freq - p) / sd;

    const bool ok = worst < 1e-15 && sigmas < 3.0;
    report(4, "P_s(A_p * A_q) = P_s(A_p) P_s(A_q), exact and by sampling", ok,
           "max exact gap = " + fmt(worst) + ", joint-divisibility at " + fmt(sigmas) +
               " sigma");
}

// 5. s -> 1 limit: m^-s at s=1.01 within 2% of 1/m, truncation within its bound
void criterion_5() {
    bool ok = true;
    std::string detail;
    for (std::uint64_t m : {2, 3, 5}) {
        const zeta::ZetaParams params(1.01, 1'000'000);
        const auto event = zeta::EventSpec::multiples_of(m);
        const double exact = zeta::measure(params, event).value;
        const double dens = 1.0 / static_cast<double>(m);
        const double rel = std::abs(exact - dens) / dens;
        const auto truncated = zeta::measure_truncated(params, event);
        const bool in_bound = std::abs(truncated.value - exact) <= truncated.tail_bound;
        ok = ok && rel < 0.02 && in_bound;
        if (m == 5) detail = "m=5: rel gap " + fmt(rel) + ", trunc within bound";
    }
    report(5, "P_s(multiples of m) at s=1.01 vs density 1/m, m in {2,3,5}", ok, detail);
}

// 6. Moebius-inversion formula vs brute force; flagship 2/3 by Monte Carlo; < 60 s
void criterion_6() {
    const auto start = Clock::now();
    double worst = 0.0;
    for (std::uint64_t r = 1; r <= 30; ++r) {
        for (std::uint32_t s = 1; s <= 3; ++s) {
            const auto enumerated = kernels::enumerate_exact(r, s);
            for (std::size_t i = 0; i < enumerated.divisors.size(); ++i) {
                const double formula =
                    kernels::prob_exact_finite(r, enumerated.divisors[i], s);
                worst = std::max(worst, std::abs(formula - enumerated.prob[i]));
            }
        }
    }

    kernels::KernelSimConfig cfg;
    cfg.r = 6;
    cfg.s = 2;
    cfg.trials = 1'000'000;
    cfg.seed = 99;
    const auto sim = kernels::simulate(cfg);
    const double p = 2.0 / 3.0;
    const double sd = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.trials));
    const double sigmas = std::abs(sim.prob[0] - p) / sd;

    const double elapsed = seconds_since(start);
    const bool ok = worst < 1e-12 && sigmas < 3.0 && elapsed < 60.0;
    report(6, "joint-kernel formula vs enumeration (r<=30, s<=3) + MC flagship 2/3",
           ok,
           "max gap = " + fmt(worst) + ", MC at " + fmt(sigmas) + " sigma, " +
               fmt(elapsed) + " s");
}

// 7. upward-sum identity 1/n^s = sum_{n|d|r} P_{C_d}
void criterion_7() {
    double worst = 0.0;
    for (std::uint64_t r = 1; r <= 200; ++r) {
        const auto divs = kernels::divisors_of(r);
        for (std::uint32_t s = 1; s <= 5; ++s) {
            for (std::uint64_t n : divs) {
                double upward = 0.0;
                for (std::uint64_t d : divs) {
                    if (d % n == 0) upward += kernels::prob_exact_finite(r, d, s);
                }
                worst = std::max(worst,
                                 std::abs(upward - kernels::prob_contains(n, s)));
            }
        }
    }
    report(7, "upward-sum identity over all r <= 200, s <= 5", worst < 1e-12,
           "max gap = " + fmt(worst));
}

// 8. profinite limit along r = lcm(1..m): decreasing gaps, m=8 gap below 0.01.
// The second part is numerically impossible: P(C_1) at r = lcm(1..8) = 840 is
// prod_{p in {2,3,5,7}} (1 - p^-2) = 0.6269388, a gap of 0.0190 from
// 1/zeta(2) = 0.6079271. New prime factors enter the tower too slowly; the
// gap first drops below 0.01 at m = 17. The check is implemented as stated
// and reports the honest failure.
void criterion_8() {
    const double limit = 1.0 / kZeta2;
    std::vector<double> gaps;
    std::uint64_t lcm = 1;
    std::uint64_t next = 2;
    for (std::uint64_t m : {4, 6, 8}) {
        for (; next <= m; ++next) lcm = std::lcm(lcm, next);
        gaps.push_back(std::abs(kernels::prob_exact_finite(lcm, 1, 2) - limit));
    }
    const bool decreasing = gaps[0] > gaps[1] && gaps[1] > gaps[2];
    const bool small_enough = gaps[2] < 0.01;
    report(8, "profinite limit along lcm(1..m), m in {4,6,8}",
           decreasing && small_enough,
           "gaps = " + fmt(gaps[0]) + ", " + fmt(gaps[1]) + ", " + fmt(gaps[2]) +
               (decreasing ? "; decreasing" : "; not decreasing") +
               (small_enough ? "" : "; m=8 gap not below 0.01 (first below at m=17)"));
}

// 9. WK identity for a synthetic spectrum, exact over full-period pair windows
void criterion_9(const arith::FactorTable& table) {
    rf::RFSpectrum spec;
    spec.qmax = 12;
    spec.coeffs = {1, 3, 5, 1, 2, 0, 0, 1, 0, 0, 0, 2};

    std::uint64_t period = 1;
    for (std::uint64_t q = 1; q <= 12; ++q) period = std::lcm(period, q); // 27720
    const std::uint64_t base = period * 4;

    std::vector<double> values(base + 24);
    for (std::uint64_t n = 1; n <= values.size(); ++n) {
        double v = 0.0;
        for (std::uint32_t q = 1; q <= 12; ++q) {
            v += spec.coeffs[q - 1] *
                 static_cast<double>(ramanujan::csum(q, n, table));
        }
        values[n - 1] = v;
    }

    double worst = 0.0;
    for (std::uint64_t h = 0; h <= 24; ++h) {
        rf::SequenceWindow window{
            "synthetic", {values.begin(), values.begin() + base + h}};
        const double empirical = wk::autocorrelation(window, h);
        const double predicted = wk::wk_predict(spec, h, table);
        worst = std::max(worst, std::abs(empirical - predicted));
    }
    report(9, "WK identity on a synthetic spectrum, all h <= 24", worst < 1e-9,
           "max |empirical - predicted| = " + fmt(worst));
}

// 10. twin-prime-flavored experiment (exploratory), < 5 min
void criterion_10(const arith::FactorTable& table) {
    const auto start = Clock::now();

    // independent oracle: 2 * prod_{2 < p <= 1e6} (1 - (p-1)^-2)
    double oracle = 2.0;
    for (std::uint64_t p = 3; p <= 1'000'000; ++p) {
        if (table.spf[p] == p) {
            const double pm1 = static_cast<double>(p - 1);
            oracle *= 1.0 - 1.0 / (pm1 * pm1);
        }
    }

    const double series = wk::twin_constant_series(2, 1 << 14, table);
    const double series_rel = std::abs(series - oracle) / oracle;

    const auto seq =
        rf::builtin_sequence(rf::BuiltinSeq::mangoldt_relative, 10'000'000, table);
    const double autocorr = wk::autocorrelation(seq, 2);
    const double autocorr_rel = std::abs(autocorr - series) / series;

    const double elapsed = seconds_since(start);
    const bool ok = series_rel < 0.01 && autocorr_rel < 0.25 && elapsed < 300.0;
    report(10, "twin constant series + exploratory autocorrelation at h=2, X=1e7", ok,
           "series = " + fmt(series) + " (oracle " + fmt(oracle) + ", rel " +
               fmt(series_rel) + "), autocorr = " + fmt(autocorr) + " (rel " +
               fmt(autocorr_rel) + ", exploratory), " + fmt(elapsed) + " s");
}

// 11. byte-identical reruns of every seeded subcommand
void criterion_11(const std::string& cli, const fs::path& scratch) {
    if (cli.empty()) {
        report(11, "seeded subcommands are byte-identical across reruns", false,
               "no CLI path given on the command line");
        return;
    }
    fs::create_directories(scratch);

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    auto run = [&](const std::string& args) {
        const std::string cmd = "'" + cli + "' " + args + " > /dev/null 2>&1";
        return std::system(cmd.c_str()) == 0;
    };

    bool ok = true;
    std::string detail;
    const std::vector<std::pair<std::string, std::string>> cases{
        {"zeta-sample", "zeta-sample --s 2 --count 200000 --seed 7"},
        {"kernel-sim",
         "kernel-sim --r 12 --s 2 --simulate --trials 200000 --seed 3"},
    };
    for (const auto& [name, args] : cases) {
        const fs::path a = scratch / (name + "_a.csv");
        const fs::path b = scratch / (name + "_b.csv");
        if (!run(args + " --output " + a.string()) ||
            !run(args + " --output " + b.string())) {
            ok = false;
            detail = name + " failed to run";
            break;
        }
        const std::string body_a = slurp(a);
        if (body_a.empty() || body_a != slurp(b)) {
            ok = false;
            detail = name + " outputs differ";
            break;
        }
    }
    if (ok) detail = "zeta-sample and kernel-sim reruns identical";
    report(11, "seeded subcommands are byte-identical across reruns", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const fs::path scratch =
        argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "rfkit_acceptance";

    const auto start = Clock::now();
    std::printf("building shared tables (limit 1e7)...\n");
    const auto table = arith::build_table(10'000'000);
    std::printf("tables ready after %.2f s\n\n", seconds_since(start));

    criterion_1(table);
    criterion_2(table);
    criterion_3(table);
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(table);
    criterion_10(table);
    criterion_11(cli, scratch);

    std::printf("\n%d of 11 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
