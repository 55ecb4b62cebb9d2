// rfkit: reproducible number-theory experiments with CSV/JSON emission.
//
// Subcommands: csum, rf-estimate, rf-reconstruct, zeta-sample, zeta-measure,
// zeta-limit, kernel-sim, wk-correlate. Every run echoes its fully resolved
// configuration (seed included) into the output, and identical configurations
// produce byte-identical files.
//
// Exit codes: 0 success, 2 usage/validation, 3 I/O, 4 resource guard.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rfkit/arith/factor_table.hpp"
#include "rfkit/errors.hpp"
#include "rfkit/io/emit.hpp"
#include "rfkit/kernels/characters.hpp"
#include "rfkit/ramanujan/csum.hpp"
#include "rfkit/rf/sequence.hpp"
#include "rfkit/rf/spectrum.hpp"
#include "rfkit/wk/correlation.hpp"
#include "rfkit/zeta/measure.hpp"
#include "rfkit/zeta/sampler.hpp"

using nlohmann::ordered_json;
using rfkit::io::ConfigEcho;
using rfkit::io::fmt_double;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitResource = 4;

// Every command renders into a string first and the file is written in one
// shot at the end of the run.
void emit(const std::string& output, const std::string& body) {
    if (output.empty()) {
        std::cout << body;
        return;
    }
    const std::string path = rfkit::io::resolve_output_path(output);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw rfkit::io_error("cannot open output file '" + path + "'");
    f << body;
    if (!f) throw rfkit::io_error("failed writing output file '" + path + "'");
}

ordered_json config_json(const std::string& command, const ConfigEcho& echo) {
    ordered_json j;
    j["command"] = command;
    ordered_json cfg;
    for (const auto& [key, value] : echo) cfg[key] = value;
    j["config"] = cfg;
    return j;
}

struct CommonOpts {
    std::string format = "csv";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output,
                    "Output file (default stdout; relative paths resolve "
                    "under $RFKIT_OUT_DIR)");
}

// ---------------------------------------------------------------- csum ----

struct CsumOpts {
    std::uint64_t qmax = 10;
    std::uint64_t nmax = 10;
    CommonOpts common;
};

void run_csum(const CsumOpts& o) {
    const auto table = rfkit::arith::build_table(std::max<std::uint64_t>(o.qmax, 2));
    const auto grid = rfkit::ramanujan::build_csum_table(
        static_cast<std::uint32_t>(o.qmax), static_cast<std::uint32_t>(o.nmax), table);

    const ConfigEcho echo{{"qmax", std::to_string(o.qmax)},
                          {"nmax", std::to_string(o.nmax)},
                          {"format", o.common.format}};

    std::ostringstream out;
    if (o.common.format == "csv") {
        rfkit::io::write_config_comments(out, "csum", echo);
        out << "q";
        for (std::uint64_t n = 0; n <= o.nmax; ++n) out << ',' << n;
        out << '\n';
        for (std::uint64_t q = 1; q <= o.qmax; ++q) {
            out << q;
            for (std::uint64_t n = 0; n <= o.nmax; ++n) {
                out << ',' << grid.at(static_cast<std::uint32_t>(q),
                                      static_cast<std::uint32_t>(n));
            }
            out << '\n';
        }
    } else {
        ordered_json j = config_json("csum", echo);
        ordered_json rows = ordered_json::array();
        for (std::uint64_t q = 1; q <= o.qmax; ++q) {
            ordered_json row;
            row["q"] = q;
            std::vector<std::int64_t> values;
            for (std::uint64_t n = 0; n <= o.nmax; ++n) {
                values.push_back(grid.at(static_cast<std::uint32_t>(q),
                                         static_cast<std::uint32_t>(n)));
            }
            row["values"] = values;
            rows.push_back(row);
        }
        j["rows"] = rows;
        out << j.dump(2) << '\n';
    }
    emit(o.common.output, out.str());
}

// --------------------------------------------------------- rf-estimate ----

struct RfEstimateOpts {
    std::string builtin;
    std::string input;
    std::uint64_t qmax = 8;
    std::uint64_t x = 1'000'000;
    CommonOpts common;
};

void run_rf_estimate(const RfEstimateOpts& o) {
    rfkit::rf::SequenceWindow seq;
    if (!o.input.empty()) {
        seq = rfkit::rf::read_sequence_csv(o.input);
    }
    const std::uint64_t x = o.input.empty() ? o.x : seq.x();
    const auto table = rfkit::arith::build_table(
        std::max<std::uint64_t>({o.qmax, o.input.empty() ? x : 0, 2}));
    if (o.input.empty()) {
        seq = rfkit::rf::builtin_sequence(rfkit::rf::builtin_from_name(o.builtin), x,
                                          table);
    }

    const auto spec = rfkit::rf::estimate_spectrum(
        seq, static_cast<std::uint32_t>(o.qmax), table);

    const ConfigEcho echo{{"sequence", seq.name},
                          {"qmax", std::to_string(o.qmax)},
                          {"X", std::to_string(x)},
                          {"format", o.common.format}};

    std::ostringstream out;
    if (o.common.format == "csv") {
        rfkit::io::write_config_comments(out, "rf-estimate", echo);
        rfkit::rf::write_spectrum_csv(out, spec);
    } else {
        ordered_json j = config_json("rf-estimate", echo);
        j["spectrum"] = ordered_json::parse(rfkit::rf::spectrum_to_json(spec));
        out << j.dump(2) << '\n';
    }
    emit(o.common.output, out.str());
}

// ------------------------------------------------------ rf-reconstruct ----

struct RfReconstructOpts {
    std::string spectrum_path;
    std::string closed_form;
    std::uint64_t qmax = 8;
    std::uint64_t nmax = 100;
    CommonOpts common;
};

void run_rf_reconstruct(const RfReconstructOpts& o) {
    rfkit::rf::RFSpectrum spec;
    if (!o.spectrum_path.empty()) {
        spec = rfkit::rf::read_spectrum_csv(o.spectrum_path);
    }
    const std::uint64_t qmax = o.spectrum_path.empty() ? o.qmax : spec.qmax;
    const auto table = rfkit::arith::build_table(
        std::max<std::uint64_t>({qmax, o.nmax, 2}));
    if (o.spectrum_path.empty()) {
        spec = rfkit::rf::closed_form_spectrum(
            rfkit::rf::builtin_from_name(o.closed_form),
            static_cast<std::uint32_t>(qmax), table);
    }

    const ConfigEcho echo{
        {"spectrum", o.spectrum_path.empty() ? "closed-form:" + o.closed_form
                                             : o.spectrum_path},
        {"qmax", std::to_string(qmax)},
        {"nmax", std::to_string(o.nmax)},
        {"format", o.common.format}};

    std::ostringstream out;
    if (o.common.format == "csv") {
        rfkit::io::write_config_comments(out, "rf-reconstruct", echo);
        out << "n,value\n";
        for (std::uint64_t n = 1; n <= o.nmax; ++n) {
            out << n << ',' << fmt_double(rfkit::rf::reconstruct(spec, n, table))
                << '\n';
        }
    } else {
        ordered_json j = config_json("rf-reconstruct", echo);
        std::vector<double> values;
        for (std::uint64_t n = 1; n <= o.nmax; ++n) {
            values.push_back(rfkit::rf::reconstruct(spec, n, table));
        }
        j["values"] = values;
        out << j.dump(2) << '\n';
    }
    emit(o.common.output, out.str());
}

// ---------------------------------------------------------- zeta-sample ----

struct ZetaSampleOpts {
    double s = 2.0;
    std::uint64_t count = 100'000;
    std::uint64_t seed = 1;
    std::uint64_t hist_max = 20;
    std::uint64_t truncation = 1'000'000;
    CommonOpts common;
};

void run_zeta_sample(const ZetaSampleOpts& o) {
    const rfkit::zeta::ZetaParams params(o.s, o.truncation);
    const auto draws = rfkit::zeta::sample(params, o.seed, o.count);

    std::vector<std::uint64_t> counts(o.hist_max + 1, 0); // [hist_max] = tail
    for (std::uint64_t d : draws) {
        ++counts[d <= o.hist_max ? d - 1 : o.hist_max];
    }

    const auto zeta_hat = rfkit::zeta::zeta_value(o.s, o.truncation);
    std::vector<double> expected(o.hist_max + 1, 0.0);
    double tail_p = 1.0;
    for (std::uint64_t n = 1; n <= o.hist_max; ++n) {
        const double p = std::pow(static_cast<double>(n), -o.s) / zeta_hat.value;
        expected[n - 1] = static_cast<double>(o.count) * p;
        tail_p -= p;
    }
    expected[o.hist_max] = static_cast<double>(o.count) * tail_p;

    const ConfigEcho echo{{"s", fmt_double(o.s)},
                          {"count", std::to_string(o.count)},
                          {"seed", std::to_string(o.seed)},
                          {"hist_max", std::to_string(o.hist_max)},
                          {"truncation", std::to_string(o.truncation)},
                          {"format", o.common.format}};

    std::ostringstream out;
    if (o.common.format == "csv") {
        rfkit::io::write_config_comments(out, "zeta-sample", echo);
        out << "n,count,expected\n";
        for (std::uint64_t n = 1; n <= o.hist_max; ++n) {
            out << n << ',' << counts[n - 1] << ',' << fmt_double(expected[n - 1])
                << '\n';
        }
        out << "tail," << counts[o.hist_max] << ',' << fmt_double(expected[o.hist_max])
            << '\n';
    } else {
        ordered_json j = config_json("zeta-sample", echo);
        ordered_json rows = ordered_json::array();
        for (std::uint64_t n = 1; n <= o.hist_max; ++n) {
            rows.push_back({{"n", n},
                            {"count", counts[n - 1]},
                            {"expected", expected[n - 1]}});
        }
        rows.push_back({{"n", "tail"},
                        {"count", counts[o.hist_max]},
                        {"expected", expected[o.hist_max]}});
        j["rows"] = rows;
        out << j.dump(2) << '\n';
    }
    emit(o.common.output, out.str());
}

// ------------------------------------------------------------ events ------

struct EventOpts {
    std::uint64_t multiples_of = 0;
    std::uint64_t residue = 0;
    std::uint64_t mod = 0;
    std::vector<std::uint64_t> set;
};

void add_event_options(CLI::App* cmd, EventOpts& e) {
    auto* mult = cmd->add_option("--multiples-of", e.multiples_of,
                                 "Event: multiples of m");
    auto* res = cmd->add_option("--residue", e.residue, "Event: residue a (with --mod)");
    auto* mod = cmd->add_option("--mod", e.mod, "Event: modulus m (with --residue)");
    auto* set = cmd->add_option("--set", e.set, "Event: explicit finite set")
                    ->delimiter(',');
    res->needs(mod);
    mod->needs(res);
    mult->excludes(res)->excludes(set);
    res->excludes(set);
}

rfkit::zeta::EventSpec make_event(const EventOpts& e) {
    if (e.multiples_of > 0) return rfkit::zeta::EventSpec::multiples_of(e.multiples_of);
    if (e.mod > 0) return rfkit::zeta::EventSpec::residue_class(e.residue, e.mod);
    if (!e.set.empty()) return rfkit::zeta::EventSpec::finite_set(e.set);
    throw std::invalid_argument(
        "no event given: use --multiples-of, --residue/--mod or --set");
}

// --------------------------------------------------------- zeta-measure ----

struct ZetaMeasureOpts {
    double s = 2.0;
    std::uint64_t truncation = 1'000'000;
    EventOpts event;
    CommonOpts common;
};

void run_zeta_measure(const ZetaMeasureOpts& o) {
    const rfkit::zeta::ZetaParams params(o.s, o.truncation);
    const auto event = make_event(o.event);
    const auto r = rfkit::zeta::measure(params, event);

    const ConfigEcho echo{{"event", event.describe()},
                          {"s", fmt_double(o.s)},
                          {"truncation", std::to_string(o.truncation)},
                          {"format", o.common.format}};

    std::ostringstream out;
    if (o.common.format == "csv") {
        rfkit::io::write_config_comments(out, "zeta-measure", echo);
        out << "value,tail_bound\n";
        out << fmt_double(r.value) << ',' << fmt_double(r.tail_bound) << '\n';
    } else {
        ordered_json j = config_json("zeta-measure", echo);
        j["value"] = r.value;
        j["tail_bound"] = r.tail_bound;
        out << j.dump(2) << '\n';
    }
    emit(o.common.output, out.str());
}

// ----------------------------------------------------------- zeta-limit ----

struct ZetaLimitOpts {
    std::vector<double> schedule{2.0, 1.5, 1.1, 1.01};
    std::uint64_t truncation = 1'000'000;
    std::uint64_t density_x = 1'000'000;
    EventOpts event;
    CommonOpts common;
};

void run_zeta_limit(const ZetaLimitOpts& o) {
    const auto event = make_event(o.event);
    const auto study = rfkit::zeta::density_limit_study(event, o.schedule,
                                                        o.truncation, o.density_x);

    std::string schedule_str;
    for (std::size_t i = 0; i < o.schedule.size(); ++i) {
        if (i) schedule_str += ',';
        schedule_str += fmt_double(o.schedule[i]);
    }
    const ConfigEcho echo{{"event", event.describe()},
                          {"schedule", schedule_str},
                          {"truncation", std::to_string(o.truncation)},
                          {"density_X", std::to_string(o.density_x)},
                          {"format", o.common.format}};

    std::ostringstream out;
    if (o.common.format == "csv") {
        rfkit::io::write_config_comments(out, "zeta-limit", echo);
        out << "# density=" << fmt_double(study.density_reference) << '\n';
        out << "s,value,tail_bound\n";
        for (const auto& row : study.rows) {
            out << fmt_double(row.s) << ',' << fmt_double(row.value) << ','
                << fmt_double(row.tail_bound) << '\n';
        }
    } else {
        ordered_json j = config_json("zeta-limit", echo);
        ordered_json rows = ordered_json::array();
        for (const auto& row : study.rows) {
            rows.push_back({{"s", row.s},
                            {"value", row.value},
                            {"tail_bound", row.tail_bound}});
        }
        j["rows"] = rows;
        j["density"] = study.density_reference;
        j["density_X"] = study.density_x;
        out << j.dump(2) << '\n';
    }
    emit(o.common.output, out.str());
}

// ----------------------------------------------------------- kernel-sim ----

struct KernelSimOpts {
    std::uint64_t r = 6;
    std::uint64_t s = 2;
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 1;
    bool exact = false;
    bool enumerate = false;
    bool simulate = false;
    CommonOpts common;
};

void run_kernel_sim(const KernelSimOpts& o) {
    // --exact is the default when no mode is requested explicitly.
    const bool want_exact = o.exact || (!o.enumerate && !o.simulate);
    const auto divisors = rfkit::kernels::divisors_of(o.r);

    std::vector<double> exact;
    if (want_exact || o.simulate) {
        for (std::uint64_t d : divisors) {
            exact.push_back(rfkit::kernels::prob_exact_finite(
                o.r, d, static_cast<std::uint32_t>(o.s)));
        }
    }

    rfkit::kernels::KernelDistribution enumerated;
    if (o.enumerate) {
        enumerated = rfkit::kernels::enumerate_exact(o.r,
                                                     static_cast<std::uint32_t>(o.s));
    }

    rfkit::kernels::KernelDistribution empirical;
    if (o.simulate) {
        rfkit::kernels::KernelSimConfig cfg;
        cfg.r = o.r;
        cfg.s = static_cast<std::uint32_t>(o.s);
        cfg.trials = o.trials;
        cfg.seed = o.seed;
        empirical = rfkit::kernels::simulate(cfg);
    }

    ConfigEcho echo{{"r", std::to_string(o.r)},
                    {"s", std::to_string(o.s)},
                    {"exact", want_exact ? "true" : "false"},
                    {"enumerate", o.enumerate ? "true" : "false"},
                    {"simulate", o.simulate ? "true" : "false"},
                    {"trials", std::to_string(o.trials)},
                    {"seed", std::to_string(o.seed)},
                    {"format", o.common.format}};

    std::ostringstream out;
    if (o.common.format == "csv") {
        rfkit::io::write_config_comments(out, "kernel-sim", echo);
        out << "divisor,exact,enumerated,empirical,stderr\n";
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            out << divisors[i] << ',';
            if (want_exact || o.simulate) out << fmt_double(exact[i]);
            out << ',';
            if (o.enumerate) out << fmt_double(enumerated.prob[i]);
            out << ',';
            if (o.simulate) {
                const double p = exact[i];
                const double sd =
                    std::sqrt(p * (1.0 - p) / static_cast<double>(o.trials));
                out << fmt_double(empirical.prob[i]) << ',' << fmt_double(sd);
            } else {
                out << ',';
            }
            out << '\n';
        }
    } else {
        ordered_json j = config_json("kernel-sim", echo);
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            ordered_json row;
            row["divisor"] = divisors[i];
            if (want_exact || o.simulate) row["exact"] = exact[i];
            if (o.enumerate) row["enumerated"] = enumerated.prob[i];
            if (o.simulate) {
                row["empirical"] = empirical.prob[i];
                const double p = exact[i];
                row["stderr"] =
                    std::sqrt(p * (1.0 - p) / static_cast<double>(o.trials));
            }
            rows.push_back(row);
        }
        j["rows"] = rows;
        out << j.dump(2) << '\n';
    }
    emit(o.common.output, out.str());
}

// ----------------------------------------------------------- wk-correlate --

struct WkOpts {
    std::string builtin;
    std::string input;
    std::string spectrum = "estimate"; // estimate | closed-form | <csv path>
    std::uint64_t qmax = 8;
    std::uint64_t x = 100'000;
    std::vector<std::uint64_t> shifts{0, 1, 2, 3, 4, 5, 6};
    CommonOpts common;
};

void run_wk_correlate(const WkOpts& o) {
    rfkit::rf::SequenceWindow seq;
    if (!o.input.empty()) {
        seq = rfkit::rf::read_sequence_csv(o.input);
    }
    const std::uint64_t x = o.input.empty() ? o.x : seq.x();
    const auto table = rfkit::arith::build_table(
        std::max<std::uint64_t>({o.qmax, o.input.empty() ? x : 0, 2}));
    if (o.input.empty()) {
        seq = rfkit::rf::builtin_sequence(rfkit::rf::builtin_from_name(o.builtin), x,
                                          table);
    }

    rfkit::rf::RFSpectrum spec;
    if (o.spectrum == "estimate") {
        spec = rfkit::rf::estimate_spectrum(seq, static_cast<std::uint32_t>(o.qmax),
                                            table);
    } else if (o.spectrum == "closed-form") {
        if (o.builtin.empty()) {
            throw std::invalid_argument(
                "--spectrum closed-form requires a builtin sequence (--seq)");
        }
        spec = rfkit::rf::closed_form_spectrum(rfkit::rf::builtin_from_name(o.builtin),
                                               static_cast<std::uint32_t>(o.qmax),
                                               table);
    } else {
        spec = rfkit::rf::read_spectrum_csv(o.spectrum);
    }

    const auto report = rfkit::wk::compare(seq, spec, o.shifts, table);

    std::string shifts_str;
    for (std::size_t i = 0; i < o.shifts.size(); ++i) {
        if (i) shifts_str += ',';
        shifts_str += std::to_string(o.shifts[i]);
    }
    ConfigEcho echo{{"sequence", seq.name},
                    {"spectrum", o.spectrum},
                    {"qmax", std::to_string(spec.qmax)},
                    {"X", std::to_string(x)},
                    {"shifts", shifts_str},
                    {"format", o.common.format}};
    if (report.exploratory) {
        echo.emplace_back("label", "exploratory");
    }

    std::ostringstream out;
    if (o.common.format == "csv") {
        rfkit::io::write_config_comments(out, "wk-correlate", echo);
        out << "h,empirical,predicted,abs_gap\n";
        for (std::size_t i = 0; i < report.shifts.size(); ++i) {
            out << report.shifts[i] << ',' << fmt_double(report.empirical[i]) << ','
                << fmt_double(report.predicted[i]) << ','
                << fmt_double(std::abs(report.empirical[i] - report.predicted[i]))
                << '\n';
        }
    } else {
        ordered_json j = config_json("wk-correlate", echo);
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < report.shifts.size(); ++i) {
            rows.push_back(
                {{"h", report.shifts[i]},
                 {"empirical", report.empirical[i]},
                 {"predicted", report.predicted[i]},
                 {"abs_gap", std::abs(report.empirical[i] - report.predicted[i])}});
        }
        j["rows"] = rows;
        out << j.dump(2) << '\n';
    }
    emit(o.common.output, out.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramanujan-Fourier analysis and zeta-measure experiments"};
    app.require_subcommand(1);

    CsumOpts csum;
    auto* csum_cmd = app.add_subcommand("csum", "Exact Ramanujan sum table c_q(n)");
    csum_cmd->add_option("--qmax", csum.qmax, "Largest modulus q")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    csum_cmd->add_option("--nmax", csum.nmax, "Largest argument n")
        ->capture_default_str();
    add_common(csum_cmd, csum.common);

    RfEstimateOpts rfe;
    auto* rfe_cmd = app.add_subcommand(
        "rf-estimate", "Estimate RF coefficients by Carmichael's formula");
    auto* rfe_seq = rfe_cmd->add_option("--seq", rfe.builtin,
                                        "Builtin sequence "
                                        "(sigma_over_n|phi_over_n|mangoldt_relative)");
    auto* rfe_in = rfe_cmd->add_option("--input", rfe.input,
                                       "CSV file with header n,value");
    rfe_seq->excludes(rfe_in);
    rfe_cmd->add_option("--qmax", rfe.qmax, "Number of coefficients")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    rfe_cmd->add_option("--X", rfe.x, "Window length for builtin sequences")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(rfe_cmd, rfe.common);

    RfReconstructOpts rfr;
    auto* rfr_cmd = app.add_subcommand("rf-reconstruct",
                                       "Evaluate a truncated RF series");
    auto* rfr_spec = rfr_cmd->add_option("--spectrum", rfr.spectrum_path,
                                         "Spectrum CSV (header q,a_q)");
    auto* rfr_cf = rfr_cmd->add_option("--closed-form", rfr.closed_form,
                                       "Closed-form spectrum of a builtin sequence");
    rfr_spec->excludes(rfr_cf);
    rfr_cmd->add_option("--qmax", rfr.qmax, "Truncation for --closed-form")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    rfr_cmd->add_option("--nmax", rfr.nmax, "Evaluate n = 1..nmax")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(rfr_cmd, rfr.common);

    ZetaSampleOpts zs;
    auto* zs_cmd = app.add_subcommand("zeta-sample",
                                      "Sample the zeta distribution, emit histogram");
    zs_cmd->add_option("--s", zs.s, "Exponent s > 1")->capture_default_str();
    zs_cmd->add_option("--count", zs.count, "Number of draws")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    zs_cmd->add_option("--seed", zs.seed, "RNG seed")->capture_default_str();
    zs_cmd->add_option("--hist-max", zs.hist_max, "Histogram cells 1..hist-max + tail")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    zs_cmd->add_option("--truncation", zs.truncation,
                       "Zeta truncation for expected counts")
        ->capture_default_str();
    add_common(zs_cmd, zs.common);

    ZetaMeasureOpts zm;
    auto* zm_cmd = app.add_subcommand("zeta-measure", "P_s of an event");
    zm_cmd->add_option("--s", zm.s, "Exponent s > 1")->capture_default_str();
    zm_cmd->add_option("--truncation", zm.truncation, "Series truncation")
        ->capture_default_str();
    add_event_options(zm_cmd, zm.event);
    add_common(zm_cmd, zm.common);

    ZetaLimitOpts zl;
    auto* zl_cmd = app.add_subcommand(
        "zeta-limit", "P_s(A) along a schedule of s values, against dens(A)");
    zl_cmd->add_option("--schedule", zl.schedule, "Descending s values (> 1)")
        ->delimiter(',')
        ->capture_default_str();
    zl_cmd->add_option("--truncation", zl.truncation, "Series truncation")
        ->capture_default_str();
    zl_cmd->add_option("--density-X", zl.density_x, "Window for the density reference")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_event_options(zl_cmd, zl.event);
    add_common(zl_cmd, zl.common);

    KernelSimOpts ks;
    auto* ks_cmd = app.add_subcommand(
        "kernel-sim", "Joint-kernel distribution over the divisor lattice");
    ks_cmd->add_option("--r", ks.r, "Cyclic group order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ks_cmd->add_option("--s", ks.s, "Characters per draw")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ks_cmd->add_option("--trials", ks.trials, "Monte Carlo trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ks_cmd->add_option("--seed", ks.seed, "RNG seed")->capture_default_str();
    ks_cmd->add_flag("--exact", ks.exact, "Exact distribution (default)");
    ks_cmd->add_flag("--enumerate", ks.enumerate, "Exhaustive enumeration oracle");
    ks_cmd->add_flag("--simulate", ks.simulate, "Monte Carlo estimate");
    add_common(ks_cmd, ks.common);

    WkOpts wk;
    auto* wk_cmd = app.add_subcommand(
        "wk-correlate", "Autocorrelation vs spectral prediction per shift");
    auto* wk_seq = wk_cmd->add_option("--seq", wk.builtin, "Builtin sequence");
    auto* wk_in = wk_cmd->add_option("--input", wk.input, "CSV sequence file");
    wk_seq->excludes(wk_in);
    wk_cmd->add_option("--spectrum", wk.spectrum,
                       "estimate | closed-form | path to spectrum CSV")
        ->capture_default_str();
    wk_cmd->add_option("--qmax", wk.qmax, "Spectrum truncation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    wk_cmd->add_option("--X", wk.x, "Window length for builtin sequences")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    wk_cmd->add_option("--shifts", wk.shifts, "Shifts h")
        ->delimiter(',')
        ->capture_default_str();
    add_common(wk_cmd, wk.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return kExitUsage;
    }

    try {
        if (csum_cmd->parsed()) run_csum(csum);
        if (rfe_cmd->parsed()) {
            if (rfe.builtin.empty() && rfe.input.empty()) {
                throw std::invalid_argument("rf-estimate needs --seq or --input");
            }
            run_rf_estimate(rfe);
        }
        if (rfr_cmd->parsed()) {
            if (rfr.spectrum_path.empty() && rfr.closed_form.empty()) {
                throw std::invalid_argument(
                    "rf-reconstruct needs --spectrum or --closed-form");
            }
            run_rf_reconstruct(rfr);
        }
        if (zs_cmd->parsed()) run_zeta_sample(zs);
        if (zm_cmd->parsed()) run_zeta_measure(zm);
        if (zl_cmd->parsed()) run_zeta_limit(zl);
        if (ks_cmd->parsed()) run_kernel_sim(ks);
        if (wk_cmd->parsed()) {
            if (wk.builtin.empty() && wk.input.empty()) {
                throw std::invalid_argument("wk-correlate needs --seq or --input");
            }
            run_wk_correlate(wk);
        }
    } catch (const rfkit::io_error& e) {
        std::cerr << "rfkit: I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const rfkit::resource_error& e) {
        std::cerr << "rfkit: resource guard: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rfkit: invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "rfkit: domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "rfkit: out of range: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "rfkit: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
