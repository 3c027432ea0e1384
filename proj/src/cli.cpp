#include "gbs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "gbs/detect.hpp"
#include "gbs/error.hpp"
#include "gbs/experiments.hpp"
#include "gbs/io.hpp"
#include "gbs/mcs.hpp"
#include "gbs/oracle.hpp"

namespace gbs::cli {

namespace {

struct SetInput {
    std::int64_t d = 0;
    std::string set_text;
    std::string set_file;
    bool json = false;
};

GbsSet load_set(const SetInput &in, const RingContext &ring) {
    if (!in.set_file.empty()) {
        std::ifstream file(in.set_file);
        if (!file) throw Error(ErrorCode::Parse, "cannot open set file '" + in.set_file + "'");
        std::stringstream buf;
        buf << file.rdbuf();
        return io::parse_set_json(buf.str(), ring);
    }
    return io::parse_set(in.set_text, ring);
}

/// Writes to --out when given, else to the data stream.
void emit(const std::string &path, std::ostream &out, const std::function<void(std::ostream &)> &writer) {
    if (path.empty()) {
        writer(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidConfig, "cannot write '" + path + "'");
    writer(file);
}

void add_set_options(CLI::App *cmd, SetInput &in) {
    cmd->add_option("--d", in.d, "local dimension d >= 2")->required();
    auto *set = cmd->add_option("--set", in.set_text, "coordinates as \"m,n;m,n;...\"");
    auto *file = cmd->add_option("--set-file", in.set_file, "JSON file holding [[m,n],...]");
    set->excludes(file);
    file->excludes(set);
    cmd->add_flag("--json", in.json, "emit the report as JSON");
}

int run_enumerate(std::int64_t d, std::ostream &out) {
    const RingContext ring(d);
    for (const auto &mcs : enumerate_mcs(ring)) out << io::to_json(mcs).dump() << '\n';
    return kOk;
}

int run_check(const SetInput &in, std::ostream &out) {
    const RingContext ring(in.d);
    const auto report = full_report(load_set(in, ring));
    if (in.json) {
        out << io::to_json(report).dump() << '\n';
    } else {
        io::print_report(out, report);
    }
    return report.detected ? kOk : kUndetected;
}

int run_verify(const SetInput &in, std::int64_t max_oracle_d, std::ostream &out, std::ostream &err) {
    const RingContext ring(in.d);
    const auto set = load_set(in, ring);
    const auto report = full_report(set);
    oracle::Limits limits;
    limits.max_dimension = max_oracle_d;

    io::Json verification;
    bool failed = false;
    const auto disjoint = std::find_if(report.all_mcs_hits.begin(), report.all_mcs_hits.end(),
                                       [](const McsHit &h) { return h.branch == Branch::Disjoint; });
    if (disjoint != report.all_mcs_hits.end()) {
        const auto mcs = build_mcs(disjoint->index.i, disjoint->index.j, ring);
        const double overlap = oracle::verify_one_way_criterion(set, mcs, limits);
        failed = !(overlap <= oracle::kEigenTolerance);
        verification["mcs"] = io::Json::array({mcs.index().i, mcs.index().j});
        verification["max_overlap"] = overlap;
        verification["tolerance"] = oracle::kEigenTolerance;
        verification["status"] = failed ? "fail" : "pass";
    } else if (report.mcs_hit) {
        verification["status"] = "contained-branch-not-checked";
    } else {
        verification["status"] = "no-mcs-hit";
    }

    if (in.json) {
        auto j = io::to_json(report);
        j["verification"] = verification;
        out << j.dump() << '\n';
    } else {
        io::print_report(out, report);
        const auto status = verification["status"].get<std::string>();
        if (verification.contains("max_overlap")) {
            out << "one-way criterion on C(" << verification["mcs"][0] << ',' << verification["mcs"][1]
                << "): max overlap " << verification["max_overlap"].get<double>() << " vs tolerance "
                << oracle::kEigenTolerance << ": " << (failed ? "FAIL" : "PASS") << '\n';
        } else {
            out << "one-way criterion: " << status << '\n';
        }
    }
    if (failed) {
        err << "error: numerical one-way criterion failed\n";
        return kVerificationFailure;
    }
    return report.detected ? kOk : kUndetected;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Local distinguishability of generalized Bell states via maximally commutative sets",
                 "gbs-mcs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", experiments::kToolVersion);

    std::int64_t enum_d = 0;
    auto *enumerate = app.add_subcommand("enumerate-mcs", "print every MCS of dimension d as JSON lines");
    enumerate->add_option("--d", enum_d, "local dimension d >= 2")->required();

    SetInput check_in;
    auto *check = app.add_subcommand("check-set", "run every detection criterion on a GBS set");
    add_set_options(check, check_in);

    SetInput verify_in;
    std::int64_t max_oracle_d = oracle::kDefaultMaxDimension;
    auto *verify = app.add_subcommand("verify", "check-set plus a numerical check of the one-way criterion");
    add_set_options(verify, verify_in);
    verify->add_option("--max-oracle-d", max_oracle_d, "largest d the matrix oracle accepts");

    experiments::RateGrid grid;
    std::string rates_out;
    bool rates_json = false;
    auto *rates = app.add_subcommand("sample-rates", "classical vs MCS detection rates over a (d, n) grid");
    rates->add_option("--d-min", grid.d_min)->capture_default_str();
    rates->add_option("--d-max", grid.d_max)->capture_default_str();
    rates->add_option("--n-min", grid.n_min)->capture_default_str();
    rates->add_option("--n-max", grid.n_max)->capture_default_str();
    rates->add_option("--trials", grid.trials)->capture_default_str();
    rates->add_option("--seed", grid.seed)->capture_default_str();
    rates->add_option("--out", rates_out, "CSV path (default: stdout)");
    rates->add_flag("--n-le-d", grid.require_n_le_d, "skip cells with n > d");
    rates->add_flag("--json", rates_json, "accepted for uniformity; output is CSV");

    experiments::SampleConfig mcs_cfg{20, 10, 10000, 0};
    std::int64_t batches = 10;
    std::string mcs_out;
    bool mcs_json = false;
    auto *per_mcs = app.add_subcommand("per-mcs-rates", "per-MCS detection and unique-detection rates");
    per_mcs->add_option("--d", mcs_cfg.d)->capture_default_str();
    per_mcs->add_option("--n", mcs_cfg.n)->capture_default_str();
    per_mcs->add_option("--trials", mcs_cfg.trials)->capture_default_str();
    per_mcs->add_option("--seed", mcs_cfg.seed)->capture_default_str();
    per_mcs->add_option("--batches", batches, "split the draws into equal batches")->capture_default_str();
    per_mcs->add_option("--out", mcs_out, "CSV path (default: stdout)");
    per_mcs->add_flag("--json", mcs_json, "accepted for uniformity; output is CSV");

    experiments::SampleConfig det_cfg{20, 10, 10000, 0};
    std::string det_out;
    bool det_json = false;
    auto *per_det = app.add_subcommand("per-detector-rates", "per-coordinate single-detector rates");
    per_det->add_option("--d", det_cfg.d)->capture_default_str();
    per_det->add_option("--n", det_cfg.n)->capture_default_str();
    per_det->add_option("--trials", det_cfg.trials)->capture_default_str();
    per_det->add_option("--seed", det_cfg.seed)->capture_default_str();
    per_det->add_option("--out", det_out, "CSV path (default: stdout)");
    per_det->add_flag("--json", det_json, "accepted for uniformity; output is CSV");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion &) {
        out << experiments::kToolVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*enumerate) return run_enumerate(enum_d, out);
        if (*check) {
            if (check_in.set_text.empty() && check_in.set_file.empty()) {
                throw Error(ErrorCode::Parse, "one of --set or --set-file is required");
            }
            return run_check(check_in, out);
        }
        if (*verify) {
            if (verify_in.set_text.empty() && verify_in.set_file.empty()) {
                throw Error(ErrorCode::Parse, "one of --set or --set-file is required");
            }
            return run_verify(verify_in, max_oracle_d, out, err);
        }
        if (*rates) {
            (void)make_ring(grid.d_min);
            if (grid.d_max < grid.d_min || grid.n_max < grid.n_min) {
                throw Error(ErrorCode::InvalidConfig, "empty (d, n) range");
            }
            const auto table = experiments::rate_comparison(grid);
            std::ostringstream config;
            config << "sample-rates d_min=" << grid.d_min << " d_max=" << grid.d_max << " n_min=" << grid.n_min
                   << " n_max=" << grid.n_max << " trials=" << grid.trials << " seed=" << grid.seed
                   << " n_le_d=" << bool_text(grid.require_n_le_d);
            emit(rates_out, out, [&](std::ostream &os) { experiments::write_rate_csv(os, table, config.str()); });
            for (const auto &row : table) {
                if (row.dominance_violations > 0) {
                    err << "warning: d=" << row.d << " n=" << row.n << ": " << row.dominance_violations
                        << " instances detected by classical criteria but by no MCS\n";
                }
            }
            return kOk;
        }
        if (*per_mcs) {
            (void)make_ring(mcs_cfg.d);
            const auto table = experiments::per_mcs_rates(mcs_cfg, batches);
            std::ostringstream config;
            config << "per-mcs-rates d=" << mcs_cfg.d << " n=" << mcs_cfg.n << " trials=" << mcs_cfg.trials
                   << " seed=" << mcs_cfg.seed << " batches=" << batches;
            emit(mcs_out, out, [&](std::ostream &os) { experiments::write_mcs_rate_csv(os, table, config.str()); });
            return kOk;
        }
        if (*per_det) {
            (void)make_ring(det_cfg.d);
            const auto table = experiments::per_single_detector_rates(det_cfg);
            std::ostringstream config;
            config << "per-detector-rates d=" << det_cfg.d << " n=" << det_cfg.n << " trials=" << det_cfg.trials
                   << " seed=" << det_cfg.seed;
            emit(det_out, out,
                 [&](std::ostream &os) { experiments::write_detector_rate_csv(os, table, config.str()); });
            return kOk;
        }
    } catch (const Error &e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
        return e.code() == ErrorCode::Degeneracy ? kVerificationFailure : kUsageError;
    }
    return kUsageError;
}

}  // namespace gbs::cli
