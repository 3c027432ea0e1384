#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <random>

#include "gbs/error.hpp"
#include "gbs/experiments.hpp"

namespace gbs::experiments {

void SampleConfig::validate() const {
    const RingContext ring(d);
    if (n < 2 || n > d * d) {
        throw Error(ErrorCode::InvalidConfig,
                    "set size n must satisfy 2 <= n <= d^2, got n=" + std::to_string(n));
    }
    if (trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be >= 1");
}

SplitMix64::result_type SplitMix64::operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t stream_key(std::uint64_t seed, std::int64_t d, std::int64_t n, std::uint64_t draw) {
    SplitMix64 mix(seed);
    std::uint64_t key = mix();
    for (const auto word : {static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(n), draw}) {
        key = SplitMix64(key ^ word)();
    }
    return key;
}

GbsSet sample_gbs_set(const SampleConfig &cfg, std::uint64_t draw) {
    if (cfg.n < 1 || cfg.n > cfg.d * cfg.d) {
        throw Error(ErrorCode::InvalidConfig, "cannot draw " + std::to_string(cfg.n) +
                                                  " distinct coordinates from Z_d x Z_d with d=" +
                                                  std::to_string(cfg.d));
    }
    RingContext ring(cfg.d);
    SplitMix64 rng(stream_key(cfg.seed, cfg.d, cfg.n, draw));
    const std::int64_t cells = cfg.d * cfg.d;
    // Floyd's subset sampling.
    std::vector<std::int64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(cfg.n));
    for (std::int64_t j = cells - cfg.n; j < cells; ++j) {
        std::uniform_int_distribution<std::int64_t> pick(0, j);
        const auto t = pick(rng);
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
            chosen.push_back(t);
        } else {
            chosen.push_back(j);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    std::vector<GpmCoord> coords;
    coords.reserve(chosen.size());
    for (const auto idx : chosen) coords.push_back(from_flat_index(static_cast<std::size_t>(idx), cfg.d));
    return GbsSet(std::move(ring), std::move(coords));
}

std::int64_t McsRateTable::total_detected(std::size_t mcs) const {
    std::int64_t total = 0;
    for (const auto &row : detected) total += row[mcs];
    return total;
}

std::int64_t McsRateTable::total_unique(std::size_t mcs) const {
    std::int64_t total = 0;
    for (const auto &row : unique) total += row[mcs];
    return total;
}

namespace kernel {

std::vector<GpmCoord> diff_coords(const GbsSet &s) {
    const auto &ring = s.ring();
    const auto d = ring.d();
    const auto &e = s.elements();
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(d * d), 0);
    std::vector<GpmCoord> out;
    out.reserve(e.size() * (e.size() - 1) / 2);
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const GpmCoord c{ring.sub(e[j].m, e[i].m), ring.sub(e[j].n, e[i].n)};
            auto &flag = seen[flat_index(c, d)];
            if (!flag) {
                flag = 1;
                out.push_back(c);
            }
        }
    }
    return out;
}

bool classical_fires(const std::vector<GpmCoord> &diff, const RingContext &ring) {
    if (!ring.is_prime() && std::all_of(diff.begin(), diff.end(), [&](const GpmCoord &c) {
            return is_unit(c.m, ring) || is_unit(c.n, ring);
        })) {
        return true;
    }
    bool commutative = true;
    for (std::size_t a = 0; a < diff.size() && commutative; ++a) {
        for (std::size_t b = a + 1; b < diff.size(); ++b) {
            if (!commutes(diff[a], diff[b], ring)) {
                commutative = false;
                break;
            }
        }
    }
    if (commutative) return true;
    const auto d = ring.d();
    for (Residue x = 0; x < d; ++x) {
        for (Residue y = (x == 0 ? 1 : 0); y < d; ++y) {
            const GpmCoord c{x, y};
            if (std::none_of(diff.begin(), diff.end(), [&](const GpmCoord &e) { return commutes(c, e, ring); })) {
                return true;
            }
        }
    }
    return false;
}

void mcs_hits(const std::vector<GpmCoord> &diff, const McsCatalog &catalog, std::vector<std::size_t> &out) {
    out.clear();
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        std::size_t inside = 0;
        for (const auto &e : diff) inside += catalog.contains(k, e) ? 1 : 0;
        if (inside == 0 || inside == diff.size()) out.push_back(k);
    }
}

}  // namespace kernel

DetectorRateTable per_single_detector_rates_exhaustive(std::int64_t d, std::int64_t n) {
    const RingContext ring(d);
    const auto cells = d * d;
    if (n < 2 || n > cells) throw Error(ErrorCode::InvalidConfig, "invalid n for exhaustive sweep");
    DetectorRateTable table;
    table.config = {d, n, 0, 0};
    table.hits.assign(static_cast<std::size_t>(cells), 0);
    // Walk all n-subsets of [0, cells) via a selection mask.
    std::vector<bool> mask(static_cast<std::size_t>(cells), false);
    std::fill(mask.begin(), mask.begin() + n, true);
    do {
        std::vector<GpmCoord> coords;
        for (std::int64_t k = 0; k < cells; ++k) {
            if (mask[static_cast<std::size_t>(k)]) coords.push_back(from_flat_index(static_cast<std::size_t>(k), d));
        }
        const auto diff = kernel::diff_coords(GbsSet(ring, std::move(coords)));
        ++table.config.trials;
        for (std::int64_t k = 0; k < cells; ++k) {
            const auto probe = from_flat_index(static_cast<std::size_t>(k), d);
            if (std::none_of(diff.begin(), diff.end(), [&](const GpmCoord &e) { return commutes(probe, e, ring); })) {
                ++table.hits[static_cast<std::size_t>(k)];
            }
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return table;
}

namespace {

std::string format_rate(std::int64_t count, std::int64_t total) {
    const double rate = static_cast<double>(count) / static_cast<double>(total);
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, rate);
    return std::string(buf, res.ptr);
}

void write_header(std::ostream &out, const std::string &config_line) {
    out << "# " << kToolVersion << ' ' << config_line << '\n';
}

}  // namespace

void write_rate_csv(std::ostream &out, const RateTable &table, const std::string &config_line) {
    write_header(out, config_line);
    out << "d,n,trials,seed,rate_t31,rate_t2\n";
    for (const auto &row : table) {
        out << row.d << ',' << row.n << ',' << row.trials << ',' << row.seed << ','
            << format_rate(row.classical_hits, row.trials) << ',' << format_rate(row.mcs_hits, row.trials) << '\n';
    }
}

void write_mcs_rate_csv(std::ostream &out, const McsRateTable &table, const std::string &config_line) {
    write_header(out, config_line);
    out << "d,n,batch,i,j,samples,detected,unique,rate,unique_rate\n";
    const auto &cfg = table.config;
    for (std::size_t b = 0; b < table.detected.size(); ++b) {
        for (std::size_t k = 0; k < table.indices.size(); ++k) {
            const auto samples = table.batch_sizes[b];
            out << cfg.d << ',' << cfg.n << ',' << b << ',' << table.indices[k].i << ',' << table.indices[k].j
                << ',' << samples << ',' << table.detected[b][k] << ',' << table.unique[b][k] << ','
                << format_rate(table.detected[b][k], samples) << ',' << format_rate(table.unique[b][k], samples)
                << '\n';
        }
    }
    for (std::size_t k = 0; k < table.indices.size(); ++k) {
        const auto det = table.total_detected(k);
        const auto uni = table.total_unique(k);
        out << cfg.d << ',' << cfg.n << ",all," << table.indices[k].i << ',' << table.indices[k].j << ','
            << cfg.trials << ',' << det << ',' << uni << ',' << format_rate(det, cfg.trials) << ','
            << format_rate(uni, cfg.trials) << '\n';
    }
}

void write_detector_rate_csv(std::ostream &out, const DetectorRateTable &table, const std::string &config_line) {
    write_header(out, config_line);
    out << "d,n,s,t,trials,hits,rate\n";
    const auto &cfg = table.config;
    for (Residue s = 0; s < cfg.d; ++s) {
        for (Residue t = 0; t < cfg.d; ++t) {
            const auto hits = table.hits[static_cast<std::size_t>(s * cfg.d + t)];
            out << cfg.d << ',' << cfg.n << ',' << s << ',' << t << ',' << cfg.trials << ',' << hits << ','
                << format_rate(hits, cfg.trials) << '\n';
        }
    }
}

}  // namespace gbs::experiments
