#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gbs/detect.hpp"
#include "gbs/gpm.hpp"
#include "gbs/mcs.hpp"

namespace gbs::experiments {

struct SampleConfig {
    std::int64_t d = 0;
    std::int64_t n = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;

    /// Throws Error(InvalidConfig) unless 2 <= n <= d^2 and trials >= 1.
    void validate() const;
    bool operator==(const SampleConfig &) const = default;
};

/// SplitMix64 as a UniformRandomBitGenerator. Each draw gets its own
/// generator keyed by (seed, d, n, draw index), so results do not depend on
/// which thread handles which draw.
class SplitMix64 {
   public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()();

   private:
    std::uint64_t state_;
};

std::uint64_t stream_key(std::uint64_t seed, std::int64_t d, std::int64_t n, std::uint64_t draw);

/// Uniform n-subset of Z_d x Z_d, sorted. Deterministic in (cfg.seed, d, n, draw).
GbsSet sample_gbs_set(const SampleConfig &cfg, std::uint64_t draw);

struct RateRow {
    std::int64_t d = 0;
    std::int64_t n = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::int64_t classical_hits = 0;  // any of the three classical conditions
    std::int64_t mcs_hits = 0;
    /// Instances where a classical condition fired but no MCS did.
    std::int64_t dominance_violations = 0;

    double rate_t31() const { return static_cast<double>(classical_hits) / static_cast<double>(trials); }
    double rate_t2() const { return static_cast<double>(mcs_hits) / static_cast<double>(trials); }
    bool operator==(const RateRow &) const = default;
};

using RateTable = std::vector<RateRow>;

struct RateGrid {
    std::int64_t d_min = 7;
    std::int64_t d_max = 20;
    std::int64_t n_min = 5;
    std::int64_t n_max = 11;
    std::int64_t trials = 10000;
    std::uint64_t seed = 0;
    /// Skip cells with n > d, matching curves that start at d >= n.
    bool require_n_le_d = false;
};

/// Cells with n > d^2 are always skipped.
RateTable rate_comparison(const RateGrid &grid);
RateTable rate_comparison_serial(const RateGrid &grid);

struct McsRateTable {
    SampleConfig config;
    std::int64_t batches = 1;
    std::vector<McsIndex> indices;
    /// counts[batch][mcs]
    std::vector<std::vector<std::int64_t>> detected;
    std::vector<std::vector<std::int64_t>> unique;
    std::vector<std::int64_t> batch_sizes;
    std::int64_t dominance_violations = 0;

    std::int64_t total_detected(std::size_t mcs) const;
    std::int64_t total_unique(std::size_t mcs) const;
    bool operator==(const McsRateTable &) const = default;
};

/// Batch b holds draws [b*trials/batches, (b+1)*trials/batches).
McsRateTable per_mcs_rates(const SampleConfig &cfg, std::int64_t batches = 1);
McsRateTable per_mcs_rates_serial(const SampleConfig &cfg, std::int64_t batches = 1);

struct DetectorRateTable {
    SampleConfig config;
    /// hits[s*d + t]: samples whose difference set lies inside De(X^s Z^t).
    std::vector<std::int64_t> hits;
    /// Instances where a single detector fired but its containing MCS did
    /// not see a disjoint difference set.
    std::int64_t weakness_violations = 0;

    double rate(Residue s, Residue t) const {
        return static_cast<double>(hits[static_cast<std::size_t>(s * config.d + t)]) /
               static_cast<double>(config.trials);
    }
    bool operator==(const DetectorRateTable &) const = default;
};

DetectorRateTable per_single_detector_rates(const SampleConfig &cfg);
DetectorRateTable per_single_detector_rates_serial(const SampleConfig &cfg);

/// Exact per-detector rates by enumerating every n-subset (small d only).
DetectorRateTable per_single_detector_rates_exhaustive(std::int64_t d, std::int64_t n);

// Per-instance kernels shared by the serial and parallel drivers.
namespace kernel {

/// Difference set as a deduplicated coordinate list (no phase, i < j).
std::vector<GpmCoord> diff_coords(const GbsSet &s);

bool classical_fires(const std::vector<GpmCoord> &diff, const RingContext &ring);

/// Catalog positions of all firing MCSs.
void mcs_hits(const std::vector<GpmCoord> &diff, const McsCatalog &catalog, std::vector<std::size_t> &out);

}  // namespace kernel

inline constexpr const char *kToolVersion = "gbs-mcs 1.0.0";

void write_rate_csv(std::ostream &out, const RateTable &table, const std::string &config_line);
void write_mcs_rate_csv(std::ostream &out, const McsRateTable &table, const std::string &config_line);
void write_detector_rate_csv(std::ostream &out, const DetectorRateTable &table, const std::string &config_line);

}  // namespace gbs::experiments
