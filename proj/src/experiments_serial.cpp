// Single-threaded reference drivers. The OpenMP drivers in
// experiments_omp.cpp must reproduce these tables exactly.

#include "gbs/error.hpp"
#include "gbs/experiments.hpp"

namespace gbs::experiments {

RateTable rate_comparison_serial(const RateGrid &grid) {
    RateTable table;
    for (auto d = grid.d_min; d <= grid.d_max; ++d) {
        const RingContext ring(d);
        const McsCatalog catalog(ring);
        std::vector<std::size_t> hits;
        for (auto n = grid.n_min; n <= grid.n_max; ++n) {
            if (n > d * d || (grid.require_n_le_d && n > d)) continue;
            const SampleConfig cfg{d, n, grid.trials, grid.seed};
            cfg.validate();
            RateRow row{d, n, grid.trials, grid.seed, 0, 0, 0};
            for (std::int64_t draw = 0; draw < cfg.trials; ++draw) {
                const auto diff = kernel::diff_coords(sample_gbs_set(cfg, static_cast<std::uint64_t>(draw)));
                const bool classical = kernel::classical_fires(diff, ring);
                kernel::mcs_hits(diff, catalog, hits);
                row.classical_hits += classical;
                row.mcs_hits += !hits.empty();
                row.dominance_violations += classical && hits.empty();
            }
            table.push_back(row);
        }
    }
    return table;
}

McsRateTable per_mcs_rates_serial(const SampleConfig &cfg, std::int64_t batches) {
    cfg.validate();
    if (batches < 1 || batches > cfg.trials) throw Error(ErrorCode::InvalidConfig, "batches must lie in [1, trials]");
    const RingContext ring(cfg.d);
    const McsCatalog catalog(ring);
    const auto classes = catalog.size();

    McsRateTable table;
    table.config = cfg;
    table.batches = batches;
    for (const auto &m : catalog.classes()) table.indices.push_back(m.index());
    table.detected.assign(static_cast<std::size_t>(batches), std::vector<std::int64_t>(classes, 0));
    table.unique = table.detected;
    table.batch_sizes.assign(static_cast<std::size_t>(batches), 0);

    std::vector<std::size_t> hits;
    for (std::int64_t draw = 0; draw < cfg.trials; ++draw) {
        const auto b = static_cast<std::size_t>(draw * batches / cfg.trials);
        const auto diff = kernel::diff_coords(sample_gbs_set(cfg, static_cast<std::uint64_t>(draw)));
        kernel::mcs_hits(diff, catalog, hits);
        ++table.batch_sizes[b];
        for (const auto k : hits) ++table.detected[b][k];
        if (hits.size() == 1) ++table.unique[b][hits.front()];
        if (hits.empty() && kernel::classical_fires(diff, ring)) ++table.dominance_violations;
    }
    return table;
}

DetectorRateTable per_single_detector_rates_serial(const SampleConfig &cfg) {
    cfg.validate();
    const RingContext ring(cfg.d);
    const McsCatalog catalog(ring);
    const auto cells = static_cast<std::size_t>(cfg.d * cfg.d);
    std::vector<std::size_t> owner(cells, 0);
    for (std::size_t k = 1; k < cells; ++k) {
        owner[k] = catalog.position(containing_mcs(from_flat_index(k, cfg.d), ring));
    }

    DetectorRateTable table;
    table.config = cfg;
    table.hits.assign(cells, 0);
    for (std::int64_t draw = 0; draw < cfg.trials; ++draw) {
        const auto diff = kernel::diff_coords(sample_gbs_set(cfg, static_cast<std::uint64_t>(draw)));
        for (std::size_t k = 1; k < cells; ++k) {
            const auto probe = from_flat_index(k, cfg.d);
            bool fires = true;
            for (const auto &e : diff) {
                if (commutes(probe, e, ring)) {
                    fires = false;
                    break;
                }
            }
            if (!fires) continue;
            ++table.hits[k];
            for (const auto &e : diff) {
                if (catalog.contains(owner[k], e)) {
                    ++table.weakness_violations;
                    break;
                }
            }
        }
    }
    return table;
}

}  // namespace gbs::experiments
