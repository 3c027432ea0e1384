// OpenMP drivers. Every draw uses its own RNG substream and all reductions
// are integer sums, so the output is independent of thread count and
// scheduling.

#include "gbs/error.hpp"
#include "gbs/experiments.hpp"

namespace gbs::experiments {

RateTable rate_comparison(const RateGrid &grid) {
    RateTable table;
    for (auto d = grid.d_min; d <= grid.d_max; ++d) {
        const RingContext ring(d);
        const McsCatalog catalog(ring);
        for (auto n = grid.n_min; n <= grid.n_max; ++n) {
            if (n > d * d || (grid.require_n_le_d && n > d)) continue;
            const SampleConfig cfg{d, n, grid.trials, grid.seed};
            cfg.validate();
            std::int64_t classical_hits = 0;
            std::int64_t mcs_hits = 0;
            std::int64_t violations = 0;
#pragma omp parallel reduction(+ : classical_hits, mcs_hits, violations)
            {
                std::vector<std::size_t> hits;
#pragma omp for schedule(static)
                for (std::int64_t draw = 0; draw < cfg.trials; ++draw) {
                    const auto diff = kernel::diff_coords(sample_gbs_set(cfg, static_cast<std::uint64_t>(draw)));
                    const bool classical = kernel::classical_fires(diff, ring);
                    kernel::mcs_hits(diff, catalog, hits);
                    classical_hits += classical;
                    mcs_hits += !hits.empty();
                    violations += classical && hits.empty();
                }
            }
            table.push_back({d, n, grid.trials, grid.seed, classical_hits, mcs_hits, violations});
        }
    }
    return table;
}

McsRateTable per_mcs_rates(const SampleConfig &cfg, std::int64_t batches) {
    cfg.validate();
    if (batches < 1 || batches > cfg.trials) throw Error(ErrorCode::InvalidConfig, "batches must lie in [1, trials]");
    const RingContext ring(cfg.d);
    const McsCatalog catalog(ring);
    const auto classes = catalog.size();
    const auto nb = static_cast<std::size_t>(batches);

    McsRateTable table;
    table.config = cfg;
    table.batches = batches;
    for (const auto &m : catalog.classes()) table.indices.push_back(m.index());
    table.detected.assign(nb, std::vector<std::int64_t>(classes, 0));
    table.unique = table.detected;
    table.batch_sizes.assign(nb, 0);

#pragma omp parallel
    {
        auto detected = table.detected;
        auto unique = table.unique;
        std::vector<std::int64_t> sizes(nb, 0);
        std::int64_t violations = 0;
        std::vector<std::size_t> hits;
#pragma omp for schedule(static)
        for (std::int64_t draw = 0; draw < cfg.trials; ++draw) {
            const auto b = static_cast<std::size_t>(draw * batches / cfg.trials);
            const auto diff = kernel::diff_coords(sample_gbs_set(cfg, static_cast<std::uint64_t>(draw)));
            kernel::mcs_hits(diff, catalog, hits);
            ++sizes[b];
            for (const auto k : hits) ++detected[b][k];
            if (hits.size() == 1) ++unique[b][hits.front()];
            if (hits.empty() && kernel::classical_fires(diff, ring)) ++violations;
        }
#pragma omp critical
        {
            for (std::size_t b = 0; b < nb; ++b) {
                table.batch_sizes[b] += sizes[b];
                for (std::size_t k = 0; k < classes; ++k) {
                    table.detected[b][k] += detected[b][k];
                    table.unique[b][k] += unique[b][k];
                }
            }
            table.dominance_violations += violations;
        }
    }
    return table;
}

DetectorRateTable per_single_detector_rates(const SampleConfig &cfg) {
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

#pragma omp parallel
    {
        std::vector<std::int64_t> hits(cells, 0);
        std::int64_t violations = 0;
#pragma omp for schedule(static)
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
                ++hits[k];
                for (const auto &e : diff) {
                    if (catalog.contains(owner[k], e)) {
                        ++violations;
                        break;
                    }
                }
            }
        }
#pragma omp critical
        {
            for (std::size_t k = 0; k < cells; ++k) table.hits[k] += hits[k];
            table.weakness_violations += violations;
        }
    }
    return table;
}

}  // namespace gbs::experiments
