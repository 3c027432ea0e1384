#include "gbs/detect.hpp"

#include <algorithm>

#include "gbs/error.hpp"

namespace gbs {

namespace {

void require_nonempty(const DiffSet &diff) {
    if (diff.empty()) throw Error(ErrorCode::EmptyDifference, "difference set is empty");
}

bool commutes_with_none(GpmCoord c, const DiffSet &diff) {
    const auto &ring = diff.ring();
    return std::none_of(diff.elements().begin(), diff.elements().end(),
                        [&](const GpmCoord &e) { return commutes(c, e, ring); });
}

std::optional<McsHit> classify(const DiffSet &diff, const McsCatalog &catalog, std::size_t k) {
    std::size_t inside = 0;
    for (const auto &e : diff.elements()) inside += catalog.contains(k, e) ? 1 : 0;
    const auto index = catalog.classes()[k].index();
    if (inside == 0) return McsHit{index, Branch::Disjoint};
    if (inside == diff.size()) return McsHit{index, Branch::Contained};
    return std::nullopt;
}

}  // namespace

const char *branch_name(Branch b) { return b == Branch::Disjoint ? "disjoint" : "contained"; }

std::vector<GpmCoord> detector_set(Residue s, Residue t, const RingContext &ring) {
    const auto d = ring.d();
    const GpmCoord probe{s, t};
    std::vector<GpmCoord> out;
    for (Residue x = 0; x < d; ++x) {
        for (Residue y = 0; y < d; ++y) {
            if (!commutes(probe, {x, y}, ring)) out.push_back({x, y});
        }
    }
    return out;
}

std::vector<GpmCoord> discriminant_set(const DiffSet &diff) {
    require_nonempty(diff);
    const auto d = diff.ring().d();
    std::vector<GpmCoord> out;
    for (Residue x = 0; x < d; ++x) {
        for (Residue y = 0; y < d; ++y) {
            if (commutes_with_none({x, y}, diff)) out.push_back({x, y});
        }
    }
    return out;
}

std::optional<GpmCoord> first_discriminant(const DiffSet &diff) {
    require_nonempty(diff);
    const auto d = diff.ring().d();
    // (0, 0) commutes with everything, so start at (0, 1).
    for (Residue x = 0; x < d; ++x) {
        for (Residue y = (x == 0 ? 1 : 0); y < d; ++y) {
            if (commutes_with_none({x, y}, diff)) return GpmCoord{x, y};
        }
    }
    return std::nullopt;
}

ClassicalCriteria check_classical(const DiffSet &diff) {
    require_nonempty(diff);
    const auto &ring = diff.ring();
    const auto &e = diff.elements();
    ClassicalCriteria out;
    out.discriminant_witness = first_discriminant(diff);

    out.commutative_difference = true;
    for (std::size_t a = 0; a < e.size() && out.commutative_difference; ++a) {
        for (std::size_t b = a + 1; b < e.size(); ++b) {
            if (!commutes(e[a], e[b], ring)) {
                out.commutative_difference = false;
                break;
            }
        }
    }

    out.unit_coordinate_cover =
        !ring.is_prime() && std::all_of(e.begin(), e.end(), [&](const GpmCoord &c) {
            return is_unit(c.m, ring) || is_unit(c.n, ring);
        });
    return out;
}

ClassicalCriteria check_classical(const GbsSet &s) { return check_classical(difference_set(s)); }

McsIndex unit_cover_mcs(const RingContext &ring) {
    // C_{p,0} = {(p*k, (d/p)*l)} holds (p, 0) and (0, d/p).
    return {ring.smallest_prime_factor(), 0};
}

std::optional<McsHit> check_mcs_criterion(const DiffSet &diff, const McsCatalog &catalog) {
    require_nonempty(diff);
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        if (auto hit = classify(diff, catalog, k)) return hit;
    }
    return std::nullopt;
}

std::optional<McsHit> check_mcs_criterion(const GbsSet &s) {
    return check_mcs_criterion(difference_set(s), McsCatalog(s.ring()));
}

std::vector<McsHit> all_mcs_hits(const DiffSet &diff, const McsCatalog &catalog) {
    require_nonempty(diff);
    std::vector<McsHit> out;
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        if (auto hit = classify(diff, catalog, k)) out.push_back(*hit);
    }
    return out;
}

std::vector<McsHit> all_mcs_hits(const GbsSet &s) {
    return all_mcs_hits(difference_set(s), McsCatalog(s.ring()));
}

std::optional<FanWitness> check_fan(const GbsSet &s) {
    if (is_f_type(s)) return FanWitness{};
    const auto &ring = s.ring();
    const auto d = ring.d();
    std::vector<bool> seen(static_cast<std::size_t>(d));
    for (Residue alpha = 0; alpha < d; ++alpha) {
        std::fill(seen.begin(), seen.end(), false);
        bool distinct = true;
        for (const auto &c : s.elements()) {
            const auto m = static_cast<std::size_t>(h_alpha_map(alpha, c, ring).m);
            if (seen[m]) {
                distinct = false;
                break;
            }
            seen[m] = true;
        }
        if (distinct) return FanWitness{alpha};
    }
    return std::nullopt;
}

DetectionReport full_report(const GbsSet &s, const McsCatalog &catalog) {
    if (!(catalog.ring() == s.ring())) {
        throw Error(ErrorCode::InvalidDimension, "catalog dimension does not match the set");
    }
    DetectionReport report{s, difference_set(s), std::nullopt, {}, {}, std::nullopt, false, {}};
    report.all_mcs_hits = all_mcs_hits(report.diff, catalog);
    if (!report.all_mcs_hits.empty()) report.mcs_hit = report.all_mcs_hits.front();
    report.classical = check_classical(report.diff);
    if (auto fan = check_fan(s)) {
        if (fan->no_transform() || s.ring().is_prime()) {
            report.fan_hit = fan;
        } else {
            report.notes.push_back("coordinate map alpha=" + std::to_string(*fan->alpha) +
                                   " yields an F-type image, but H_alpha is only a valid local "
                                   "transform in prime dimension; not counted");
        }
    }
    report.detected = report.mcs_hit.has_value() || report.classical.any() || report.fan_hit.has_value();

    const auto l = static_cast<std::int64_t>(s.size());
    if (l < 4 || l > s.ring().d()) {
        report.notes.push_back("classical criteria are stated for 4 <= l <= d; evaluated here with l=" +
                               std::to_string(l));
    }
    if (!report.detected && l > s.ring().d()) {
        report.notes.push_back("more than d maximally entangled states are never locally distinguishable");
    }
    return report;
}

DetectionReport full_report(const GbsSet &s) { return full_report(s, McsCatalog(s.ring())); }

}  // namespace gbs
