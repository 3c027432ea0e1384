#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbs/gpm.hpp"
#include "gbs/mcs.hpp"

namespace gbs {

/// How a maximally commutative set C relates to the difference set.
enum class Branch {
    Disjoint,   // diff and C share no coordinate
    Contained,  // diff is a subset of C
};

const char *branch_name(Branch b);

struct McsHit {
    McsIndex index;
    Branch branch;

    bool operator==(const McsHit &) const = default;
};

/// The three classical sufficient conditions (discriminant set, commutative
/// difference set, composite dimension with unit coordinates).
struct ClassicalCriteria {
    /// First coordinate (lexicographic) of the discriminant set, if any.
    std::optional<GpmCoord> discriminant_witness;
    bool commutative_difference = false;
    bool unit_coordinate_cover = false;

    bool any() const { return discriminant_witness.has_value() || commutative_difference || unit_coordinate_cover; }
};

/// Fan's prime-dimension transform. An empty `alpha` means the set is
/// already F-type and needs no transform.
struct FanWitness {
    std::optional<Residue> alpha;

    bool no_transform() const { return !alpha.has_value(); }
};

struct DetectionReport {
    GbsSet input;
    DiffSet diff;
    std::optional<McsHit> mcs_hit;
    std::vector<McsHit> all_mcs_hits;
    ClassicalCriteria classical;
    std::optional<FanWitness> fan_hit;
    bool detected = false;
    std::vector<std::string> notes;
};

/// Eq.-level detector of a single GPM: all coordinates that do NOT commute with (s, t).
std::vector<GpmCoord> detector_set(Residue s, Residue t, const RingContext &ring);

/// Coordinates commuting with no element of diff.
/// Throws Error(EmptyDifference) for an empty diff.
std::vector<GpmCoord> discriminant_set(const DiffSet &diff);

/// Early-exit variant: first discriminant coordinate, if any.
std::optional<GpmCoord> first_discriminant(const DiffSet &diff);

ClassicalCriteria check_classical(const DiffSet &diff);
ClassicalCriteria check_classical(const GbsSet &s);

/// MCS whose members include X^p and Z^(d/p), p the smallest prime factor of
/// d. Disjoint from diff whenever the unit-coordinate condition holds.
McsIndex unit_cover_mcs(const RingContext &ring);

std::optional<McsHit> check_mcs_criterion(const DiffSet &diff, const McsCatalog &catalog);
std::optional<McsHit> check_mcs_criterion(const GbsSet &s);

/// Every firing MCS, in catalog order.
std::vector<McsHit> all_mcs_hits(const DiffSet &diff, const McsCatalog &catalog);
std::vector<McsHit> all_mcs_hits(const GbsSet &s);

std::optional<FanWitness> check_fan(const GbsSet &s);

DetectionReport full_report(const GbsSet &s);
DetectionReport full_report(const GbsSet &s, const McsCatalog &catalog);

}  // namespace gbs
