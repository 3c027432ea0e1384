#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "gbs/gpm.hpp"
#include "gbs/zmod.hpp"

namespace gbs {

/// Canonical key (i, j) of a maximally commutative set: i a proper divisor of
/// d with 0 <= j < d/i, or (0, 0) for the Z-line {(0, y)}.
struct McsIndex {
    Residue i = 0;
    Residue j = 0;

    auto operator<=>(const McsIndex &) const = default;
};

/// A maximally commutative set of generalized Pauli matrices. Always holds
/// exactly d coordinates, sorted lexicographically.
class Mcs {
   public:
    Mcs(RingContext ring, McsIndex index, std::vector<GpmCoord> elements);

    const RingContext &ring() const noexcept { return ring_; }
    McsIndex index() const noexcept { return index_; }
    const std::vector<GpmCoord> &elements() const noexcept { return elements_; }
    bool contains(GpmCoord c) const;

    bool operator==(const Mcs &other) const {
        return ring_ == other.ring_ && index_ == other.index_ && elements_ == other.elements_;
    }

   private:
    RingContext ring_;
    McsIndex index_;
    std::vector<GpmCoord> elements_;
};

/// C_{i,j} = {(i*k, k*j + (d/g)*l) : 0 <= k < d/g, 0 <= l < g}, g = gcd(i, d).
///
/// Accepts (0, 0) or any i != 0 with 0 <= j < d/gcd(i, d). When i is not a
/// divisor of d the set is still built from the formula, and the returned
/// index is the canonical one for the same set.
/// Throws Error(InvalidMcsIndex) otherwise.
Mcs build_mcs(Residue i, Residue j, const RingContext &ring);

/// All sigma(d) classes: (0, 0) first, then divisors i < d ascending, then j.
std::vector<Mcs> enumerate_mcs(const RingContext &ring);

/// Canonical index of an MCS containing c, following the gcd construction:
/// with g = gcd(c.m, d) = q*c.m + r*d, returns (g, q*c.n mod d/g). A
/// coordinate with c.m == 0 maps to (0, 0).
/// Throws Error(AmbiguousMembership) for c == (0, 0).
McsIndex containing_mcs(GpmCoord c, const RingContext &ring);

/// Brute-force O(d^4) check: pairwise commuting and no outside coordinate
/// commutes with every member. Does not consult build_mcs.
bool verify_maximal_commutative(std::span<const GpmCoord> candidate, const RingContext &ring);

/// Enumerated MCS family plus a dense membership table, for repeated
/// membership queries in the detection and experiment loops.
class McsCatalog {
   public:
    explicit McsCatalog(const RingContext &ring);

    const RingContext &ring() const noexcept { return ring_; }
    const std::vector<Mcs> &classes() const noexcept { return classes_; }
    std::size_t size() const noexcept { return classes_.size(); }

    bool contains(std::size_t mcs, GpmCoord c) const {
        return member_[mcs * cells_ + flat_index(c, ring_.d())] != 0;
    }
    /// Position of a canonical index in classes(); throws InvalidMcsIndex if absent.
    std::size_t position(McsIndex index) const;

   private:
    RingContext ring_;
    std::vector<Mcs> classes_;
    std::size_t cells_;
    std::vector<std::uint8_t> member_;
};

}  // namespace gbs
