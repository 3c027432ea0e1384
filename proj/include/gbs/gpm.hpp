#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gbs/zmod.hpp"

namespace gbs {

/// Exponent pair (m, n) naming the generalized Pauli matrix X^m Z^n and the
/// generalized Bell state obtained by applying it to one half of |Psi_00>.
struct GpmCoord {
    Residue m = 0;
    Residue n = 0;

    auto operator<=>(const GpmCoord &) const = default;
};

/// Flat index m*d + n, used for membership bitmaps.
inline std::size_t flat_index(GpmCoord c, std::int64_t d) {
    return static_cast<std::size_t>(c.m * d + c.n);
}
inline GpmCoord from_flat_index(std::size_t idx, std::int64_t d) {
    const auto i = static_cast<std::int64_t>(idx);
    return {i / d, i % d};
}

/// Validated, duplicate-free, insertion-ordered set of GBS coordinates.
class GbsSet {
   public:
    /// Throws Error(InvalidCoordinate) for out-of-range entries,
    /// Error(DuplicateCoordinate) for repeats and Error(InvalidConfig) when
    /// empty or larger than d^2.
    GbsSet(RingContext ring, std::vector<GpmCoord> elements);

    const RingContext &ring() const noexcept { return ring_; }
    const std::vector<GpmCoord> &elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

    /// Set comparison; insertion order is ignored.
    bool operator==(const GbsSet &other) const;

   private:
    RingContext ring_;
    std::vector<GpmCoord> elements_;
};

/// Deduplicated coordinate differences (m_j - m_i, n_j - n_i), i < j, with
/// phases dropped. Stored sorted.
class DiffSet {
   public:
    DiffSet(RingContext ring, std::vector<GpmCoord> elements);

    const RingContext &ring() const noexcept { return ring_; }
    const std::vector<GpmCoord> &elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(GpmCoord c) const;

   private:
    RingContext ring_;
    std::vector<GpmCoord> elements_;
};

/// (b.m * a.n - a.m * b.n) mod d; A B = omega^e B A for A = X^{a.m}Z^{a.n}.
Residue commutator_exponent(GpmCoord a, GpmCoord b, const RingContext &ring);

inline bool commutes(GpmCoord a, GpmCoord b, const RingContext &ring) {
    return commutator_exponent(a, b, ring) == 0;
}

/// All (x, y) with n*x - m*y == 0 mod d, in lexicographic order.
std::vector<GpmCoord> congruence_solutions(Residue m, Residue n, const RingContext &ring);

/// Throws Error(EmptyDifference) when the set has fewer than two elements.
DiffSet difference_set(const GbsSet &s);

/// Coordinate action of Fan's local unitary H_alpha: (m, n) -> (alpha*m + n, -m).
GpmCoord h_alpha_map(Residue alpha, GpmCoord c, const RingContext &ring);

/// True iff the X-exponents of all elements are pairwise distinct.
bool is_f_type(const GbsSet &s);

bool valid_coord(GpmCoord c, const RingContext &ring);

std::string to_string(GpmCoord c);

}  // namespace gbs
