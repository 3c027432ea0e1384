#include "gbs/gpm.hpp"

#include <algorithm>
#include <set>

#include "gbs/error.hpp"

namespace gbs {

bool valid_coord(GpmCoord c, const RingContext &ring) {
    return c.m >= 0 && c.m < ring.d() && c.n >= 0 && c.n < ring.d();
}

std::string to_string(GpmCoord c) {
    return "(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
}

GbsSet::GbsSet(RingContext ring, std::vector<GpmCoord> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {
    const auto d = ring_.d();
    if (elements_.empty()) throw Error(ErrorCode::InvalidConfig, "GBS set must not be empty");
    if (static_cast<std::int64_t>(elements_.size()) > d * d) {
        throw Error(ErrorCode::InvalidConfig, "GBS set larger than d^2");
    }
    std::vector<bool> seen(static_cast<std::size_t>(d * d), false);
    for (const auto &c : elements_) {
        if (!valid_coord(c, ring_)) {
            throw Error(ErrorCode::InvalidCoordinate,
                        "coordinate " + to_string(c) + " out of range for d=" + std::to_string(d));
        }
        const auto idx = flat_index(c, d);
        if (seen[idx]) throw Error(ErrorCode::DuplicateCoordinate, "duplicate coordinate " + to_string(c));
        seen[idx] = true;
    }
}

bool GbsSet::operator==(const GbsSet &other) const {
    if (!(ring_ == other.ring_) || elements_.size() != other.elements_.size()) return false;
    auto a = elements_;
    auto b = other.elements_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

DiffSet::DiffSet(RingContext ring, std::vector<GpmCoord> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool DiffSet::contains(GpmCoord c) const {
    return std::binary_search(elements_.begin(), elements_.end(), c);
}

Residue commutator_exponent(GpmCoord a, GpmCoord b, const RingContext &ring) {
    return ring.sub(ring.mul(b.m, a.n), ring.mul(a.m, b.n));
}

std::vector<GpmCoord> congruence_solutions(Residue m, Residue n, const RingContext &ring) {
    const auto d = ring.d();
    std::vector<GpmCoord> out;
    for (Residue x = 0; x < d; ++x) {
        for (Residue y = 0; y < d; ++y) {
            if (ring.sub(ring.mul(n, x), ring.mul(m, y)) == 0) out.push_back({x, y});
        }
    }
    return out;
}

DiffSet difference_set(const GbsSet &s) {
    if (s.size() < 2) {
        throw Error(ErrorCode::EmptyDifference, "difference set needs at least two elements");
    }
    const auto &ring = s.ring();
    const auto &e = s.elements();
    std::vector<GpmCoord> diffs;
    diffs.reserve(e.size() * (e.size() - 1) / 2);
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            diffs.push_back({ring.sub(e[j].m, e[i].m), ring.sub(e[j].n, e[i].n)});
        }
    }
    return DiffSet(ring, std::move(diffs));
}

GpmCoord h_alpha_map(Residue alpha, GpmCoord c, const RingContext &ring) {
    return {ring.add(ring.mul(ring.reduce(alpha), c.m), c.n), ring.neg(c.m)};
}

bool is_f_type(const GbsSet &s) {
    std::vector<bool> seen(static_cast<std::size_t>(s.ring().d()), false);
    for (const auto &c : s.elements()) {
        if (seen[static_cast<std::size_t>(c.m)]) return false;
        seen[static_cast<std::size_t>(c.m)] = true;
    }
    return true;
}

}  // namespace gbs
