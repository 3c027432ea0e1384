#include "gbs/mcs.hpp"

#include <algorithm>
#include <string>

#include "gbs/error.hpp"

namespace gbs {

namespace {

std::string index_string(Residue i, Residue j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Mcs build_unchecked(Residue i, Residue j, McsIndex canonical, const RingContext &ring) {
    const auto d = ring.d();
    std::vector<GpmCoord> elements;
    elements.reserve(static_cast<std::size_t>(d));
    if (i == 0) {
        for (Residue y = 0; y < d; ++y) elements.push_back({0, y});
    } else {
        const auto g = gcd_bezout(i, d).g;
        const auto step = d / g;
        for (Residue k = 0; k < d / g; ++k) {
            for (Residue l = 0; l < g; ++l) {
                elements.push_back({ring.mul(i, k), ring.add(ring.mul(k, j), step * l)});
            }
        }
    }
    return Mcs(ring, canonical, std::move(elements));
}

}  // namespace

Mcs::Mcs(RingContext ring, McsIndex index, std::vector<GpmCoord> elements)
    : ring_(std::move(ring)), index_(index), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
}

bool Mcs::contains(GpmCoord c) const {
    return std::binary_search(elements_.begin(), elements_.end(), c);
}

Mcs build_mcs(Residue i, Residue j, const RingContext &ring) {
    const auto d = ring.d();
    if (i == 0 && j == 0) return build_unchecked(0, 0, {0, 0}, ring);
    if (i <= 0 || i >= d) {
        throw Error(ErrorCode::InvalidMcsIndex, "invalid MCS index " + index_string(i, j));
    }
    const auto g = gcd_bezout(i, d).g;
    if (j < 0 || j >= d / g) {
        throw Error(ErrorCode::InvalidMcsIndex, "invalid MCS index " + index_string(i, j) +
                                                    ": j must lie in [0, " +
                                                    std::to_string(d / g) + ")");
    }
    const McsIndex canonical = (d % i == 0) ? McsIndex{i, j} : containing_mcs({i, j}, ring);
    return build_unchecked(i, j, canonical, ring);
}

std::vector<Mcs> enumerate_mcs(const RingContext &ring) {
    const auto d = ring.d();
    std::vector<Mcs> out;
    out.reserve(static_cast<std::size_t>(ring.sigma()));
    out.push_back(build_unchecked(0, 0, {0, 0}, ring));
    for (const auto i : ring.divisors()) {
        if (i == d) continue;
        for (Residue j = 0; j < d / i; ++j) out.push_back(build_unchecked(i, j, {i, j}, ring));
    }
    return out;
}

McsIndex containing_mcs(GpmCoord c, const RingContext &ring) {
    if (!valid_coord(c, ring)) {
        throw Error(ErrorCode::InvalidCoordinate, "coordinate " + to_string(c) + " out of range");
    }
    if (c.m == 0 && c.n == 0) {
        throw Error(ErrorCode::AmbiguousMembership, "(0,0) lies in every maximally commutative set");
    }
    if (c.m == 0) return {0, 0};
    const auto bz = gcd_bezout(c.m, ring.d());
    const auto k = ring.d() / bz.g;
    auto j = ((bz.q % k) * (c.n % k)) % k;
    if (j < 0) j += k;
    return {bz.g, j};
}

bool verify_maximal_commutative(std::span<const GpmCoord> candidate, const RingContext &ring) {
    for (const auto &a : candidate) {
        if (!valid_coord(a, ring)) return false;
        for (const auto &b : candidate) {
            if (!commutes(a, b, ring)) return false;
        }
    }
    const auto d = ring.d();
    for (Residue x = 0; x < d; ++x) {
        for (Residue y = 0; y < d; ++y) {
            const GpmCoord c{x, y};
            if (std::find(candidate.begin(), candidate.end(), c) != candidate.end()) continue;
            const bool commutes_with_all = std::all_of(
                candidate.begin(), candidate.end(), [&](const GpmCoord &a) { return commutes(a, c, ring); });
            if (commutes_with_all) return false;
        }
    }
    return true;
}

McsCatalog::McsCatalog(const RingContext &ring)
    : ring_(ring), classes_(enumerate_mcs(ring)), cells_(static_cast<std::size_t>(ring.d() * ring.d())) {
    member_.assign(classes_.size() * cells_, 0);
    for (std::size_t k = 0; k < classes_.size(); ++k) {
        for (const auto &c : classes_[k].elements()) member_[k * cells_ + flat_index(c, ring_.d())] = 1;
    }
}

std::size_t McsCatalog::position(McsIndex index) const {
    auto it = std::find_if(classes_.begin(), classes_.end(),
                           [&](const Mcs &m) { return m.index() == index; });
    if (it == classes_.end()) {
        throw Error(ErrorCode::InvalidMcsIndex, "no MCS with index " + index_string(index.i, index.j));
    }
    return static_cast<std::size_t>(it - classes_.begin());
}

}  // namespace gbs
