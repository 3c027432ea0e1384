#include "oracles.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <numbers>

namespace gbs::ref {

std::int64_t sigma_by_factorization(std::int64_t d) {
    std::int64_t result = 1;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        std::int64_t term = 1, power = 1;
        while (d % p == 0) {
            d /= p;
            power *= p;
            term += power;
        }
        result *= term;
    }
    if (d > 1) result *= 1 + d;
    return result;
}

bool raw_commutes(GpmCoord a, GpmCoord b, std::int64_t d) {
    const std::int64_t det = a.m * b.n - a.n * b.m;
    return ((det % d) + d) % d == 0;
}

namespace {

constexpr std::size_t kMaxCells = 256;  // d <= 16
using Bits = std::bitset<kMaxCells>;

void bron_kerbosch(Bits r, Bits p, Bits x, const std::vector<Bits> &adj, std::size_t cells,
                   std::vector<Bits> &out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P u X with the most neighbours in P.
    std::size_t pivot = 0, best = 0;
    const Bits px = p | x;
    for (std::size_t u = 0; u < cells; ++u) {
        if (!px[u]) continue;
        const auto cnt = (p & adj[u]).count();
        if (cnt >= best) {
            best = cnt;
            pivot = u;
        }
    }
    const Bits candidates = p & ~adj[pivot];
    for (std::size_t v = 0; v < cells; ++v) {
        if (!candidates[v]) continue;
        Bits rv = r;
        rv.set(v);
        bron_kerbosch(rv, p & adj[v], x & adj[v], adj, cells, out);
        p.reset(v);
        x.set(v);
    }
}

}  // namespace

std::vector<CoordSet> brute_force_maximal_commutative(std::int64_t d) {
    const auto cells = static_cast<std::size_t>(d * d);
    std::vector<Bits> adj(cells);
    for (std::size_t a = 0; a < cells; ++a) {
        for (std::size_t b = 0; b < cells; ++b) {
            if (a == b) continue;
            const GpmCoord ca{static_cast<std::int64_t>(a) / d, static_cast<std::int64_t>(a) % d};
            const GpmCoord cb{static_cast<std::int64_t>(b) / d, static_cast<std::int64_t>(b) % d};
            if (raw_commutes(ca, cb, d)) adj[a].set(b);
        }
    }
    Bits all;
    for (std::size_t k = 0; k < cells; ++k) all.set(k);
    std::vector<Bits> cliques;
    bron_kerbosch(Bits{}, all, Bits{}, adj, cells, cliques);

    std::vector<CoordSet> out;
    for (const auto &c : cliques) {
        CoordSet s;
        for (std::size_t k = 0; k < cells; ++k) {
            if (c[k]) s.insert({static_cast<std::int64_t>(k) / d, static_cast<std::int64_t>(k) % d});
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

RawMatrix raw_gpm(GpmCoord c, std::int64_t d) {
    // X|i> = |i+1>, Z|i> = w^i |i>; build X^m and Z^n by repeated products.
    RawMatrix x(static_cast<std::size_t>(d * d)), z(static_cast<std::size_t>(d * d)),
        id(static_cast<std::size_t>(d * d));
    for (std::int64_t i = 0; i < d; ++i) {
        x[static_cast<std::size_t>(((i + 1) % d) * d + i)] = 1.0;
        z[static_cast<std::size_t>(i * d + i)] = std::polar(1.0, 2.0 * std::numbers::pi * i / d);
        id[static_cast<std::size_t>(i * d + i)] = 1.0;
    }
    RawMatrix result = id;
    for (std::int64_t k = 0; k < c.m; ++k) result = raw_mul(result, x, d);
    for (std::int64_t k = 0; k < c.n; ++k) result = raw_mul(result, z, d);
    return result;
}

RawMatrix raw_mul(const RawMatrix &a, const RawMatrix &b, std::int64_t d) {
    RawMatrix c(static_cast<std::size_t>(d * d));
    for (std::int64_t i = 0; i < d; ++i) {
        for (std::int64_t k = 0; k < d; ++k) {
            const auto aik = a[static_cast<std::size_t>(i * d + k)];
            if (aik == 0.0) continue;
            for (std::int64_t j = 0; j < d; ++j) {
                c[static_cast<std::size_t>(i * d + j)] += aik * b[static_cast<std::size_t>(k * d + j)];
            }
        }
    }
    return c;
}

std::int64_t raw_commutator_exponent(GpmCoord a, GpmCoord b, std::int64_t d) {
    const auto ma = raw_gpm(a, d), mb = raw_gpm(b, d);
    const auto ab = raw_mul(ma, mb, d), ba = raw_mul(mb, ma, d);
    for (std::int64_t k = 0; k < d; ++k) {
        const auto w = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
        double err = 0.0;
        for (std::size_t e = 0; e < ab.size(); ++e) err = std::max(err, std::abs(ab[e] - w * ba[e]));
        if (err < 1e-9) return k;
    }
    return -1;
}

namespace {

CoordSet with_origin(std::initializer_list<GpmCoord> coords) {
    CoordSet s(coords);
    s.insert({0, 0});
    return s;
}

}  // namespace

std::vector<CoordSet> listed_mcs_d3() {
    return {
        with_origin({{0, 1}, {0, 2}}),
        with_origin({{1, 0}, {2, 0}}),
        with_origin({{1, 1}, {2, 2}}),
        with_origin({{1, 2}, {2, 1}}),
    };
}

std::vector<CoordSet> listed_mcs_d4() {
    return {
        with_origin({{0, 1}, {0, 2}, {0, 3}}),
        with_origin({{0, 2}, {2, 0}, {2, 2}}),
        with_origin({{0, 2}, {2, 1}, {2, 3}}),
        with_origin({{1, 0}, {2, 0}, {3, 0}}),
        with_origin({{1, 1}, {2, 2}, {3, 3}}),
        with_origin({{1, 2}, {2, 0}, {3, 2}}),
        with_origin({{1, 3}, {2, 2}, {3, 1}}),
    };
}

std::vector<CoordSet> listed_mcs_d8() {
    return {
        with_origin({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}}),
        with_origin({{0, 2}, {0, 4}, {0, 6}, {4, 0}, {4, 2}, {4, 4}, {4, 6}}),
        with_origin({{0, 2}, {0, 4}, {0, 6}, {4, 1}, {4, 3}, {4, 5}, {4, 7}}),
        with_origin({{0, 4}, {2, 0}, {2, 4}, {4, 0}, {4, 4}, {6, 0}, {6, 4}}),
        with_origin({{0, 4}, {2, 1}, {2, 5}, {4, 2}, {4, 6}, {6, 3}, {6, 7}}),
        with_origin({{0, 4}, {2, 2}, {2, 6}, {4, 0}, {4, 4}, {6, 2}, {6, 6}}),
        with_origin({{0, 4}, {2, 3}, {2, 7}, {4, 2}, {4, 6}, {6, 1}, {6, 5}}),
        with_origin({{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0}}),
        with_origin({{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}}),
        with_origin({{1, 2}, {2, 4}, {3, 6}, {4, 0}, {5, 2}, {6, 4}, {7, 6}}),
        with_origin({{1, 3}, {2, 6}, {3, 1}, {4, 4}, {5, 7}, {6, 2}, {7, 5}}),
        with_origin({{1, 4}, {2, 0}, {3, 4}, {4, 0}, {5, 4}, {6, 0}, {7, 4}}),
        with_origin({{1, 5}, {2, 2}, {3, 7}, {4, 4}, {5, 1}, {6, 6}, {7, 3}}),
        with_origin({{1, 6}, {2, 4}, {3, 2}, {4, 0}, {5, 6}, {6, 4}, {7, 2}}),
        with_origin({{1, 7}, {2, 6}, {3, 5}, {4, 4}, {5, 3}, {6, 2}, {7, 1}}),
    };
}

std::vector<GpmCoord> separating_set_d8() { return {{0, 0}, {5, 6}, {6, 3}, {6, 5}, {7, 6}}; }

CoordSet separating_diff_d8() {
    return {{5, 6}, {6, 3}, {6, 5}, {7, 6}, {1, 5}, {1, 7}, {2, 0}, {0, 2}, {1, 3}, {1, 1}};
}

}  // namespace gbs::ref
