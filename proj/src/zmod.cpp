#include "gbs/zmod.hpp"

#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

#include "gbs/error.hpp"

namespace gbs {

namespace {

// Largest d with d*d representable in int64.
constexpr std::int64_t kMaxDimension = 3037000499LL;

}  // namespace

RingContext::RingContext(std::int64_t d) : d_(d), sigma_(0) {
    if (d < 2 || d > kMaxDimension) {
        throw Error(ErrorCode::InvalidDimension, "dimension must satisfy 2 <= d <= " +
                                                     std::to_string(kMaxDimension) + ", got " +
                                                     std::to_string(d));
    }
    std::vector<std::int64_t> large;
    for (std::int64_t k = 1; k * k <= d; ++k) {
        if (d % k != 0) continue;
        divisors_.push_back(k);
        if (k != d / k) large.push_back(d / k);
    }
    divisors_.insert(divisors_.end(), large.rbegin(), large.rend());
    sigma_ = std::accumulate(divisors_.begin(), divisors_.end(), std::int64_t{0});
}

RingContext make_ring(std::int64_t d) { return RingContext(d); }

Bezout gcd_bezout(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw Error(ErrorCode::UndefinedGcd, "gcd(0, 0) is undefined");
    // Invariant: old_r == old_q*a + old_s*b, r == q*a + s*b.
    std::int64_t old_r = a, r = b;
    std::int64_t old_q = 1, q = 0;
    std::int64_t old_s = 0, s = 1;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        old_r = std::exchange(r, old_r - quot * r);
        old_q = std::exchange(q, old_q - quot * q);
        old_s = std::exchange(s, old_s - quot * s);
    }
    if (old_r < 0) return {-old_r, -old_q, -old_s};
    return {old_r, old_q, old_s};
}

bool is_unit(Residue a, const RingContext &ring) { return std::gcd(ring.reduce(a), ring.d()) == 1; }

}  // namespace gbs
