#pragma once

#include <cstdint>
#include <vector>

namespace gbs {

/// Element of Z_d, always held in its canonical representative {0, ..., d-1}.
using Residue = std::int64_t;

/// The local dimension d with its divisor data precomputed.
///
/// Immutable after construction, so a single context can be shared freely
/// between threads.
class RingContext {
   public:
    /// Throws Error(InvalidDimension) for d < 2 or d large enough that d*d
    /// overflows 64-bit arithmetic.
    explicit RingContext(std::int64_t d);

    std::int64_t d() const noexcept { return d_; }
    const std::vector<std::int64_t> &divisors() const noexcept { return divisors_; }
    std::int64_t sigma() const noexcept { return sigma_; }
    bool is_prime() const noexcept { return divisors_.size() == 2; }
    std::int64_t smallest_prime_factor() const noexcept { return divisors_[1]; }

    /// Canonical representative of any integer.
    Residue reduce(std::int64_t a) const noexcept {
        std::int64_t r = a % d_;
        return r < 0 ? r + d_ : r;
    }
    Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
    Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
    Residue mul(Residue a, Residue b) const noexcept { return reduce(a * b); }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : d_ - a; }

    bool operator==(const RingContext &other) const noexcept { return d_ == other.d_; }

   private:
    std::int64_t d_;
    std::vector<std::int64_t> divisors_;
    std::int64_t sigma_;
};

RingContext make_ring(std::int64_t d);

struct Bezout {
    std::int64_t g;  // gcd, always > 0
    std::int64_t q;  // coefficient of a
    std::int64_t r;  // coefficient of b
};

/// Extended Euclid: g = gcd(a, b) > 0 with g == q*a + r*b exactly.
/// Throws Error(UndefinedGcd) when a == b == 0.
Bezout gcd_bezout(std::int64_t a, std::int64_t b);

bool is_unit(Residue a, const RingContext &ring);

}  // namespace gbs
