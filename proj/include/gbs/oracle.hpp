#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "gbs/gpm.hpp"
#include "gbs/mcs.hpp"

namespace gbs::oracle {

// Numerical cross-checks with explicit dense matrices. Nothing in the
// detection path depends on this namespace.

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr std::int64_t kDefaultMaxDimension = 64;
inline constexpr double kExactTolerance = 1e-12;
inline constexpr double kEigenTolerance = 1e-9;

struct Limits {
    std::int64_t max_dimension = kDefaultMaxDimension;
    int max_redraws = 8;
    std::uint64_t seed = 0x6a09e667f3bcc909ULL;
};

/// Throws Error(OracleDimension) when d exceeds the limit.
void check_dimension(const RingContext &ring, const Limits &limits = {});

/// omega^k with omega = exp(2 pi i / d); k is reduced mod d first.
std::complex<double> root_of_unity(std::int64_t k, std::int64_t d);

ComplexMatrix shift_matrix(const RingContext &ring);  // X_d
ComplexMatrix clock_matrix(const RingContext &ring);  // Z_d

/// Dense X^m Z^n, formed as the product of the two explicit powers.
ComplexMatrix gpm_matrix(GpmCoord c, const RingContext &ring, const Limits &limits = {});

/// Max entrywise |A B - omega^e B A| with e the coordinate-level commutator exponent.
double verify_weyl(GpmCoord a, GpmCoord b, const RingContext &ring, const Limits &limits = {});

/// Exponent k with U V (V U)^{-1} = omega^k I, read off numerically.
Residue matrix_commutator_exponent(GpmCoord a, GpmCoord b, const RingContext &ring,
                                   const Limits &limits = {});

double max_abs_entry(const ComplexMatrix &m);

struct EigenBasis {
    int dim = 0;
    std::vector<ComplexVector> vectors;
    /// Worst ||U v - <v|U|v> v|| over the generating family, per vector.
    std::vector<double> residuals;

    double max_residual() const;
    /// Max |<v_a|v_b> - delta_ab|.
    double orthonormality_error() const;
};

/// Joint eigenbasis of a commuting family of unitaries.
///
/// Diagonalizes a random Hermitian combination sum c_k (U_k + U_k^dag) +
/// c'_k i (U_k - U_k^dag), then checks every residual against
/// kEigenTolerance. Redraws coefficients up to limits.max_redraws times;
/// throws Error(Degeneracy) if no draw passes.
EigenBasis common_eigenbasis(std::span<const ComplexMatrix> family, const Limits &limits = {});
EigenBasis common_eigenbasis(const Mcs &mcs, const Limits &limits = {});

/// Max over joint eigenvectors v of mcs and (a, b) in the difference set of
/// |<v| X^a Z^b |v>|. Requires the difference set to miss mcs entirely;
/// throws Error(WrongBranch) otherwise.
double verify_one_way_criterion(const GbsSet &s, const Mcs &mcs, const Limits &limits = {});

}  // namespace gbs::oracle
