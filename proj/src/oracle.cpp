#include "gbs/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "gbs/error.hpp"

namespace gbs::oracle {

void check_dimension(const RingContext &ring, const Limits &limits) {
    if (ring.d() > limits.max_dimension) {
        throw Error(ErrorCode::OracleDimension, "oracle limited to d <= " +
                                                    std::to_string(limits.max_dimension) + ", got d=" +
                                                    std::to_string(ring.d()));
    }
}

std::complex<double> root_of_unity(std::int64_t k, std::int64_t d) {
    std::int64_t r = k % d;
    if (r < 0) r += d;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d));
}

ComplexMatrix shift_matrix(const RingContext &ring) {
    const auto d = static_cast<Eigen::Index>(ring.d());
    ComplexMatrix x = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) x((i + 1) % d, i) = 1.0;
    return x;
}

ComplexMatrix clock_matrix(const RingContext &ring) {
    const auto d = static_cast<Eigen::Index>(ring.d());
    ComplexMatrix z = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) z(i, i) = root_of_unity(i, ring.d());
    return z;
}

ComplexMatrix gpm_matrix(GpmCoord c, const RingContext &ring, const Limits &limits) {
    check_dimension(ring, limits);
    if (!valid_coord(c, ring)) {
        throw Error(ErrorCode::InvalidCoordinate, "coordinate " + to_string(c) + " out of range");
    }
    const auto d = static_cast<Eigen::Index>(ring.d());
    // X^m is a permutation; Z^n is diagonal with reduced exponents so no
    // rounding accumulates from repeated multiplication.
    ComplexMatrix xm = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) xm((i + c.m) % d, i) = 1.0;
    ComplexMatrix zn = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) zn(i, i) = root_of_unity(c.n * i, ring.d());
    return xm * zn;
}

double max_abs_entry(const ComplexMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double verify_weyl(GpmCoord a, GpmCoord b, const RingContext &ring, const Limits &limits) {
    const auto ua = gpm_matrix(a, ring, limits);
    const auto ub = gpm_matrix(b, ring, limits);
    const auto phase = root_of_unity(commutator_exponent(a, b, ring), ring.d());
    return max_abs_entry(ua * ub - phase * (ub * ua));
}

Residue matrix_commutator_exponent(GpmCoord a, GpmCoord b, const RingContext &ring,
                                   const Limits &limits) {
    const auto ua = gpm_matrix(a, ring, limits);
    const auto ub = gpm_matrix(b, ring, limits);
    const ComplexMatrix ratio = (ua * ub) * (ub * ua).adjoint();
    const double turns = std::arg(ratio(0, 0)) / (2.0 * std::numbers::pi);
    return ring.reduce(std::llround(turns * static_cast<double>(ring.d())));
}

double EigenBasis::max_residual() const {
    return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

double EigenBasis::orthonormality_error() const {
    double worst = 0.0;
    for (std::size_t a = 0; a < vectors.size(); ++a) {
        for (std::size_t b = 0; b < vectors.size(); ++b) {
            const auto ip = vectors[a].dot(vectors[b]);
            worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
        }
    }
    return worst;
}

EigenBasis common_eigenbasis(std::span<const ComplexMatrix> family, const Limits &limits) {
    if (family.empty()) throw Error(ErrorCode::InvalidConfig, "empty matrix family");
    const auto dim = family.front().rows();
    if (dim > limits.max_dimension) {
        throw Error(ErrorCode::OracleDimension, "oracle limited to d <= " + std::to_string(limits.max_dimension));
    }
    const std::complex<double> i_unit{0.0, 1.0};
    std::mt19937_64 rng(limits.seed);
    std::normal_distribution<double> coeff(0.0, 1.0);

    double best = 0.0;
    for (int attempt = 0; attempt <= limits.max_redraws; ++attempt) {
        ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
        for (const auto &u : family) {
            const ComplexMatrix ud = u.adjoint();
            h += coeff(rng) * (u + ud);
            h += coeff(rng) * (i_unit * (u - ud));
        }
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
        if (solver.info() != Eigen::Success) continue;

        EigenBasis basis;
        basis.dim = static_cast<int>(dim);
        for (Eigen::Index k = 0; k < dim; ++k) {
            ComplexVector v = solver.eigenvectors().col(k);
            double worst = 0.0;
            for (const auto &u : family) {
                const ComplexVector uv = u * v;
                const auto lambda = v.dot(uv);
                worst = std::max(worst, (uv - lambda * v).norm());
            }
            basis.vectors.push_back(std::move(v));
            basis.residuals.push_back(worst);
        }
        best = basis.max_residual();
        if (best <= kEigenTolerance) return basis;
    }
    throw Error(ErrorCode::Degeneracy, "no joint eigenbasis within tolerance after " +
                                           std::to_string(limits.max_redraws + 1) +
                                           " draws (last residual " + std::to_string(best) + ")");
}

EigenBasis common_eigenbasis(const Mcs &mcs, const Limits &limits) {
    check_dimension(mcs.ring(), limits);
    std::vector<ComplexMatrix> family;
    family.reserve(mcs.elements().size());
    for (const auto &c : mcs.elements()) {
        if (c == GpmCoord{0, 0}) continue;
        family.push_back(gpm_matrix(c, mcs.ring(), limits));
    }
    if (family.empty()) family.push_back(gpm_matrix({0, 0}, mcs.ring(), limits));
    return common_eigenbasis(family, limits);
}

double verify_one_way_criterion(const GbsSet &s, const Mcs &mcs, const Limits &limits) {
    if (!(s.ring() == mcs.ring())) {
        throw Error(ErrorCode::InvalidDimension, "set and MCS dimensions differ");
    }
    check_dimension(s.ring(), limits);
    const auto diff = difference_set(s);
    for (const auto &e : diff.elements()) {
        if (mcs.contains(e)) {
            throw Error(ErrorCode::WrongBranch,
                        "difference element " + to_string(e) + " lies in the MCS; only the disjoint branch "
                        "has a numerical certificate");
        }
    }
    const auto basis = common_eigenbasis(mcs, limits);
    double worst = 0.0;
    for (const auto &e : diff.elements()) {
        const auto u = gpm_matrix(e, s.ring(), limits);
        for (const auto &v : basis.vectors) worst = std::max(worst, std::abs(v.dot(u * v)));
    }
    return worst;
}

}  // namespace gbs::oracle
