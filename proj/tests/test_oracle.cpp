#include <gtest/gtest.h>

#include <cmath>

#include "gbs/detect.hpp"
#include "gbs/error.hpp"
#include "gbs/oracle.hpp"
#include "oracles.hpp"

using namespace gbs;
using namespace gbs::oracle;

namespace {

double max_diff(const ComplexMatrix &a, const ref::RawMatrix &b, std::int64_t d) {
    double worst = 0.0;
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t j = 0; j < d; ++j)
            worst = std::max(worst, std::abs(a(i, j) - b[static_cast<std::size_t>(i * d + j)]));
    return worst;
}

}  // namespace

TEST(oracle, gpm_matrix_examples) {
    const auto r3 = make_ring(3);
    EXPECT_LE(max_abs_entry(gpm_matrix({0, 0}, r3) - ComplexMatrix::Identity(3, 3)), 1e-15);
    const auto r2 = make_ring(2);
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    EXPECT_LE(max_abs_entry(gpm_matrix({1, 0}, r2) - x), 1e-15);
    ComplexMatrix xz(2, 2);
    xz << 0, -1, 1, 0;
    ASSERT_LE(max_diff(xz, ref::raw_gpm({1, 1}, 2), 2), 1e-15);
    EXPECT_LE(max_abs_entry(gpm_matrix({1, 1}, r2) - xz), 1e-15);
}

TEST(oracle, gpm_matrix_matches_repeated_products) {
    for (std::int64_t d = 2; d <= 7; ++d) {
        const auto ring = make_ring(d);
        for (Residue m = 0; m < d; ++m)
            for (Residue n = 0; n < d; ++n)
                ASSERT_LE(max_diff(gpm_matrix({m, n}, ring), ref::raw_gpm({m, n}, d), d), 1e-12);
    }
}

TEST(oracle, dimension_limit) {
    try {
        gpm_matrix({1, 0}, make_ring(65));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::OracleDimension);
    }
    Limits wide;
    wide.max_dimension = 80;
    EXPECT_EQ(gpm_matrix({1, 0}, make_ring(65), wide).rows(), 65);
}

TEST(oracle, unitarity) {
    for (std::int64_t d = 2; d <= 32; ++d) {
        const auto ring = make_ring(d);
        for (Residue m = 0; m < d; ++m)
            for (Residue n = 0; n < d; ++n) {
                const auto u = gpm_matrix({m, n}, ring);
                ASSERT_LE(max_abs_entry(u * u.adjoint() - ComplexMatrix::Identity(d, d)), 1e-12);
            }
    }
}

TEST(oracle, weyl_examples) {
    EXPECT_LE(verify_weyl({1, 0}, {0, 1}, make_ring(2)), 1e-15);
    EXPECT_EQ(commutator_exponent({1, 0}, {0, 1}, make_ring(2)), 1);  // omega = -1
    EXPECT_EQ(commutator_exponent({1, 2}, {2, 4}, make_ring(8)), 0);
    const auto a = gpm_matrix({1, 2}, make_ring(8)), b = gpm_matrix({2, 4}, make_ring(8));
    EXPECT_LE(max_abs_entry(a * b - b * a), 1e-12);
    // Explicit 3x3 products give UV = w^2 VU, consistent with the d=5 case (1,0),(0,1) -> -1.
    ASSERT_EQ(ref::raw_commutator_exponent({1, 1}, {1, 2}, 3), 2);
    EXPECT_EQ(commutator_exponent({1, 1}, {1, 2}, make_ring(3)), 2);
    EXPECT_EQ(matrix_commutator_exponent({1, 1}, {1, 2}, make_ring(3)), 2);
    EXPECT_LE(verify_weyl({1, 1}, {1, 2}, make_ring(3)), 1e-12);
}

TEST(oracle, matrix_phase_agrees_with_coordinates) {
    for (std::int64_t d = 2; d <= 10; ++d) {
        const auto ring = make_ring(d);
        for (Residue am = 0; am < d; ++am)
            for (Residue an = 0; an < d; ++an)
                for (Residue bm = 0; bm < d; ++bm)
                    for (Residue bn = 0; bn < d; ++bn)
                        ASSERT_EQ(matrix_commutator_exponent({am, an}, {bm, bn}, ring),
                                  commutator_exponent({am, an}, {bm, bn}, ring));
    }
}

TEST(oracle, common_eigenbasis_z_line_is_computational) {
    for (std::int64_t d = 2; d <= 16; ++d) {
        const auto ring = make_ring(d);
        const auto basis = common_eigenbasis(build_mcs(0, 0, ring));
        ASSERT_LE(basis.max_residual(), 1e-12);
        ASSERT_LE(basis.orthonormality_error(), 1e-9);
        for (const auto &v : basis.vectors) {
            Eigen::Index arg = 0;
            v.cwiseAbs().maxCoeff(&arg);
            ASSERT_NEAR(std::abs(v(arg)), 1.0, 1e-12);
        }
    }
}

TEST(oracle, common_eigenbasis_x_line_is_fourier) {
    const auto ring = make_ring(8);
    const auto basis = common_eigenbasis(build_mcs(1, 0, ring));
    ASSERT_LE(basis.max_residual(), 1e-9);
    // Every vector matches one Fourier column up to a global phase.
    std::vector<bool> used(8, false);
    for (const auto &v : basis.vectors) {
        bool matched = false;
        for (int k = 0; k < 8 && !matched; ++k) {
            ComplexVector f(8);
            for (int j = 0; j < 8; ++j) f(j) = root_of_unity(j * k, 8) / std::sqrt(8.0);
            if (std::abs(std::abs(f.dot(v)) - 1.0) < 1e-9) {
                matched = true;
                EXPECT_FALSE(used[k]);
                used[k] = true;
            }
        }
        EXPECT_TRUE(matched);
    }
}

TEST(oracle, common_eigenbasis_all_mcs) {
    for (std::int64_t d : {2, 3, 4, 6, 8, 9, 12, 16}) {
        const auto ring = make_ring(d);
        for (const auto &m : enumerate_mcs(ring)) {
            const auto basis = common_eigenbasis(m);
            ASSERT_EQ(basis.vectors.size(), static_cast<std::size_t>(d));
            ASSERT_LE(basis.max_residual(), 1e-9);
            ASSERT_LE(basis.orthonormality_error(), 1e-9);
        }
    }
}

TEST(oracle, common_eigenbasis_reports_noncommuting_family) {
    const auto ring = make_ring(3);
    const std::vector<ComplexMatrix> family{gpm_matrix({1, 0}, ring), gpm_matrix({0, 1}, ring)};
    Limits few;
    few.max_redraws = 2;
    try {
        common_eigenbasis(family, few);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Degeneracy);
    }
}

TEST(oracle, one_way_criterion_separating_example) {
    const auto ring = make_ring(8);
    const GbsSet s(ring, ref::separating_set_d8());
    EXPECT_LE(verify_one_way_criterion(s, build_mcs(2, 2, ring)), 1e-9);
}

TEST(oracle, one_way_criterion_pairs_exhaustive) {
    for (std::int64_t d = 2; d <= 12; ++d) {
        const auto ring = make_ring(d);
        const auto family = enumerate_mcs(ring);
        for (Residue m = 0; m < d; ++m)
            for (Residue n = 0; n < d; ++n) {
                if (m == 0 && n == 0) continue;
                const GbsSet s(ring, {{0, 0}, {m, n}});
                for (const auto &mcs : family) {
                    if (mcs.contains({m, n})) continue;
                    ASSERT_LE(verify_one_way_criterion(s, mcs), 1e-9) << d << " " << m << "," << n;
                }
            }
    }
}

TEST(oracle, one_way_criterion_wrong_branch) {
    const auto ring = make_ring(3);
    const GbsSet s(ring, {{0, 0}, {1, 1}});
    try {
        verify_one_way_criterion(s, build_mcs(1, 1, ring));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::WrongBranch);
    }
}
