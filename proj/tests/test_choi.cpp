#include "choiwit/choi.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace choiwit;
using testutil::make_rng;
using testutil::random_hermitian;

namespace {

MapParams random_params(std::mt19937_64& rng, double lo = 0.0, double hi = 3.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    return MapParams{u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_CASE("phi_apply on the identity scales by a+b+c") {
    const MapParams p{0.7, 1.3, 0.4};
    CMat out = phi_apply(p, CMat::Identity(3, 3));
    for (int i = 0; i < 3; ++i)
        CHECK(out(i, i).real() == doctest::Approx(p.a + p.b + p.c));
    CHECK((out - out.diagonal().asDiagonal().toDenseMatrix()).norm() == 0.0);
}

TEST_CASE("phi_apply diagonal rule on E00") {
    CMat e00 = CMat::Zero(3, 3);
    e00(0, 0) = 1.0;
    CMat out = phi_apply(MapParams{1.0, 2.0, 2.0}, e00);
    CHECK(out(0, 0) == Complex(1.0, 0.0));
    CHECK(out(1, 1) == Complex(2.0, 0.0));
    CHECK(out(2, 2) == Complex(2.0, 0.0));
}

TEST_CASE("phi_apply off-diagonal rule") {
    CMat e01 = CMat::Zero(3, 3);
    e01(0, 1) = 1.0;
    CMat out = phi_apply(MapParams{5.0, 0.1, 2.0}, e01);
    CHECK(out(0, 1) == Complex(-1.0, 0.0));
    CHECK(out.norm() == doctest::Approx(1.0));
}

TEST_CASE("phi_apply rejects negative parameters") {
    CHECK_THROWS_AS(phi_apply(MapParams{-1.0, 0.0, 0.0}, CMat::Identity(3, 3)),
                    std::invalid_argument);
}

TEST_CASE("choi_matrix entries") {
    const auto w = choi_matrix(MapParams{1.0, 0.0, 1.0});
    const double diag[9] = {1, 1, 0, 0, 1, 1, 1, 0, 1};
    for (int k = 0; k < 9; ++k) CHECK(w.mat(k, k) == Complex(diag[k], 0.0));
    for (auto [r, c] : {std::pair{0, 4}, {0, 8}, {4, 0}, {4, 8}, {8, 0}, {8, 4}})
        CHECK(w.mat(r, c) == Complex(-1.0, 0.0));
    int nonzeros = 0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (w.mat(i, j) != Complex(0.0, 0.0)) ++nonzeros;
    CHECK(nonzeros == 6 + 6);  // six diagonal entries are nonzero at (1,0,1)
}

TEST_CASE("choi_matrix of (2,0,0) is positive semidefinite") {
    const auto w = choi_matrix(MapParams{2.0, 0.0, 0.0});
    CHECK(min_eigenvalue(w.mat) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("choi_from_action of the identity and transpose maps") {
    MapAction id_action;
    MapAction transpose_action;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CMat unit = CMat::Zero(3, 3);
            unit(i, j) = 1.0;
            id_action[i][j] = unit;
            transpose_action[i][j] = unit.transpose();
        }
    const auto cid = choi_from_action(id_action);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(cid.mat(3 * i + i, 3 * j + j) == Complex(1.0, 0.0));
    CHECK(cid.mat.squaredNorm() == doctest::Approx(9.0));

    const auto ct = choi_from_action(transpose_action);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const double expected = (i == l && j == k) ? 1.0 : 0.0;
                    CHECK(ct.mat(3 * i + j, 3 * k + l) == Complex(expected, 0.0));
                }
}

TEST_CASE("choi_from_action rejects non-Hermiticity-preserving actions") {
    MapAction bad;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) bad[i][j] = CMat::Zero(3, 3);
    bad[0][1](0, 0) = 1.0;  // image of E10 stays zero
    CHECK_THROWS_AS(choi_from_action(bad), std::invalid_argument);
}

TEST_CASE("choi_matrix agrees with choi_from_action entry by entry") {
    auto rng = make_rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const MapParams p = random_params(rng);
        const auto direct = choi_matrix(p);
        const auto generic = choi_from_action(phi_action(p));
        CHECK((direct.mat - generic.mat).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("region_profile at reference points") {
    auto r = region_profile(MapParams{2.0, 0.0, 0.0});
    CHECK(r.positive);
    CHECK(r.completely_positive);
    CHECK_FALSE(r.completely_copositive);
    CHECK(r.decomposable);

    r = region_profile(MapParams{1.0, 1.0, 0.0});
    CHECK(r.positive);
    CHECK_FALSE(r.completely_positive);
    CHECK_FALSE(r.completely_copositive);
    CHECK_FALSE(r.decomposable);

    r = region_profile(MapParams{0.0, 1.0, 1.0});
    CHECK(r.positive);
    CHECK_FALSE(r.completely_positive);
    CHECK(r.completely_copositive);
    CHECK(r.decomposable);
}

TEST_CASE("region margins") {
    const auto r = region_profile(MapParams{0.5, 1.0, 0.5});
    CHECK(r.margin_pos_sum == doctest::Approx(0.0));
    CHECK(r.margin_pos_bc == doctest::Approx(0.5 - 0.25));
    CHECK(r.margin_cp == doctest::Approx(-1.5));
    CHECK(r.margin_ccp == doctest::Approx(-0.5));
    CHECK(r.margin_dec == doctest::Approx(0.5 - 0.5625));
    CHECK(std::isinf(region_profile(MapParams{1.5, 0.0, 1.0}).margin_pos_bc));
}

TEST_CASE("spectral cross-checks for CP and coCP on a grid") {
    for (int ia = 0; ia <= 12; ++ia)
        for (int ib = 0; ib <= 12; ++ib)
            for (int ic = 0; ic <= 12; ++ic) {
                const MapParams p{ia * 0.25, ib * 0.25, ic * 0.25};
                if (std::abs(p.a - 2.0) <= 1e-6 || std::abs(p.b * p.c - 1.0) <= 1e-6)
                    continue;
                const auto w = choi_matrix(p);
                const auto r = region_profile(p);
                CHECK(r.completely_positive == (min_eigenvalue(w.mat) >= -1e-9));
                CHECK(r.completely_copositive ==
                      (min_eigenvalue(partial_transpose(w.mat)) >= -1e-9));
            }
}

TEST_CASE("region nesting on random samples") {
    auto rng = make_rng(22);
    for (int trial = 0; trial < 500; ++trial) {
        const auto r = region_profile(random_params(rng, 0.0, 4.0));
        if (r.completely_positive || r.completely_copositive) CHECK(r.decomposable);
        if (r.decomposable) CHECK(r.positive);
    }
}

TEST_CASE("choi_curve values and identities") {
    auto p = choi_curve(1.0);
    CHECK(p.a == doctest::Approx(0.0));
    CHECK(p.b == doctest::Approx(1.0));
    CHECK(p.c == doctest::Approx(1.0));

    p = choi_curve(2.0);
    CHECK(p.a == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(p.b == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(p.c == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    for (double t = 0.1; t <= 10.0; t += 0.37) {
        p = choi_curve(t);
        CHECK(std::abs(p.a + p.b + p.c - 2.0) <= 1e-12);
        CHECK(std::abs(p.b * p.c - (1.0 - p.a) * (1.0 - p.a)) <= 1e-12);
    }
    CHECK_THROWS_AS(choi_curve(0.0), std::invalid_argument);
    CHECK_THROWS_AS(choi_curve(-1.0), std::invalid_argument);
}

TEST_CASE("diagonal map and the a > 2 decomposition") {
    CHECK((diagonal_map_apply(CMat::Identity(3, 3)) - CMat::Identity(3, 3)).norm() ==
          0.0);
    CMat e01 = CMat::Zero(3, 3);
    e01(0, 1) = 1.0;
    CHECK(diagonal_map_apply(e01).norm() == 0.0);

    auto rng = make_rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        CMat x = random_hermitian(rng, 3);
        const double a = 2.0 + 3.0 * (trial + 1) / 50.0;
        CMat lhs = phi_apply(MapParams{a, 0.0, 0.0}, x);
        CMat rhs = phi_apply(MapParams{2.0, 0.0, 0.0}, x) +
                   (a - 2.0) * diagonal_map_apply(x);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-14 * x.norm());
    }
}
