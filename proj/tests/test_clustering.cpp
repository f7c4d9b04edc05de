#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lure/errors.hpp"
#include "lure/lure_network.hpp"
#include "lure/reduced_model.hpp"
#include "support/helpers.hpp"

using namespace lure;
using test_support::path3_spec;

TEST_CASE("labels canonicalize to first-occurrence order") {
    const Partition p = Partition::from_labels({7, 7, 2, 5, 2});
    CHECK(p.r == 3);
    CHECK(p.assignment == std::vector<int>{0, 0, 1, 2, 1});
    CHECK_THROWS_AS(Partition::from_labels({}), ValidationError);

    const Partition id = Partition::identity(4);
    CHECK(id.r == 4);
    CHECK(id.assignment == std::vector<int>{0, 1, 2, 3});
    const Partition one = Partition::single_cluster(4);
    CHECK(one.r == 1);
    CHECK(one.assignment == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("characteristic matrix") {
    const Partition p = Partition::from_labels({0, 0, 1});
    const Matrix Pi = characteristic_matrix(p);
    Matrix expected(3, 2);
    expected << 1, 0,
                1, 0,
                0, 1;
    CHECK((Pi - expected).cwiseAbs().maxCoeff() == 0.0);

    Partition broken;
    broken.assignment = {0, 0, 2};
    broken.r = 3;  // cluster 1 empty
    CHECK_THROWS_AS(characteristic_matrix(broken), ValidationError);
}

TEST_CASE("weighted projection") {
    Matrix Pi(2, 1);
    Pi << 1, 1;
    Vector mu(2);
    mu << 1.0, 3.0;
    const Matrix Pid = generalized_projection(Pi, mu);
    CHECK(Pid(0, 0) == doctest::Approx(0.25));
    CHECK(Pid(0, 1) == doctest::Approx(0.75));

    const Partition p = Partition::from_labels({0, 0, 1});
    const Matrix Pi3 = characteristic_matrix(p);
    const Matrix Pid3 = generalized_projection(Pi3, Vector::Constant(3, 0.2));
    Matrix expected(2, 3);
    expected << 0.5, 0.5, 0,
                0, 0, 1;
    CHECK((Pid3 - expected).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((Pid3 * Pi3 - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-15);

    CHECK_THROWS_AS(generalized_projection(Matrix::Zero(2, 1), mu), ValidationError);
    Matrix two_ones(2, 2);
    two_ones << 1, 1,
                1, 0;
    CHECK_THROWS_AS(generalized_projection(two_ones, mu), ValidationError);
    CHECK_THROWS_AS(generalized_projection(Pi, Vector::Constant(2, -1.0)), ValidationError);
}

TEST_CASE("reduction of the 3-node path") {
    const LureNetwork model = assemble(path3_spec());
    const ReducedModel red = reduce(model, Partition::from_labels({0, 0, 1}));
    CHECK(red.r() == 2);
    CHECK(red.n() == 3);

    Matrix A_hat(2, 2);
    A_hat << -2.5, 0.5,
             1, -3;
    CHECK((red.A_hat - A_hat).cwiseAbs().maxCoeff() <= 1e-14);

    Matrix B_hat(2, 1);
    B_hat << 0.5, 0;  // input at node 1, first cluster weight 0.5
    CHECK((red.B_hat - B_hat).cwiseAbs().maxCoeff() <= 1e-15);

    // projected nonlinearity: Pi_dagger Phi(Pi z)
    Vector z(2);
    z << 0.5, 3.0;
    const Vector phi_hat = red.eval_phi_hat(z);
    CHECK(phi_hat(0) == doctest::Approx(0.1));  // both members at 0.5
    CHECK(phi_hat(1) == doctest::Approx(0.2));  // saturated
}

TEST_CASE("reduction with the identity partition is exact") {
    const LureNetwork model = assemble(path3_spec());
    const ReducedModel red = reduce(model, Partition::identity(3));
    CHECK((red.A_hat - model.A_L).cwiseAbs().maxCoeff() == 0.0);
    CHECK((red.Pi - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((red.Pi_dagger - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("reduce validates the partition size") {
    const LureNetwork model = assemble(path3_spec());
    CHECK_THROWS_AS(reduce(model, Partition::identity(4)), ValidationError);
}

TEST_CASE("structure of the reduced state matrix") {
    const LureNetwork model = assemble(path3_spec());
    const ReducedModel red = reduce(model, Partition::from_labels({0, 0, 1}));
    const StructureParts parts = structure_decompose(red);

    CHECK(parts.diag_part(0) == doctest::Approx(2.0));
    CHECK(parts.diag_part(1) == doctest::Approx(2.0));
    Matrix L_hat(2, 2);
    L_hat << 0.5, -0.5,
             -1, 1;
    CHECK((parts.laplacian_part - L_hat).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("structure holds across random instances") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(draw_below(rng, 17));
        NetworkSpec spec = test_support::random_connected_spec(rng, n);
        spec.nonlinearity = test_support::matching_phi(spec);
        const LureNetwork model = assemble(spec);
        const int r = 2 + static_cast<int>(draw_below(rng, n - 2));
        const Partition p = test_support::random_partition(rng, n, r);
        const ReducedModel red = reduce(model, p);

        CHECK((red.Pi_dagger * red.Pi - Matrix::Identity(r, r)).cwiseAbs().maxCoeff() <=
              1e-12 * r);
        const StructureParts parts = structure_decompose(red);
        CHECK(parts.diag_part.minCoeff() > 0.0);
        CHECK(parts.laplacian_part.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-10);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (i != j) CHECK(parts.laplacian_part(i, j) <= 1e-12);
        const Matrix reassembled =
            -(Matrix(parts.diag_part.asDiagonal()) + parts.laplacian_part);
        CHECK((reassembled - red.A_hat).cwiseAbs().maxCoeff() <=
              1e-10 * std::max(1.0, red.A_hat.cwiseAbs().maxCoeff()));
    }
}
