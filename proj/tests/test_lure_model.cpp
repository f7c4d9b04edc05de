#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "lure/errors.hpp"
#include "lure/lure_network.hpp"
#include "support/helpers.hpp"

using namespace lure;
using test_support::path3_spec;

TEST_CASE("saturating nonlinearity") {
    const Nonlinearity phi = Nonlinearity::saturating_abs(0.1, 1.0);
    CHECK(phi.eval(0.0) == 0.0);
    CHECK(phi.eval(0.5) == doctest::Approx(0.1));   // linear region, slope 2c
    CHECK(phi.eval(2.0) == doctest::Approx(0.2));   // saturated at 2cd
    CHECK(phi.eval(-2.0) == doctest::Approx(-0.2));
    CHECK(phi.max_slope() == doctest::Approx(0.2));
    CHECK(phi.kind_name() == std::string("saturating_abs"));
}

TEST_CASE("tanh and linear nonlinearities") {
    const Nonlinearity tanh_phi = Nonlinearity::scaled_tanh(0.3, 2.0);
    CHECK(tanh_phi.eval(0.0) == 0.0);
    CHECK(tanh_phi.eval(1.0) == doctest::Approx(0.3 * 2.0 * std::tanh(0.5)));
    CHECK(tanh_phi.max_slope() == doctest::Approx(0.3));

    const Nonlinearity lin = Nonlinearity::linear(0.05);
    CHECK(lin.eval(3.0) == doctest::Approx(0.15));
    CHECK(lin.max_slope() == doctest::Approx(0.05));
    CHECK(Nonlinearity::linear(0.0).max_slope() == 0.0);
}

TEST_CASE("nonlinearity factories reject bad parameters") {
    CHECK_THROWS_AS(Nonlinearity::saturating_abs(0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(Nonlinearity::saturating_abs(0.1, -1.0), ValidationError);
    CHECK_THROWS_AS(Nonlinearity::scaled_tanh(-0.1, 1.0), ValidationError);
    CHECK_THROWS_AS(Nonlinearity::linear(-0.01), ValidationError);
}

TEST_CASE("network spec validation collects every problem") {
    NetworkSpec spec;
    spec.n_nodes = 3;
    spec.edges = {{0, 0, 1.0}, {0, 1, -2.0}, {0, 2, 1.0}, {0, 2, 1.0}, {1, 5, 1.0}};
    spec.leak = Vector::Constant(2, 1.0);
    spec.slopes = Vector::Constant(3, -0.2);
    spec.inputs = {{7, 0, 1.0}, {0, 0, 1.0}, {0, 0, 2.0}};
    try {
        spec.validate();
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("invalid network spec") != std::string::npos);
        CHECK(msg.find("self-loop") != std::string::npos);
        CHECK(msg.find("weight") != std::string::npos);
        CHECK(msg.find("duplicate") != std::string::npos);
        CHECK(msg.find("leak") != std::string::npos);
        CHECK(msg.find("slope") != std::string::npos);
        CHECK(msg.find(";") != std::string::npos);
    }
}

TEST_CASE("input matrix placement") {
    NetworkSpec spec = path3_spec();
    spec.n_inputs = 2;
    spec.inputs = {{0, 0, 1.0}, {2, 1, -0.5}};
    const Matrix B = spec.input_matrix();
    REQUIRE(B.rows() == 3);
    REQUIRE(B.cols() == 2);
    CHECK(B(0, 0) == 1.0);
    CHECK(B(2, 1) == -0.5);
    CHECK(B.cwiseAbs().sum() == doctest::Approx(1.5));
}

TEST_CASE("model assembly") {
    const LureNetwork model = assemble(path3_spec());
    CHECK(model.n() == 3);
    CHECK(model.p() == 1);
    CHECK(model.A_L(0, 0) == -3.0);
    CHECK(model.A_L(0, 1) == 1.0);
    CHECK(model.mu.isConstant(0.2));

    const Vector x = Vector::Constant(3, 0.5);
    const Vector phi = model.eval_phi(x);
    CHECK(phi.isConstant(0.1, 1e-15));  // 0.1 (|1.5| - |0.5|)
}

TEST_CASE("assembly enforces slope consistency") {
    NetworkSpec spec = path3_spec();
    spec.slopes = Vector::Constant(3, 0.15);  // below the 0.2 slope of phi
    try {
        assemble(spec);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("sector violation at node 1") != std::string::npos);
    }

    NetworkSpec bare = path3_spec();
    bare.nonlinearity.reset();
    CHECK_THROWS_AS(assemble(bare), ValidationError);
}

TEST_CASE("incremental sector check") {
    const LureNetwork good = assemble(path3_spec());
    const SectorReport ok = check_incremental_sector(good, 64, 0x5ec70bULL);
    CHECK(ok.passed);
    CHECK(ok.max_value <= ok.tolerance);

    // Declared slopes below the true slope of phi break the sector bound.
    const LureNetwork bad = from_raw_parts(
        good.A_L, good.B, Vector::Constant(3, 0.1),
        {Nonlinearity::saturating_abs(0.1, 1.0), Nonlinearity::saturating_abs(0.1, 1.0),
         Nonlinearity::saturating_abs(0.1, 1.0)});
    const SectorReport fail = check_incremental_sector(bad, 64, 0x5ec70bULL);
    CHECK_FALSE(fail.passed);
    CHECK(fail.max_value > fail.tolerance);
}

TEST_CASE("assembly rejects models violating the sector bound") {
    NetworkSpec spec = path3_spec();
    spec.slopes = Vector::Constant(3, 0.2);
    spec.nonlinearity = Nonlinearity::scaled_tanh(0.25, 1.0);  // slope 0.25 > 0.2
    CHECK_THROWS_AS(assemble(spec), ValidationError);
}

TEST_CASE("raw-parts constructor checks dimensions only") {
    const Matrix A = Matrix::Identity(2, 2) * -1.0;
    const Matrix B = Matrix::Zero(2, 1);
    const Vector mu = Vector::Constant(2, 0.2);
    const std::vector<Nonlinearity> phi = {Nonlinearity::linear(0.0), Nonlinearity::linear(0.0)};
    CHECK_NOTHROW(from_raw_parts(A, B, mu, phi));
    CHECK_THROWS_AS(from_raw_parts(A, Matrix::Zero(3, 1), mu, phi), ValidationError);
    CHECK_THROWS_AS(from_raw_parts(A, B, Vector::Constant(3, 0.2), phi), ValidationError);
    CHECK_THROWS_AS(from_raw_parts(Matrix::Zero(2, 3), B, mu, phi), ValidationError);
}

TEST_CASE("random specs assemble cleanly in the validated regime") {
    std::mt19937_64 rng(101);
    for (int k = 0; k < 20; ++k) {
        const int n = 5 + static_cast<int>(draw_below(rng, 16));
        NetworkSpec spec = test_support::random_connected_spec(rng, n);
        spec.nonlinearity = test_support::matching_phi(spec);
        const LureNetwork model = assemble(spec);
        CHECK(model.n() == n);
        Eigen::SelfAdjointEigenSolver<Matrix> es(model.A_L, Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().maxCoeff() < 0.0);
    }
}
