#pragma once

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lure/graph.hpp"
#include "lure/network_spec.hpp"
#include "lure/partition.hpp"
#include "lure/random_util.hpp"
#include "lure/state_space.hpp"

namespace test_support {

/// Connected weighted graph with positive leak rates: a random spanning tree
/// over a shuffled node order plus up to n extra edges. Slopes are either
/// shared (U[0.1, 0.4]) or per-node (U[0.15, 0.25]); validated regime for
/// the stability certificates.
inline lure::NetworkSpec random_connected_spec(std::mt19937_64& rng, int n) {
    lure::NetworkSpec spec;
    spec.n_nodes = n;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int k = n - 1; k > 0; --k)
        std::swap(order[k], order[lure::draw_below(rng, static_cast<std::uint64_t>(k) + 1)]);

    std::set<std::pair<int, int>> seen;
    auto add_edge = [&](int a, int b, double w) {
        if (a > b) std::swap(a, b);
        if (a == b || !seen.insert({a, b}).second) return;
        spec.edges.push_back({a, b, w});
    };
    for (int k = 1; k < n; ++k) {
        const int j = order[lure::draw_below(rng, static_cast<std::uint64_t>(k))];
        add_edge(order[k], j, lure::uniform_in(rng, 0.5, 2.0));
    }
    const int extras = static_cast<int>(lure::draw_below(rng, static_cast<std::uint64_t>(n) + 1));
    for (int e = 0; e < extras; ++e) {
        const int a = static_cast<int>(lure::draw_below(rng, n));
        const int b = static_cast<int>(lure::draw_below(rng, n));
        add_edge(a, b, lure::uniform_in(rng, 0.5, 2.0));
    }

    spec.leak.resize(n);
    for (int i = 0; i < n; ++i) spec.leak(i) = lure::uniform_in(rng, 1.0, 3.0);
    spec.slopes.resize(n);
    if (lure::uniform01(rng) < 0.5) {
        spec.slopes.setConstant(lure::uniform_in(rng, 0.1, 0.4));
    } else {
        for (int i = 0; i < n; ++i) spec.slopes(i) = lure::uniform_in(rng, 0.15, 0.25);
    }
    spec.n_inputs = 1;
    spec.inputs = {{static_cast<int>(lure::draw_below(rng, n)), 0, 1.0}};
    return spec;
}

/// Nonlinearity consistent with the declared slopes: phi slope = min_i mu_i.
inline lure::Nonlinearity matching_phi(const lure::NetworkSpec& spec) {
    return lure::Nonlinearity::saturating_abs(spec.slopes.minCoeff() / 2.0, 1.0);
}

/// Random surjective partition of n nodes into exactly r clusters.
inline lure::Partition random_partition(std::mt19937_64& rng, int n, int r) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = n - 1; k > 0; --k)
        std::swap(perm[k], perm[lure::draw_below(rng, static_cast<std::uint64_t>(k) + 1)]);
    std::vector<int> labels(n);
    for (int k = 0; k < n; ++k)
        labels[perm[k]] = k < r ? k : static_cast<int>(lure::draw_below(rng, r));
    return lure::Partition::from_labels(labels);
}

inline double gaussian(std::mt19937_64& rng) {
    double u1 = lure::uniform01(rng);
    while (u1 <= 1e-300) u1 = lure::uniform01(rng);
    const double u2 = lure::uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

/// Random Hurwitz state-space system, order 2..30, 1..4 inputs and outputs,
/// optionally with a nonzero feedthrough.
inline lure::StateSpace random_stable_system(std::mt19937_64& rng) {
    const int n = 2 + static_cast<int>(lure::draw_below(rng, 29));
    const int m = 1 + static_cast<int>(lure::draw_below(rng, 4));
    const int q = 1 + static_cast<int>(lure::draw_below(rng, 4));

    lure::StateSpace sys;
    sys.A.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sys.A(i, j) = gaussian(rng);
    const double max_re = Eigen::EigenSolver<lure::Matrix>(sys.A, false)
                              .eigenvalues()
                              .real()
                              .maxCoeff();
    sys.A.diagonal().array() -= max_re + lure::uniform_in(rng, 0.3, 2.0);

    sys.B.resize(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) sys.B(i, j) = gaussian(rng);
    sys.C.resize(q, n);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < n; ++j) sys.C(i, j) = gaussian(rng);
    sys.D = lure::Matrix::Zero(q, m);
    if (lure::uniform01(rng) < 0.5)
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < m; ++j) sys.D(i, j) = 0.3 * gaussian(rng);
    return sys;
}

/// Independent H-infinity estimate: dense frequency sweep on the diagonalized
/// realization plus golden-section refinement around the grid peak, floored
/// by sigma_max(D) (the omega -> infinity limit).
inline double sweep_hinf_oracle(const lure::StateSpace& sys, int points = 10000) {
    using Complex = std::complex<double>;
    Eigen::EigenSolver<lure::Matrix> es(sys.A);
    const lure::ComplexMatrix V = es.eigenvectors();
    const lure::ComplexVector lam = es.eigenvalues();
    const lure::ComplexMatrix W = V.partialPivLu().solve(sys.B.cast<Complex>());
    const lure::ComplexMatrix CV = sys.C.cast<Complex>() * V;
    const lure::ComplexMatrix Dc = sys.D.cast<Complex>();

    auto gain = [&](double omega) {
        lure::ComplexVector d(lam.size());
        for (Eigen::Index i = 0; i < lam.size(); ++i)
            d(i) = 1.0 / (Complex(0.0, omega) - lam(i));
        const lure::ComplexMatrix G = CV * d.asDiagonal() * W + Dc;
        return G.jacobiSvd().singularValues()(0);
    };

    std::vector<double> ws;
    ws.push_back(0.0);
    for (int k = 0; k < points; ++k)
        ws.push_back(std::pow(10.0, -4.0 + 8.0 * k / (points - 1)));

    double best = 0.0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const double g = gain(ws[i]);
        if (g > best) {
            best = g;
            best_idx = i;
        }
    }

    double lo = best_idx > 0 ? ws[best_idx - 1] : 0.0;
    double hi = best_idx + 1 < ws.size() ? ws[best_idx + 1] : 2.0 * ws.back();
    const double phi = 0.6180339887498949;
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = gain(x1);
    double f2 = gain(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = gain(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = gain(x1);
        }
        best = std::max(best, std::max(f1, f2));
    }

    double sigma_d = 0.0;
    if (sys.D.rows() > 0 && sys.D.cols() > 0)
        sigma_d = sys.D.jacobiSvd().singularValues()(0);
    return std::max(best, sigma_d);
}

/// Path 0-1-2 with unit weights, a_i = 2, mu_i = 0.2, input at node 1.
inline lure::NetworkSpec path3_spec() {
    lure::NetworkSpec spec;
    spec.n_nodes = 3;
    spec.edges = {{0, 1, 1.0}, {1, 2, 1.0}};
    spec.leak = lure::Vector::Constant(3, 2.0);
    spec.slopes = lure::Vector::Constant(3, 0.2);
    spec.n_inputs = 1;
    spec.inputs = {{0, 0, 1.0}};
    spec.nonlinearity = lure::Nonlinearity::saturating_abs(0.1, 1.0);
    return spec;
}

/// Two unit-weight triangles {0,1,2} and {3,4,5} joined by a weak bridge
/// (2,3). Slopes differ per community so the cluster masses separate the
/// community split from the other two-cluster partitions.
inline lure::NetworkSpec two_triangle_spec() {
    lure::NetworkSpec spec;
    spec.n_nodes = 6;
    spec.edges = {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0},
                  {3, 4, 1.0}, {3, 5, 1.0}, {4, 5, 1.0},
                  {2, 3, 0.1}};
    spec.leak = lure::Vector::Constant(6, 1.0);
    spec.slopes.resize(6);
    spec.slopes << 0.1, 0.1, 0.1, 0.4, 0.4, 0.4;
    spec.n_inputs = 1;
    spec.inputs = {{0, 0, 1.0}};
    spec.nonlinearity = lure::Nonlinearity::saturating_abs(0.05, 1.0);
    return spec;
}

/// Star-ish graph where nodes 3 and 4 are exact twins hanging off node 0;
/// the first greedy merge must pick them.
inline lure::NetworkSpec twins_spec() {
    lure::NetworkSpec spec;
    spec.n_nodes = 5;
    spec.edges = {{0, 1, 1.0}, {1, 2, 0.7}, {0, 3, 1.0}, {0, 4, 1.0}};
    spec.leak = lure::Vector::Constant(5, 2.0);
    spec.slopes = lure::Vector::Constant(5, 0.2);
    spec.n_inputs = 1;
    spec.inputs = {{0, 0, 1.0}};
    spec.nonlinearity = lure::Nonlinearity::saturating_abs(0.1, 1.0);
    return spec;
}

/// Two nodes with a strong edge, weak leak and a lopsided slope vector; the
/// SPR test on the full system fails for this weighting.
inline lure::NetworkSpec skewed_mu_spec() {
    lure::NetworkSpec spec;
    spec.n_nodes = 2;
    spec.edges = {{0, 1, 0.99}};
    spec.leak = lure::Vector::Constant(2, 0.01);
    spec.slopes.resize(2);
    spec.slopes << 100.0, 1.0;
    spec.n_inputs = 1;
    spec.inputs = {{0, 0, 1.0}};
    spec.nonlinearity = lure::Nonlinearity::saturating_abs(0.5, 1.0);
    return spec;
}

/// Benchmark-style network: preferential attachment, N = 100, m = 2, with
/// external inputs on the first two nodes.
inline lure::NetworkSpec paper_style_spec(std::uint64_t seed) {
    lure::NetworkSpec spec = lure::generate_ba_network(100, 2, seed);
    spec.n_inputs = 2;
    spec.inputs = {{0, 0, 1.0}, {1, 1, 1.0}};
    return spec;
}

/// 7-cluster benchmark partition: {1}, {2}, {3-22}, {23-42}, {43-62},
/// {63-81}, {82-100} in 1-based node numbering.
inline lure::Partition paper_partition() {
    std::vector<int> labels(100);
    labels[0] = 0;
    labels[1] = 1;
    for (int i = 2; i < 22; ++i) labels[i] = 2;
    for (int i = 22; i < 42; ++i) labels[i] = 3;
    for (int i = 42; i < 62; ++i) labels[i] = 4;
    for (int i = 62; i < 81; ++i) labels[i] = 5;
    for (int i = 81; i < 100; ++i) labels[i] = 6;
    return lure::Partition::from_labels(labels);
}

inline std::string temp_dir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "lure-test-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
    return std::string(buf.data());
}

}  // namespace test_support
