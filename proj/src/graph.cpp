#include "lure/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "lure/errors.hpp"
#include "lure/random_util.hpp"

namespace lure {

Matrix build_laplacian(const NetworkSpec& spec) {
    spec.validate();
    Matrix L = Matrix::Zero(spec.n_nodes, spec.n_nodes);
    for (const Edge& e : spec.edges) {
        L(e.i, e.j) -= e.weight;
        L(e.j, e.i) -= e.weight;
        L(e.i, e.i) += e.weight;
        L(e.j, e.j) += e.weight;
    }
    return L;
}

void check_laplacian(const Matrix& L, double max_weight) {
    const auto n = L.rows();
    if (L.cols() != n) throw NumericalError("check_laplacian: matrix not square");
    const double tol = 1e-12 * static_cast<double>(n) * std::max(max_weight, 1.0);

    std::ostringstream os;
    if ((L - L.transpose()).cwiseAbs().maxCoeff() > tol)
        os << "not symmetric; ";
    if (L.rowwise().sum().cwiseAbs().maxCoeff() > tol)
        os << "row sums not zero; ";
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (i != j && L(i, j) > tol) {
                os << "positive off-diagonal at (" << i + 1 << ", " << j + 1 << "); ";
                j = n;
                i = n;
            }
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (L + L.transpose()), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("check_laplacian: eigensolver failed");
    if (es.eigenvalues().minCoeff() < -tol)
        os << "not positive semidefinite (min eigenvalue " << es.eigenvalues().minCoeff() << "); ";

    const std::string msg = os.str();
    if (!msg.empty()) throw NumericalError("Laplacian invariant violated: " + msg);
}

NetworkSpec generate_ba_network(int n_nodes, int m_attach, std::uint64_t seed) {
    if (n_nodes < 2) throw ValidationError("generate_ba_network: n_nodes must be >= 2");
    if (m_attach < 1 || m_attach >= n_nodes)
        throw ValidationError("generate_ba_network: need 1 <= m_attach < n_nodes");

    std::mt19937_64 rng(seed);
    NetworkSpec spec;
    spec.n_nodes = n_nodes;

    // One entry per unit of degree; uniform draws from this list give
    // degree-proportional attachment.
    std::vector<int> repeated;
    const int seed_size = std::min(m_attach + 1, n_nodes);
    for (int i = 0; i < seed_size; ++i) {
        for (int j = i + 1; j < seed_size; ++j) spec.edges.push_back({i, j, 1.0});
        for (int k = 0; k < seed_size - 1; ++k) repeated.push_back(i);
    }

    for (int v = seed_size; v < n_nodes; ++v) {
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < m_attach)
            targets.insert(repeated[draw_below(rng, repeated.size())]);
        for (int t : targets) {
            spec.edges.push_back({std::min(t, v), std::max(t, v), 1.0});
            repeated.push_back(t);
        }
        for (int k = 0; k < m_attach; ++k) repeated.push_back(v);
    }

    spec.leak = Vector::Constant(n_nodes, 2.0);
    spec.slopes = Vector::Constant(n_nodes, 0.2);
    spec.nonlinearity = Nonlinearity::saturating_abs(0.1, 1.0);
    spec.n_inputs = 1;
    spec.validate();
    return spec;
}

Matrix assemble_state_matrix(const NetworkSpec& spec, const Matrix& L) {
    if (L.rows() != spec.n_nodes || L.cols() != spec.n_nodes)
        throw ValidationError("assemble_state_matrix: Laplacian dimensions do not match spec");
    if (spec.leak.size() != spec.n_nodes)
        throw ValidationError("assemble_state_matrix: leak vector length does not match spec");
    Matrix A_L = -L;
    A_L.diagonal() -= spec.leak;
    return A_L;
}

bool is_connected(const NetworkSpec& spec) {
    if (spec.n_nodes <= 1) return true;
    std::vector<std::vector<int>> adj(spec.n_nodes);
    for (const Edge& e : spec.edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    std::vector<char> seen(spec.n_nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == spec.n_nodes;
}

}  // namespace lure
