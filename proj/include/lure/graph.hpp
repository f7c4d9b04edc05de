#pragma once

#include <cstdint>

#include "lure/network_spec.hpp"
#include "lure/types.hpp"

namespace lure {

/// Weighted graph Laplacian: L_ij = -w_ij off the diagonal where an edge
/// exists (0 otherwise), L_ii = sum of incident weights. Validates the spec.
Matrix build_laplacian(const NetworkSpec& spec);

/// Checks symmetry, zero row sums, nonpositive off-diagonals and positive
/// semidefiniteness to tolerance 1e-12 * N * max_weight; throws
/// NumericalError on violation.
void check_laplacian(const Matrix& L, double max_weight);

/// Preferential-attachment graph: a complete graph on m_attach + 1 nodes,
/// then each new node attaches m_attach edges to distinct existing nodes
/// chosen with probability proportional to current degree. Unit edge weights.
/// Node parameters are left at documented defaults for the caller to
/// override: leak = 2, slopes = 0.2 with a matching saturating nonlinearity
/// (slope exactly 0.2), no inputs, n_inputs = 1. Deterministic per seed.
NetworkSpec generate_ba_network(int n_nodes, int m_attach, std::uint64_t seed);

/// State matrix -diag(a) - L; symmetric negative definite for valid specs.
Matrix assemble_state_matrix(const NetworkSpec& spec, const Matrix& L);

/// True when every node is reachable from node 0 (vacuously true for N = 1).
bool is_connected(const NetworkSpec& spec);

}  // namespace lure
