#pragma once

#include <vector>

#include "lure/types.hpp"

namespace lure {

/// Node-to-cluster assignment. Labels are 0-based and canonicalized to
/// first-occurrence order so equal partitions always serialize identically;
/// file formats use 1-based labels.
struct Partition {
    std::vector<int> assignment;
    int r = 0;

    int n() const { return static_cast<int>(assignment.size()); }

    /// Canonicalizes arbitrary integer labels; throws ValidationError when
    /// empty. Every distinct input label becomes one cluster.
    static Partition from_labels(const std::vector<int>& labels);
    static Partition identity(int n);
    static Partition single_cluster(int n);
};

/// N x r matrix with Pi_ij = 1 iff node i belongs to cluster j; exactly one 1
/// per row and no empty column.
Matrix characteristic_matrix(const Partition& partition);

/// K_mu-weighted left inverse (Pi^T K Pi)^{-1} Pi^T K, assembled per cluster:
/// row j carries mu_k / (sum of mu over cluster j) on the members of cluster
/// j and zeros elsewhere. Pi^T K Pi is diagonal, so no linear solve is needed.
Matrix generalized_projection(const Matrix& Pi, const Vector& mu);

}  // namespace lure
