#include "lure/partition.hpp"

#include <map>
#include <sstream>

#include "lure/errors.hpp"

namespace lure {

Partition Partition::from_labels(const std::vector<int>& labels) {
    if (labels.empty()) throw ValidationError("partition: assignment is empty");
    Partition part;
    part.assignment.reserve(labels.size());
    std::map<int, int> canonical;
    for (int label : labels) {
        const auto [it, inserted] = canonical.insert({label, static_cast<int>(canonical.size())});
        (void)inserted;
        part.assignment.push_back(it->second);
    }
    part.r = static_cast<int>(canonical.size());
    return part;
}

Partition Partition::identity(int n) {
    if (n < 1) throw ValidationError("partition: n must be >= 1");
    Partition part;
    part.assignment.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) part.assignment[static_cast<std::size_t>(i)] = i;
    part.r = n;
    return part;
}

Partition Partition::single_cluster(int n) {
    if (n < 1) throw ValidationError("partition: n must be >= 1");
    Partition part;
    part.assignment.assign(static_cast<std::size_t>(n), 0);
    part.r = 1;
    return part;
}

namespace {

void validate_partition(const Partition& part) {
    const int n = part.n();
    if (n < 1) throw ValidationError("partition: assignment is empty");
    if (part.r < 1 || part.r > n) {
        std::ostringstream os;
        os << "partition: r = " << part.r << " out of range for " << n << " nodes";
        throw ValidationError(os.str());
    }
    std::vector<int> counts(static_cast<std::size_t>(part.r), 0);
    for (int i = 0; i < n; ++i) {
        const int label = part.assignment[static_cast<std::size_t>(i)];
        if (label < 0 || label >= part.r) {
            std::ostringstream os;
            os << "partition: label " << label << " at node " << i + 1
               << " outside [0, " << part.r << ")";
            throw ValidationError(os.str());
        }
        ++counts[static_cast<std::size_t>(label)];
    }
    for (int j = 0; j < part.r; ++j)
        if (counts[static_cast<std::size_t>(j)] == 0) {
            std::ostringstream os;
            os << "partition: cluster " << j + 1 << " is empty";
            throw ValidationError(os.str());
        }
}

}  // namespace

Matrix characteristic_matrix(const Partition& partition) {
    validate_partition(partition);
    Matrix Pi = Matrix::Zero(partition.n(), partition.r);
    for (int i = 0; i < partition.n(); ++i)
        Pi(i, partition.assignment[static_cast<std::size_t>(i)]) = 1.0;
    return Pi;
}

Matrix generalized_projection(const Matrix& Pi, const Vector& mu) {
    const auto n = Pi.rows();
    const auto r = Pi.cols();
    if (mu.size() != n)
        throw ValidationError("generalized_projection: mu length does not match Pi rows");
    for (Eigen::Index i = 0; i < n; ++i)
        if (!(mu(i) > 0.0))
            throw ValidationError("generalized_projection: mu must be strictly positive");

    std::vector<int> cluster_of(static_cast<std::size_t>(n), -1);
    std::vector<int> column_count(static_cast<std::size_t>(r), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < r; ++j) {
            const double v = Pi(i, j);
            if (v == 0.0) continue;
            if (v != 1.0 || cluster_of[static_cast<std::size_t>(i)] != -1)
                throw ValidationError("generalized_projection: Pi is not a characteristic matrix");
            cluster_of[static_cast<std::size_t>(i)] = static_cast<int>(j);
            ++column_count[static_cast<std::size_t>(j)];
        }
        if (cluster_of[static_cast<std::size_t>(i)] == -1)
            throw ValidationError("generalized_projection: Pi has a zero row");
    }
    for (Eigen::Index j = 0; j < r; ++j)
        if (column_count[static_cast<std::size_t>(j)] == 0)
            throw ValidationError("generalized_projection: Pi has an empty column");

    Vector cluster_mass = Vector::Zero(r);
    for (Eigen::Index i = 0; i < n; ++i)
        cluster_mass(cluster_of[static_cast<std::size_t>(i)]) += mu(i);

    Matrix Pi_dagger = Matrix::Zero(r, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const int j = cluster_of[static_cast<std::size_t>(i)];
        Pi_dagger(j, i) = mu(i) / cluster_mass(j);
    }
    return Pi_dagger;
}

}  // namespace lure
