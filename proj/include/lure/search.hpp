#pragma once

#include <vector>

#include "lure/lure_network.hpp"
#include "lure/partition.hpp"

namespace lure {

struct SearchResult {
    Partition partition;
    double gamma_H = 0.0;
};

/// gamma_H = ||H(s, Pi)||_inf for one candidate partition; the cost both
/// search strategies minimize.
double partition_gamma(const LureNetwork& model, const Partition& partition,
                       double rel_tol = 1e-6);

/// Enumerates every partition of the N nodes into exactly r clusters
/// (restricted growth strings, so each partition is visited once in lexical
/// order) and returns the gamma_H minimizer. Guarded to N <= 12; beyond that
/// the Bell-number growth makes enumeration pointless, use greedy_merge.
SearchResult exhaustive_search(const LureNetwork& model, int r, double rel_tol = 1e-6);

struct GreedyStep {
    int merged_a = 0;  // cluster labels merged at this step, 0-based
    int merged_b = 0;
    int clusters_after = 0;
    double gamma_H = 0.0;
};

struct GreedyResult {
    Partition partition;
    double gamma_H = 0.0;
    std::vector<GreedyStep> trace;
};

/// Agglomerative descent from the identity partition: each step merges the
/// cluster pair whose merge yields the smallest gamma_H (ties break to the
/// lowest pair), until r clusters remain.
GreedyResult greedy_merge(const LureNetwork& model, int r, double rel_tol = 1e-6);

}  // namespace lure
