#include "lure/search.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "lure/errors.hpp"
#include "lure/error_bound.hpp"
#include "lure/hinf.hpp"
#include "lure/parallel.hpp"

namespace lure {

double partition_gamma(const LureNetwork& model, const Partition& partition,
                       double rel_tol) {
    const ReducedModel reduced = reduce(model, partition);
    return hinf_norm(build_H_system(model, reduced), rel_tol);
}

namespace {

void enumerate_rgs(std::vector<int>& labels, int pos, int max_used, int r,
                   const std::function<void(const std::vector<int>&)>& visit) {
    const int n = static_cast<int>(labels.size());
    if (pos == n) {
        if (max_used + 1 == r) visit(labels);
        return;
    }
    // Prune: the remaining positions must be able to introduce the missing labels.
    const int missing = r - (max_used + 1);
    if (missing > n - pos) return;
    const int top = std::min(max_used + 1, r - 1);
    for (int v = 0; v <= top; ++v) {
        labels[pos] = v;
        enumerate_rgs(labels, pos + 1, std::max(max_used, v), r, visit);
    }
}

}  // namespace

SearchResult exhaustive_search(const LureNetwork& model, int r, double rel_tol) {
    const int n = model.n();
    if (n > 12)
        throw ValidationError("exhaustive_search: limited to N <= 12, use greedy_merge for " +
                              std::to_string(n) + " nodes");
    if (r < 1 || r > n)
        throw ValidationError("exhaustive_search: need 1 <= r <= N");

    std::vector<std::vector<int>> candidates;
    std::vector<int> labels(n, 0);
    enumerate_rgs(labels, 1, 0, r, [&](const std::vector<int>& l) { candidates.push_back(l); });

    std::vector<double> costs(candidates.size());
    parallel_for(static_cast<int>(candidates.size()), [&](int idx) {
        Partition p;
        p.assignment = candidates[idx];
        p.r = r;
        costs[idx] = partition_gamma(model, p, rel_tol);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (costs[i] < costs[best]) best = i;

    SearchResult result;
    result.partition.assignment = candidates[best];
    result.partition.r = r;
    result.gamma_H = costs[best];
    return result;
}

GreedyResult greedy_merge(const LureNetwork& model, int r, double rel_tol) {
    const int n = model.n();
    if (r < 1 || r >= n)
        throw ValidationError("greedy_merge: need 1 <= r < N");

    Partition current = Partition::identity(n);

    GreedyResult result;
    while (current.r > r) {
        const int k = current.r;
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);

        std::vector<Partition> merged(pairs.size());
        std::vector<double> costs(pairs.size());
        parallel_for(static_cast<int>(pairs.size()), [&](int idx) {
            const auto [a, b] = pairs[idx];
            Partition p = current;
            p.r = k - 1;
            for (int& l : p.assignment) {
                if (l == b) l = a;
                else if (l > b) --l;
            }
            merged[idx] = std::move(p);
            costs[idx] = partition_gamma(model, merged[idx], rel_tol);
        });

        std::size_t best = 0;
        for (std::size_t i = 1; i < pairs.size(); ++i)
            if (costs[i] < costs[best]) best = i;

        GreedyStep step;
        step.merged_a = pairs[best].first;
        step.merged_b = pairs[best].second;
        step.clusters_after = k - 1;
        step.gamma_H = costs[best];
        result.trace.push_back(step);

        current = merged[best];
        result.gamma_H = costs[best];
    }

    result.partition = std::move(current);
    return result;
}

}  // namespace lure
