#pragma once

#include <optional>
#include <vector>

#include "lure/nonlinearity.hpp"
#include "lure/types.hpp"

namespace lure {

/// Undirected weighted edge, 0-based endpoints with i < j.
struct Edge {
    int i = 0;
    int j = 0;
    double weight = 0.0;
};

/// External input entering one node through one channel, 0-based indices.
struct InputGain {
    int node = 0;
    int input = 0;
    double gain = 0.0;
};

/// Human-editable description of a diffusively coupled network: a weighted
/// undirected graph plus per-node dynamics parameters. Indices are 0-based in
/// memory and 1-based in the JSON file format.
struct NetworkSpec {
    int n_nodes = 0;
    std::vector<Edge> edges;
    Vector leak;    ///< a_i > 0, per-node self-dynamics rate
    Vector slopes;  ///< mu_i > 0, per-node sector bound
    std::vector<InputGain> inputs;
    int n_inputs = 1;
    std::optional<Nonlinearity> nonlinearity;

    /// Throws ValidationError listing every offending field.
    void validate() const;

    /// N x p input gain matrix assembled from `inputs`.
    Matrix input_matrix() const;
};

}  // namespace lure
