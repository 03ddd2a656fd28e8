// Copyright 2026 matchdec contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATCHDEC_MATCHING_GRAPH_H
#define MATCHDEC_MATCHING_GRAPH_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace matchdec {

using NodeId = std::int32_t;
using QubitId = std::int32_t;
using EdgeIndex = std::int32_t;

/// Binary vector over detector nodes. A 1 marks a defect.
using Syndrome = std::vector<std::uint8_t>;

/// Binary vector over fault (qubit) ids, the decoder's output.
using Correction = std::vector<std::uint8_t>;

/// A single fault mechanism: flipping this edge toggles both endpoint checks
/// and every qubit in `qubit_ids`. An empty qubit set marks a virtual edge
/// (e.g. a zero-weight connection between boundary nodes).
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    std::vector<QubitId> qubit_ids;  // sorted, duplicate-free
    double weight = 0.0;
    std::optional<double> error_probability;
};

/// Sparse binary parity-check matrix given as (row, col) coordinates.
struct CheckMatrix {
    std::int32_t num_rows = 0;
    std::int32_t num_cols = 0;
    std::vector<std::pair<std::int32_t, std::int32_t>> entries;

    /// Rejects out-of-range or duplicate coordinates.
    void validate() const;
    /// Column weights (number of nonzero rows per column).
    std::vector<std::int32_t> column_weights() const;
};

/// Weighted undirected graph whose nodes are check operators (plus optional
/// boundary nodes) and whose edges are single fault mechanisms.
///
/// After validate() the graph is immutable by convention and safe to share
/// read-only across decoder workers.
class MatchingGraph {
  public:
    MatchingGraph() = default;
    explicit MatchingGraph(NodeId num_nodes);

    NodeId num_nodes() const {
        return num_nodes_;
    }
    QubitId num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Edge>& edges() const {
        return edges_;
    }
    const Edge& edge(EdgeIndex e) const {
        return edges_[static_cast<std::size_t>(e)];
    }
    /// Indices of edges incident to u.
    const std::vector<EdgeIndex>& adjacent_edges(NodeId u) const {
        return adjacency_[static_cast<std::size_t>(u)];
    }
    /// Boundary node ids, sorted ascending.
    const std::vector<NodeId>& boundary_nodes() const {
        return boundary_nodes_;
    }
    bool is_boundary(NodeId u) const {
        return boundary_flag_[static_cast<std::size_t>(u)] != 0;
    }
    NodeId other_endpoint(EdgeIndex e, NodeId u) const {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        return ed.u == u ? ed.v : ed.u;
    }

    /// Adds an edge. If an edge between u and v already exists, the one with
    /// strictly smaller weight is kept and the other discarded. num_qubits
    /// grows to cover any new qubit ids. Returns the index of the surviving
    /// edge. Throws std::invalid_argument on self-loops, invalid node ids,
    /// negative weights or probabilities outside [0, 1].
    EdgeIndex add_edge(
        NodeId u,
        NodeId v,
        std::vector<QubitId> qubit_ids,
        double weight,
        std::optional<double> error_probability = std::nullopt);

    /// Flags the given nodes as boundary nodes (replacing any previous set).
    void set_boundary(const std::vector<NodeId>& nodes);

    /// Checks all graph invariants, collecting every violation into a single
    /// std::invalid_argument. Inserts missing zero-weight, qubit-free edges
    /// between boundary nodes so that all boundary nodes are mutually
    /// connected at zero cost. A disconnected graph is not an error.
    void validate();

    /// Index of the edge between u and v, or -1.
    EdgeIndex find_edge(NodeId u, NodeId v) const;

    /// True if every edge has error_probability set (required for sampling).
    bool all_probabilities_set() const;

  private:
    NodeId num_nodes_ = 0;
    QubitId num_qubits_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> adjacency_;
    std::vector<std::uint8_t> boundary_flag_;
    std::vector<NodeId> boundary_nodes_;
};

/// w = log((1-p)/p). Requires p in (0, 1/2) so that the weight is positive
/// and shortest-path machinery stays valid.
double weight_from_probability(double p);

/// Builds a matching graph from a parity-check matrix whose columns all have
/// weight 1 or 2. Weight-2 columns become internal edges; if any column has
/// weight 1, a single boundary node is appended and every weight-1 column
/// connects its sole check to it. Column j becomes the edge with
/// qubit_ids = {j}.
///
/// If `weights` is empty and `error_probabilities` is given, weights are
/// derived as log((1-p)/p). If both are empty, weights default to 1.0.
MatchingGraph from_check_matrix(
    const CheckMatrix& H,
    const std::vector<double>& weights = {},
    const std::vector<double>& error_probabilities = {});

/// Syndrome implied by a binary qubit vector: each edge whose qubit set has
/// odd overlap with `qubit_vector` toggles both endpoints; boundary rows are
/// zeroed. This is the graph's implied check-matrix product H*c.
Syndrome implied_syndrome(const MatchingGraph& g, const std::vector<std::uint8_t>& qubit_vector);

}  // namespace matchdec

#endif
