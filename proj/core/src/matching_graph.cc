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

#include "matchdec/matching_graph.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace matchdec {

void CheckMatrix::validate() const {
    if (num_rows < 0 || num_cols < 0)
        throw std::invalid_argument("check matrix dimensions must be non-negative");
    std::set<std::pair<std::int32_t, std::int32_t>> seen;
    for (const auto& [r, c] : entries) {
        if (r < 0 || r >= num_rows || c < 0 || c >= num_cols) {
            std::ostringstream msg;
            msg << "check matrix entry (" << r << ", " << c << ") out of range for " << num_rows
                << "x" << num_cols << " matrix";
            throw std::invalid_argument(msg.str());
        }
        if (!seen.insert({r, c}).second) {
            std::ostringstream msg;
            msg << "duplicate check matrix entry (" << r << ", " << c << ")";
            throw std::invalid_argument(msg.str());
        }
    }
}

std::vector<std::int32_t> CheckMatrix::column_weights() const {
    std::vector<std::int32_t> w(static_cast<std::size_t>(num_cols), 0);
    for (const auto& [r, c] : entries) {
        (void)r;
        w[static_cast<std::size_t>(c)]++;
    }
    return w;
}

MatchingGraph::MatchingGraph(NodeId num_nodes) {
    if (num_nodes < 0)
        throw std::invalid_argument("num_nodes must be non-negative");
    num_nodes_ = num_nodes;
    adjacency_.resize(static_cast<std::size_t>(num_nodes));
    boundary_flag_.assign(static_cast<std::size_t>(num_nodes), 0);
}

EdgeIndex MatchingGraph::add_edge(
    NodeId u, NodeId v, std::vector<QubitId> qubit_ids, double weight, std::optional<double> error_probability) {
    if (u < 0 || u >= num_nodes_ || v < 0 || v >= num_nodes_)
        throw std::invalid_argument(
            "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an endpoint outside [0, " +
            std::to_string(num_nodes_) + ")");
    if (u == v)
        throw std::invalid_argument("self-loop on node " + std::to_string(u) + " is not allowed");
    if (!(weight >= 0.0) || !std::isfinite(weight))
        throw std::invalid_argument(
            "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has negative or non-finite weight " +
            std::to_string(weight));
    if (error_probability.has_value() && !(*error_probability >= 0.0 && *error_probability <= 1.0))
        throw std::invalid_argument("error_probability must lie in [0, 1]");
    std::sort(qubit_ids.begin(), qubit_ids.end());
    qubit_ids.erase(std::unique(qubit_ids.begin(), qubit_ids.end()), qubit_ids.end());
    for (QubitId q : qubit_ids) {
        if (q < 0)
            throw std::invalid_argument("negative qubit id " + std::to_string(q));
        num_qubits_ = std::max(num_qubits_, q + 1);
    }

    EdgeIndex existing = find_edge(u, v);
    if (existing >= 0) {
        // Parallel edge: a minimum-weight solution never uses the heavier of
        // the two, so keep the strictly lighter edge.
        Edge& old = edges_[static_cast<std::size_t>(existing)];
        if (weight < old.weight) {
            old.qubit_ids = std::move(qubit_ids);
            old.weight = weight;
            old.error_probability = error_probability;
        }
        return existing;
    }

    EdgeIndex index = static_cast<EdgeIndex>(edges_.size());
    edges_.push_back(Edge{u, v, std::move(qubit_ids), weight, error_probability});
    adjacency_[static_cast<std::size_t>(u)].push_back(index);
    adjacency_[static_cast<std::size_t>(v)].push_back(index);
    return index;
}

void MatchingGraph::set_boundary(const std::vector<NodeId>& nodes) {
    for (NodeId n : nodes) {
        if (n < 0 || n >= num_nodes_)
            throw std::invalid_argument("boundary node " + std::to_string(n) + " is not a valid node id");
    }
    boundary_flag_.assign(static_cast<std::size_t>(num_nodes_), 0);
    for (NodeId n : nodes)
        boundary_flag_[static_cast<std::size_t>(n)] = 1;
    boundary_nodes_.assign(nodes.begin(), nodes.end());
    std::sort(boundary_nodes_.begin(), boundary_nodes_.end());
    boundary_nodes_.erase(
        std::unique(boundary_nodes_.begin(), boundary_nodes_.end()), boundary_nodes_.end());
}

EdgeIndex MatchingGraph::find_edge(NodeId u, NodeId v) const {
    if (u < 0 || u >= num_nodes_ || v < 0 || v >= num_nodes_)
        return -1;
    const auto& adj_u = adjacency_[static_cast<std::size_t>(u)];
    const auto& adj_v = adjacency_[static_cast<std::size_t>(v)];
    const auto& smaller = adj_u.size() <= adj_v.size() ? adj_u : adj_v;
    NodeId probe = adj_u.size() <= adj_v.size() ? u : v;
    NodeId want = probe == u ? v : u;
    for (EdgeIndex e : smaller) {
        if (other_endpoint(e, probe) == want)
            return e;
    }
    return -1;
}

bool MatchingGraph::all_probabilities_set() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) {
        return e.error_probability.has_value();
    });
}

void MatchingGraph::validate() {
    std::vector<std::string> problems;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const Edge& e = edges_[k];
        if (e.u < 0 || e.u >= num_nodes_ || e.v < 0 || e.v >= num_nodes_)
            problems.push_back("edge " + std::to_string(k) + " has an invalid endpoint");
        if (e.u == e.v)
            problems.push_back("edge " + std::to_string(k) + " is a self-loop");
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
            problems.push_back("negative or non-finite weight on edge " + std::to_string(k));
        for (QubitId q : e.qubit_ids) {
            if (q < 0 || q >= num_qubits_)
                problems.push_back(
                    "edge " + std::to_string(k) + " references qubit " + std::to_string(q) +
                    " outside [0, " + std::to_string(num_qubits_) + ")");
        }
        if (e.error_probability.has_value() &&
            !(*e.error_probability >= 0.0 && *e.error_probability <= 1.0))
            problems.push_back("edge " + std::to_string(k) + " has error_probability outside [0, 1]");
    }

    // Each edge must appear in exactly its two endpoints' adjacency lists.
    std::vector<std::int32_t> seen_count(edges_.size(), 0);
    for (NodeId u = 0; u < num_nodes_; ++u) {
        for (EdgeIndex e : adjacency_[static_cast<std::size_t>(u)]) {
            if (e < 0 || static_cast<std::size_t>(e) >= edges_.size()) {
                problems.push_back("adjacency of node " + std::to_string(u) + " references a missing edge");
                continue;
            }
            const Edge& ed = edges_[static_cast<std::size_t>(e)];
            if (ed.u != u && ed.v != u)
                problems.push_back(
                    "adjacency of node " + std::to_string(u) + " lists edge " + std::to_string(e) +
                    " which is not incident to it");
            seen_count[static_cast<std::size_t>(e)]++;
        }
    }
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (seen_count[k] != 2)
            problems.push_back("edge " + std::to_string(k) + " is out of sync with the adjacency lists");
    }

    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "matching graph validation failed:";
        for (const auto& p : problems)
            msg << "\n  - " << p;
        throw std::invalid_argument(msg.str());
    }

    // All boundary nodes must be mutually reachable at zero cost; insert any
    // missing zero-weight, qubit-free interconnects.
    for (std::size_t i = 0; i + 1 < boundary_nodes_.size(); ++i) {
        for (std::size_t j = i + 1; j < boundary_nodes_.size(); ++j) {
            if (find_edge(boundary_nodes_[i], boundary_nodes_[j]) < 0)
                add_edge(boundary_nodes_[i], boundary_nodes_[j], {}, 0.0, 0.0);
        }
    }
}

double weight_from_probability(double p) {
    if (!(p > 0.0 && p < 0.5))
        throw std::invalid_argument(
            "error probability " + std::to_string(p) + " must lie in (0, 0.5) to derive a weight");
    return std::log((1.0 - p) / p);
}

MatchingGraph from_check_matrix(
    const CheckMatrix& H, const std::vector<double>& weights, const std::vector<double>& error_probabilities) {
    H.validate();
    const std::size_t cols = static_cast<std::size_t>(H.num_cols);
    if (!weights.empty() && weights.size() != cols)
        throw std::invalid_argument("weights vector length does not match the number of columns");
    if (!error_probabilities.empty() && error_probabilities.size() != cols)
        throw std::invalid_argument("error_probabilities vector length does not match the number of columns");

    std::vector<std::int32_t> col_weight = H.column_weights();
    // Rows touching each column (at most two by the checks below).
    std::vector<std::pair<std::int32_t, std::int32_t>> col_rows(cols, {-1, -1});
    for (const auto& [r, c] : H.entries) {
        auto& slot = col_rows[static_cast<std::size_t>(c)];
        if (slot.first < 0)
            slot.first = r;
        else if (slot.second < 0)
            slot.second = r;
    }

    bool needs_boundary = false;
    for (std::size_t c = 0; c < cols; ++c) {
        if (col_weight[c] == 0 || col_weight[c] >= 3)
            throw std::invalid_argument(
                "column " + std::to_string(c) + " has weight " + std::to_string(col_weight[c]) +
                "; every column must have weight 1 or 2");
        if (col_weight[c] == 1)
            needs_boundary = true;
    }

    NodeId num_nodes = H.num_rows + (needs_boundary ? 1 : 0);
    MatchingGraph g(num_nodes);
    NodeId boundary = needs_boundary ? H.num_rows : -1;
    for (std::size_t c = 0; c < cols; ++c) {
        double w;
        std::optional<double> prob;
        if (!error_probabilities.empty())
            prob = error_probabilities[c];
        if (!weights.empty())
            w = weights[c];
        else if (prob.has_value())
            w = weight_from_probability(*prob);
        else
            w = 1.0;
        if (!(w >= 0.0))
            throw std::invalid_argument("negative weight for column " + std::to_string(c));
        NodeId u = col_rows[c].first;
        NodeId v = col_weight[c] == 2 ? col_rows[c].second : boundary;
        g.add_edge(u, v, {static_cast<QubitId>(c)}, w, prob);
    }
    if (needs_boundary)
        g.set_boundary({boundary});
    g.validate();
    return g;
}

Syndrome implied_syndrome(const MatchingGraph& g, const std::vector<std::uint8_t>& qubit_vector) {
    if (qubit_vector.size() != static_cast<std::size_t>(g.num_qubits()))
        throw std::invalid_argument("qubit vector length does not match num_qubits");
    Syndrome s(static_cast<std::size_t>(g.num_nodes()), 0);
    for (const Edge& e : g.edges()) {
        int parity = 0;
        for (QubitId q : e.qubit_ids)
            parity ^= qubit_vector[static_cast<std::size_t>(q)] & 1;
        if (parity) {
            s[static_cast<std::size_t>(e.u)] ^= 1;
            s[static_cast<std::size_t>(e.v)] ^= 1;
        }
    }
    for (NodeId b : g.boundary_nodes())
        s[static_cast<std::size_t>(b)] = 0;
    return s;
}

}  // namespace matchdec
