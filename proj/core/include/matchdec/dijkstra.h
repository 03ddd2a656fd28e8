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

#ifndef MATCHDEC_DIJKSTRA_H
#define MATCHDEC_DIJKSTRA_H

#include <cstdint>
#include <limits>
#include <vector>

#include "matchdec/matching_graph.h"

namespace matchdec {

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

/// A defect reached by local_dijkstra, in extraction (non-decreasing
/// distance) order. The source defect itself is the first entry.
struct DefectNeighbour {
    NodeId node = -1;
    double distance = 0.0;
};

/// Reusable distance/predecessor state for repeated Dijkstra runs on one
/// graph. Only the entries touched by a run are reset, so reset() costs
/// O(touched) rather than O(num_nodes). One scratch per worker; never share.
class DijkstraScratch {
  public:
    explicit DijkstraScratch(NodeId num_nodes);

    /// Restores every touched entry to its initial state (distance = +inf,
    /// predecessor = self). A no-op on a fresh or already-reset scratch.
    void reset();

    bool is_clean() const {
        return touched_.empty();
    }
    double distance(NodeId u) const {
        return distance_[static_cast<std::size_t>(u)];
    }
    /// Predecessor on the recorded shortest path, or u itself if unset.
    NodeId predecessor(NodeId u) const;
    /// Edge into u on the recorded shortest path, or -1 if unset.
    EdgeIndex predecessor_edge(NodeId u) const {
        return pred_edge_[static_cast<std::size_t>(u)];
    }
    NodeId capacity() const {
        return static_cast<NodeId>(distance_.size());
    }

    // Telemetry for the most recent run (cleared by reset()).
    std::size_t touched_count() const {
        return touched_.size();
    }
    std::size_t examined_count() const {
        return examined_count_;
    }

  private:
    friend void dijkstra_full(const MatchingGraph&, NodeId, DijkstraScratch&);
    friend std::vector<DefectNeighbour> local_dijkstra(
        const MatchingGraph&, const Syndrome&, int, NodeId, DijkstraScratch&);
    friend std::vector<EdgeIndex> recover_path(const DijkstraScratch&, const MatchingGraph&, NodeId);

    // Indexed binary min-heap keyed by (distance, node id); the id tiebreak
    // makes extraction order deterministic.
    bool heap_less(NodeId a, NodeId b) const;
    void heap_sift_up(std::size_t i);
    void heap_sift_down(std::size_t i);
    void heap_insert(NodeId u);
    void heap_decrease(NodeId u);
    NodeId heap_extract_min();
    void drain_heap();

    void touch(NodeId u);
    void require_clean() const;

    std::vector<double> distance_;
    std::vector<EdgeIndex> pred_edge_;
    std::vector<std::int32_t> heap_pos_;  // -1 when not queued
    std::vector<NodeId> heap_;
    std::vector<NodeId> touched_;
    std::size_t examined_count_ = 0;
    NodeId last_source_ = -1;
};

/// Single-source shortest paths to every node. Results are read back from
/// the scratch. Requires a reset scratch sized for g.
void dijkstra_full(const MatchingGraph& g, NodeId source, DijkstraScratch& scratch);

/// Dijkstra that stops once m defects (nodes with s[u] = 1) have been
/// examined, the source included. Returns the examined defects with their
/// exact shortest-path distances; fewer than m if the search exhausts the
/// component first. The scratch retains valid predecessors for every
/// returned defect until reset() is called.
std::vector<DefectNeighbour> local_dijkstra(
    const MatchingGraph& g, const Syndrome& s, int m, NodeId source, DijkstraScratch& scratch);

/// Edge indices of the recorded shortest path from the last run's source to
/// `target`, in source-to-target order. Empty when target is the source.
/// Throws if target was never touched.
std::vector<EdgeIndex> recover_path(const DijkstraScratch& scratch, const MatchingGraph& g, NodeId target);

}  // namespace matchdec

#endif
