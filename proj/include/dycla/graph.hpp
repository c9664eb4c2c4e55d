#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dycla {

// Vertices are dense indices in [0, N). The vertex universe is fixed across
// all snapshots of a temporal network; a vertex that "left" the network is
// simply one with no incident edges.
using VertexId = std::uint32_t;

struct Edge {
  VertexId src{};
  VertexId dst{};
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One time-slice of the network. Immutable after construction and safe to
/// share across threads. Undirected graphs keep each edge once, normalized
/// to (min, max), and expose symmetric adjacency and equal in/out degrees.
class GraphSnapshot {
 public:
  GraphSnapshot(std::uint32_t n_vertices, bool directed, std::vector<Edge> edges)
      : n_vertices_(n_vertices), directed_(directed), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.src >= n_vertices_ || e.dst >= n_vertices_)
        throw std::invalid_argument("GraphSnapshot: edge endpoint out of range");
      if (e.src == e.dst)
        throw std::invalid_argument("GraphSnapshot: self-loops are not allowed");
      if (!directed_ && e.src > e.dst) std::swap(e.src, e.dst);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("GraphSnapshot: duplicate edge");

    out_adj_.resize(n_vertices_);
    in_degree_.assign(n_vertices_, 0);
    out_degree_.assign(n_vertices_, 0);
    for (const Edge& e : edges_) {
      out_adj_[e.src].push_back(e.dst);
      ++out_degree_[e.src];
      ++in_degree_[e.dst];
      if (!directed_) {
        out_adj_[e.dst].push_back(e.src);
        ++out_degree_[e.dst];
        ++in_degree_[e.src];
      }
    }
    for (auto& nb : out_adj_) std::sort(nb.begin(), nb.end());
  }

  std::uint32_t n_vertices() const { return n_vertices_; }
  bool directed() const { return directed_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Canonically sorted edge list; (min, max) pairs for undirected graphs.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Successors in a directed graph; all neighbors in an undirected one.
  const std::vector<VertexId>& out_neighbors(VertexId v) const {
    return out_adj_[v];
  }

  std::uint32_t in_degree(VertexId v) const { return in_degree_[v]; }
  std::uint32_t out_degree(VertexId v) const { return out_degree_[v]; }
  /// Total incident edges; meaningful for undirected graphs where
  /// in_degree == out_degree == degree.
  std::uint32_t degree(VertexId v) const { return out_degree_[v]; }

  bool has_edge(VertexId u, VertexId v) const {
    Edge probe{u, v};
    if (!directed_ && u > v) probe = Edge{v, u};
    return std::binary_search(edges_.begin(), edges_.end(), probe);
  }

  friend bool operator==(const GraphSnapshot& a, const GraphSnapshot& b) {
    return a.n_vertices_ == b.n_vertices_ && a.directed_ == b.directed_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::uint32_t n_vertices_;
  bool directed_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> out_adj_;
  std::vector<std::uint32_t> in_degree_;
  std::vector<std::uint32_t> out_degree_;
};

/// Ordered sequence of snapshots over one shared vertex universe.
class TemporalNetwork {
 public:
  explicit TemporalNetwork(std::vector<GraphSnapshot> snapshots)
      : snapshots_(std::move(snapshots)) {
    if (snapshots_.empty())
      throw std::invalid_argument("TemporalNetwork: needs at least one snapshot");
    const auto& head = snapshots_.front();
    for (const auto& s : snapshots_) {
      if (s.n_vertices() != head.n_vertices())
        throw std::invalid_argument("TemporalNetwork: snapshots disagree on vertex count");
      if (s.directed() != head.directed())
        throw std::invalid_argument("TemporalNetwork: snapshots disagree on directedness");
    }
  }

  std::uint32_t n_vertices() const { return snapshots_.front().n_vertices(); }
  bool directed() const { return snapshots_.front().directed(); }
  std::size_t size() const { return snapshots_.size(); }
  const GraphSnapshot& operator[](std::size_t t) const { return snapshots_[t]; }
  const std::vector<GraphSnapshot>& snapshots() const { return snapshots_; }

  auto begin() const { return snapshots_.begin(); }
  auto end() const { return snapshots_.end(); }

  friend bool operator==(const TemporalNetwork& a, const TemporalNetwork& b) {
    return a.snapshots_ == b.snapshots_;
  }

 private:
  std::vector<GraphSnapshot> snapshots_;
};

}  // namespace dycla
