#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revposet/window.hpp"

namespace revposet {

/// Simple undirected graph on vertices 0..n-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0) : n_(n), adj_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
  void connect(std::size_t i, std::size_t j, bool on = true);
  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

/// Edges between distinct comparable elements.
SimpleGraph comparability_graph(const Window& w);
SimpleGraph complement(const SimpleGraph& g);
/// Complement taken only across the bipartition `side` (true/false per
/// vertex); edges inside a side are kept.
SimpleGraph bipartite_complement(const SimpleGraph& g, const std::vector<bool>& side);

/// Backtracking search for a vertex bijection g -> h (index i of g maps to
/// result[i] of h).
std::optional<std::vector<std::size_t>> graphs_isomorphic(const SimpleGraph& g,
                                                          const SimpleGraph& h);
bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h, const std::vector<std::size_t>& map);

/// Window-scale check of one of the comparability-graph observations.
struct GraphClaimResult {
  std::string claim;
  std::size_t vertices = 0;
  /// The shipped alignment bijection is an isomorphism.
  bool shipped_ok = false;
  /// Backtracking found some isomorphism independently.
  bool search_ok = false;
};

/// Claims: "F1-complement" (vs F4), "F2-complement" (vs F5), "F3-complement"
/// (vs F6), "F8-bipartite" (vs F3). `half` sets the number of elements taken
/// per family, so windows have 2*half or more vertices.
GraphClaimResult check_graph_claim(const std::string& claim, std::size_t half);
std::vector<std::string> graph_claims();

}  // namespace revposet
