#ifndef GOODCOLOUR_HYPERGRAPH_HPP
#define GOODCOLOUR_HYPERGRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "goodcolour/errors.hpp"

namespace goodcolour {

using VertexId = std::string;

/// Immutable hypergraph. Vertex ids are opaque; internally every vertex
/// gets a dense handle (its position in the vertex list) and edges are
/// stored as handle arrays sorted ascending. Parallel edges are distinct
/// entries; edges are addressed by index.
class Hypergraph {
 public:
  static Hypergraph build(std::vector<VertexId> vertices,
                          const std::vector<std::vector<VertexId>>& edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const VertexId& vertex_name(int v) const { return vertices_[v]; }
  int vertex_handle(const VertexId& id) const;  // throws UnknownVertex
  bool has_vertex(const VertexId& id) const { return index_.count(id) > 0; }

  const std::vector<int>& edge(int e) const;  // throws EdgeIndexOutOfRange
  std::vector<VertexId> edge_names(int e) const;
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  const std::vector<int>& incident_edges(int v) const { return incidence_[v]; }
  int degree(int v) const { return static_cast<int>(incidence_[v].size()); }
  int max_degree() const;
  /// r when every edge has size r, nullopt otherwise (or when edgeless).
  std::optional<int> uniformity() const;
  bool is_graph() const;         // 2-uniform (vacuously true when edgeless)
  bool is_simple_graph() const;  // is_graph and no parallel edges

  std::vector<int> neighbours(int v) const;  // distinct, sorted (graph use)

  bool operator==(const Hypergraph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::unordered_map<VertexId, int> index_;
  std::vector<std::vector<int>> edges_;      // sorted dense handles
  std::vector<std::vector<int>> incidence_;  // vertex -> incident edge indices
};

struct DegreeStats {
  std::map<VertexId, int> degree;
  int max_degree = 0;
  std::optional<int> uniformity;
};

DegreeStats degree_stats(const Hypergraph& h);

/// Result of restricting to a vertex subset: edges are exactly those fully
/// inside `keep`; edge_origin maps each surviving edge to its index in the
/// parent, so per-edge metadata can follow the restriction.
struct InducedSubhypergraph {
  Hypergraph hypergraph;
  std::vector<int> edge_origin;
};

InducedSubhypergraph induced_subhypergraph(const Hypergraph& h,
                                           const std::vector<VertexId>& keep);

/// Per-vertex colour lists.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::map<VertexId, std::vector<int>> lists);

  /// Same list {1..c} for every vertex of h.
  static ListAssignment uniform(const Hypergraph& h, int c);

  const std::vector<int>& list(const VertexId& id) const;
  bool has(const VertexId& id) const { return lists_.count(id) > 0; }
  const std::map<VertexId, std::vector<int>>& lists() const { return lists_; }

  /// Checks every vertex of h has a nonempty list; returns the common list
  /// size when all lists are equal-sized.
  std::optional<int> validate_for(const Hypergraph& h) const;

 private:
  std::map<VertexId, std::vector<int>> lists_;  // sorted, deduplicated
};

}  // namespace goodcolour

#endif  // GOODCOLOUR_HYPERGRAPH_HPP
