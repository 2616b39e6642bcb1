#include "goodcolour/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace goodcolour {

Hypergraph Hypergraph::build(std::vector<VertexId> vertices,
                             const std::vector<std::vector<VertexId>>& edges) {
  Hypergraph h;
  h.vertices_ = std::move(vertices);
  h.index_.reserve(h.vertices_.size());
  for (int i = 0; i < static_cast<int>(h.vertices_.size()); ++i) {
    auto [it, fresh] = h.index_.emplace(h.vertices_[i], i);
    if (!fresh) throw Error(ErrorCode::DuplicateVertexId, "vertex '" + h.vertices_[i] + "'");
  }
  h.edges_.reserve(edges.size());
  h.incidence_.assign(h.vertices_.size(), {});
  for (size_t e = 0; e < edges.size(); ++e) {
    std::vector<int> handles;
    handles.reserve(edges[e].size());
    for (const auto& id : edges[e]) {
      auto it = h.index_.find(id);
      if (it == h.index_.end()) {
        throw Error(ErrorCode::EdgeNotSubset,
                    "edge " + std::to_string(e) + " mentions unknown vertex '" + id + "'");
      }
      handles.push_back(it->second);
    }
    std::sort(handles.begin(), handles.end());
    handles.erase(std::unique(handles.begin(), handles.end()), handles.end());
    if (handles.size() < 2) {
      throw Error(ErrorCode::EdgeTooSmall,
                  "edge " + std::to_string(e) + " has fewer than 2 distinct vertices");
    }
    for (int v : handles) h.incidence_[v].push_back(static_cast<int>(e));
    h.edges_.push_back(std::move(handles));
  }
  return h;
}

int Hypergraph::vertex_handle(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "'" + id + "'");
  return it->second;
}

const std::vector<int>& Hypergraph::edge(int e) const {
  if (e < 0 || e >= edge_count()) {
    throw Error(ErrorCode::EdgeIndexOutOfRange, std::to_string(e));
  }
  return edges_[e];
}

std::vector<VertexId> Hypergraph::edge_names(int e) const {
  std::vector<VertexId> names;
  for (int v : edge(e)) names.push_back(vertices_[v]);
  return names;
}

int Hypergraph::max_degree() const {
  int d = 0;
  for (const auto& inc : incidence_) d = std::max(d, static_cast<int>(inc.size()));
  return d;
}

std::optional<int> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  size_t r = edges_[0].size();
  for (const auto& e : edges_) {
    if (e.size() != r) return std::nullopt;
  }
  return static_cast<int>(r);
}

bool Hypergraph::is_graph() const {
  for (const auto& e : edges_) {
    if (e.size() != 2) return false;
  }
  return true;
}

bool Hypergraph::is_simple_graph() const {
  if (!is_graph()) return false;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_) {
    if (!seen.insert({e[0], e[1]}).second) return false;
  }
  return true;
}

std::vector<int> Hypergraph::neighbours(int v) const {
  std::set<int> out;
  for (int e : incidence_[v]) {
    for (int w : edges_[e]) {
      if (w != v) out.insert(w);
    }
  }
  return {out.begin(), out.end()};
}

DegreeStats degree_stats(const Hypergraph& h) {
  DegreeStats s;
  for (int v = 0; v < h.vertex_count(); ++v) {
    s.degree[h.vertex_name(v)] = h.degree(v);
  }
  s.max_degree = h.max_degree();
  s.uniformity = h.uniformity();
  return s;
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph& h,
                                           const std::vector<VertexId>& keep) {
  std::vector<bool> in(h.vertex_count(), false);
  for (const auto& id : keep) in[h.vertex_handle(id)] = true;

  std::vector<VertexId> vertices;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (in[v]) vertices.push_back(h.vertex_name(v));
  }
  std::vector<std::vector<VertexId>> edges;
  std::vector<int> origin;
  for (int e = 0; e < h.edge_count(); ++e) {
    bool inside = true;
    for (int v : h.edge(e)) {
      if (!in[v]) {
        inside = false;
        break;
      }
    }
    if (inside) {
      edges.push_back(h.edge_names(e));
      origin.push_back(e);
    }
  }
  return {Hypergraph::build(std::move(vertices), edges), std::move(origin)};
}

ListAssignment::ListAssignment(std::map<VertexId, std::vector<int>> lists)
    : lists_(std::move(lists)) {
  for (auto& [id, colours] : lists_) {
    std::sort(colours.begin(), colours.end());
    colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
  }
}

ListAssignment ListAssignment::uniform(const Hypergraph& h, int c) {
  if (c < 1) throw Error(ErrorCode::ParameterOutOfRange, "list size must be >= 1");
  std::vector<int> colours(c);
  for (int i = 0; i < c; ++i) colours[i] = i + 1;
  std::map<VertexId, std::vector<int>> lists;
  for (const auto& id : h.vertices()) lists[id] = colours;
  return ListAssignment(std::move(lists));
}

const std::vector<int>& ListAssignment::list(const VertexId& id) const {
  auto it = lists_.find(id);
  if (it == lists_.end()) throw Error(ErrorCode::ListMissing, "no list for vertex '" + id + "'");
  return it->second;
}

std::optional<int> ListAssignment::validate_for(const Hypergraph& h) const {
  std::optional<int> common;
  bool uniform = true;
  for (const auto& id : h.vertices()) {
    auto it = lists_.find(id);
    if (it == lists_.end() || it->second.empty()) {
      throw Error(ErrorCode::ListMissing, "vertex '" + id + "' has no (nonempty) list");
    }
    int size = static_cast<int>(it->second.size());
    if (!common) {
      common = size;
    } else if (*common != size) {
      uniform = false;
    }
  }
  if (!uniform) return std::nullopt;
  return common;
}

}  // namespace goodcolour
