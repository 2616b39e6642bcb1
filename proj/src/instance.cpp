#include "goodcolour/instance.hpp"

#include <algorithm>
#include <set>

namespace goodcolour {

namespace {

constexpr size_t kExplicitEdgeCap = 16;

std::string join_ids(const std::vector<VertexId>& ids) {
  std::string s = "{";
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += ids[i];
  }
  return s + "}";
}

// Positions of the edge's vertices ordered by vertex id; determining-set
// enumeration and tie-breaking run in id order.
std::vector<int> positions_by_id(const Hypergraph& h, const std::vector<int>& edge) {
  std::vector<int> pos(edge.size());
  for (size_t i = 0; i < edge.size(); ++i) pos[i] = static_cast<int>(i);
  std::sort(pos.begin(), pos.end(), [&](int a, int b) {
    return h.vertex_name(edge[a]) < h.vertex_name(edge[b]);
  });
  return pos;
}

// True iff all colour rows have pairwise-distinct restrictions to `sel`.
bool determines(const std::vector<std::vector<int>>& rows, const std::vector<int>& sel) {
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = i + 1; j < rows.size(); ++j) {
      bool agree = true;
      for (int p : sel) {
        if (rows[i][p] != rows[j][p]) {
          agree = false;
          break;
        }
      }
      if (agree) return false;
    }
  }
  return true;
}

}  // namespace

BadFamily monochromatic_family(const std::vector<VertexId>& edge) {
  return EqualityPartition{{edge}};
}

static CompiledFamily compile_family(const Hypergraph& h, int e, const BadFamily& family,
                                     InstanceValidation& report) {
  const auto& edge = h.edge(e);
  auto position_of = [&](const VertexId& id) -> int {
    int v = h.has_vertex(id) ? h.vertex_handle(id) : -1;
    for (size_t i = 0; i < edge.size(); ++i) {
      if (edge[i] == v) return static_cast<int>(i);
    }
    return -1;
  };

  CompiledFamily out;
  if (const auto* part = std::get_if<EqualityPartition>(&family)) {
    out.is_partition = true;
    std::vector<bool> covered(edge.size(), false);
    for (const auto& block : part->blocks) {
      std::vector<int> positions;
      for (const auto& id : block) {
        int p = position_of(id);
        if (p < 0) {
          report.ok = false;
          report.issues.push_back({e, id, "block vertex not in edge"});
          continue;
        }
        if (covered[p]) {
          report.ok = false;
          report.issues.push_back({e, id, "vertex in two blocks"});
          continue;
        }
        covered[p] = true;
        positions.push_back(p);
      }
      if (positions.size() < 2) {
        report.ok = false;
        report.issues.push_back(
            {e, block.empty() ? std::optional<VertexId>{} : std::optional<VertexId>{block[0]},
             "singleton block " + join_ids(block) +
                 " (family must be determined by a subset of e minus v for every v)"});
      }
      std::sort(positions.begin(), positions.end());
      out.blocks.push_back(std::move(positions));
    }
    for (size_t p = 0; p < edge.size(); ++p) {
      if (!covered[p]) {
        report.ok = false;
        report.issues.push_back({e, h.vertex_name(edge[p]), "vertex not covered by any block"});
      }
    }
  } else {
    const auto& xs = std::get<ExplicitSet>(family);
    out.is_partition = false;
    if (edge.size() > kExplicitEdgeCap) {
      report.ok = false;
      report.issues.push_back({e, std::nullopt,
                               "explicit family on edge of size " + std::to_string(edge.size()) +
                                   " exceeds the cap of " + std::to_string(kExplicitEdgeCap)});
      return out;
    }
    for (const auto& colouring : xs.colourings) {
      std::vector<int> row(edge.size());
      std::vector<bool> set(edge.size(), false);
      bool bad = false;
      for (const auto& [id, colour] : colouring) {
        int p = position_of(id);
        if (p < 0) {
          report.ok = false;
          report.issues.push_back({e, id, "colouring mentions vertex outside the edge"});
          bad = true;
          break;
        }
        row[p] = colour;
        set[p] = true;
      }
      if (bad) continue;
      if (std::find(set.begin(), set.end(), false) != set.end()) {
        report.ok = false;
        report.issues.push_back({e, std::nullopt, "colouring does not cover the whole edge"});
        continue;
      }
      out.colourings.push_back(std::move(row));
    }
    std::set<std::vector<int>> distinct(out.colourings.begin(), out.colourings.end());
    if (distinct.size() != out.colourings.size()) {
      report.ok = false;
      report.issues.push_back({e, std::nullopt, "duplicate colourings in explicit family"});
    }
    // The instance assumption: for every v, restrictions to e minus v are
    // pairwise distinct (B_e is determined by a subset avoiding v).
    for (size_t skip = 0; skip < edge.size(); ++skip) {
      std::vector<int> sel;
      for (size_t p = 0; p < edge.size(); ++p) {
        if (p != skip) sel.push_back(static_cast<int>(p));
      }
      if (!determines(out.colourings, sel)) {
        report.ok = false;
        report.issues.push_back({e, h.vertex_name(edge[skip]),
                                 "two colourings agree on e minus v but differ at v"});
      }
    }
  }
  return out;
}

static InstanceValidation validate_parts(const Hypergraph& h,
                                         const std::vector<BadFamily>& families,
                                         std::vector<CompiledFamily>* compiled_out) {
  InstanceValidation report;
  if (static_cast<int>(families.size()) != h.edge_count()) {
    report.ok = false;
    report.issues.push_back({-1, std::nullopt,
                             "expected " + std::to_string(h.edge_count()) + " families, got " +
                                 std::to_string(families.size())});
    return report;
  }
  for (int e = 0; e < h.edge_count(); ++e) {
    CompiledFamily cf = compile_family(h, e, families[e], report);
    if (compiled_out) compiled_out->push_back(std::move(cf));
  }
  return report;
}

Instance Instance::make(Hypergraph h, std::vector<BadFamily> families,
                        std::optional<ListAssignment> lists) {
  Instance inst;
  InstanceValidation report = validate_parts(h, families, &inst.compiled_);
  if (!report.ok) {
    const auto& first = report.issues.front();
    throw Error(ErrorCode::InvalidFamily,
                "edge " + std::to_string(first.edge) +
                    (first.vertex ? ", vertex '" + *first.vertex + "'" : "") + ": " + first.detail);
  }
  if (lists) lists->validate_for(h);
  inst.h_ = std::move(h);
  inst.families_ = std::move(families);
  inst.lists_ = std::move(lists);
  return inst;
}

Instance Instance::make_unchecked(Hypergraph h, std::vector<BadFamily> families,
                                  std::optional<ListAssignment> lists) {
  Instance inst;
  InstanceValidation report;
  for (int e = 0; e < h.edge_count() && e < static_cast<int>(families.size()); ++e) {
    inst.compiled_.push_back(compile_family(h, e, families[e], report));
  }
  inst.h_ = std::move(h);
  inst.families_ = std::move(families);
  inst.lists_ = std::move(lists);
  return inst;
}

Instance Instance::induced(const std::vector<VertexId>& keep) const {
  auto sub = induced_subhypergraph(h_, keep);
  std::vector<BadFamily> fams;
  fams.reserve(sub.edge_origin.size());
  for (int orig : sub.edge_origin) fams.push_back(families_[orig]);
  std::optional<ListAssignment> lists;
  if (lists_) {
    std::map<VertexId, std::vector<int>> sub_lists;
    for (const auto& id : sub.hypergraph.vertices()) sub_lists[id] = lists_->list(id);
    lists = ListAssignment(std::move(sub_lists));
  }
  return make(std::move(sub.hypergraph), std::move(fams), std::move(lists));
}

InstanceValidation validate_instance(const Instance& instance) {
  return validate_parts(instance.hypergraph(), instance.families(), nullptr);
}

std::vector<VertexId> min_determining_set(const Instance& instance, int edge, const VertexId& v) {
  const Hypergraph& h = instance.hypergraph();
  const auto& e = h.edge(edge);  // throws EdgeIndexOutOfRange
  int vh = h.vertex_handle(v);
  int vpos = -1;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == vh) vpos = static_cast<int>(i);
  }
  if (vpos < 0) {
    throw Error(ErrorCode::VertexNotInEdge,
                "'" + v + "' not in edge " + std::to_string(edge));
  }

  const CompiledFamily& cf = instance.compiled(edge);
  std::vector<VertexId> result;
  if (cf.is_partition) {
    // One representative per block; in v's block take the smallest other id.
    for (const auto& block : cf.blocks) {
      VertexId best;
      bool have = false;
      for (int p : block) {
        if (p == vpos) continue;
        const VertexId& id = h.vertex_name(e[p]);
        if (!have || id < best) {
          best = id;
          have = true;
        }
      }
      if (!have) throw Error(ErrorCode::NotDeterminable, "block has no vertex besides '" + v + "'");
      result.push_back(best);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  // Explicit family: ascending-cardinality, lexicographic scan over subsets
  // of e minus v (candidates in id order).
  auto order = positions_by_id(h, e);
  std::vector<int> candidates;
  for (int p : order) {
    if (p != vpos) candidates.push_back(p);
  }
  int n = static_cast<int>(candidates.size());
  for (int m = 0; m <= n; ++m) {
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    while (true) {
      std::vector<int> sel;
      for (int i : pick) sel.push_back(candidates[i]);
      if (determines(cf.colourings, sel)) {
        for (int p : sel) result.push_back(h.vertex_name(e[p]));
        std::sort(result.begin(), result.end());
        return result;
      }
      // next m-combination in lex order
      int i = m - 1;
      while (i >= 0 && pick[i] == n - m + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::NotDeterminable,
              "no subset of e minus '" + v + "' determines the family of edge " +
                  std::to_string(edge));
}

int pair_weight(const Instance& instance, int edge, const VertexId& v) {
  const Hypergraph& h = instance.hypergraph();
  const auto& e = h.edge(edge);
  const CompiledFamily& cf = instance.compiled(edge);
  if (cf.is_partition) {
    int vh = h.vertex_handle(v);
    if (std::find(e.begin(), e.end(), vh) == e.end()) {
      throw Error(ErrorCode::VertexNotInEdge, "'" + v + "' not in edge " + std::to_string(edge));
    }
    return static_cast<int>(e.size()) - 1 - static_cast<int>(cf.blocks.size());
  }
  return static_cast<int>(e.size()) - 1 -
         static_cast<int>(min_determining_set(instance, edge, v).size());
}

WeightProfile weight_profile(const Instance& instance) {
  const Hypergraph& h = instance.hypergraph();
  WeightProfile profile;
  profile.exact = true;
  profile.rows.resize(h.vertex_count());
  profile.row_names = h.vertices();
  for (int v = 0; v < h.vertex_count(); ++v) {
    for (int e : h.incident_edges(v)) {
      int k = pair_weight(instance, e, h.vertex_name(v));
      profile.rows[v][k] += 1;
    }
  }
  return profile;
}

}  // namespace goodcolour
