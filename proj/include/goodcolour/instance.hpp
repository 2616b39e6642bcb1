#ifndef GOODCOLOUR_INSTANCE_HPP
#define GOODCOLOUR_INSTANCE_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "goodcolour/hypergraph.hpp"

namespace goodcolour {

/// Bad-colouring family of one edge, in terms of vertex ids.
/// EqualityPartition: the forbidden colourings are exactly those constant
/// on every block (blocks may share colours). ExplicitSet: an explicit
/// finite list of forbidden colourings of the edge.
struct EqualityPartition {
  std::vector<std::vector<VertexId>> blocks;
};

struct ExplicitSet {
  std::vector<std::map<VertexId, int>> colourings;
};

using BadFamily = std::variant<EqualityPartition, ExplicitSet>;

BadFamily monochromatic_family(const std::vector<VertexId>& edge);

/// Internal position-aligned form: positions index into the edge's sorted
/// handle array.
struct CompiledFamily {
  bool is_partition;
  std::vector<std::vector<int>> blocks;       // partition: positions per block
  std::vector<std::vector<int>> colourings;   // explicit: colour rows, position-aligned
};

struct FamilyIssue {
  int edge = -1;
  std::optional<VertexId> vertex;  // offending vertex when relevant
  std::string detail;
};

struct InstanceValidation {
  bool ok = true;
  std::vector<FamilyIssue> issues;
};

/// The pair (G, B): hypergraph plus one bad family per edge, optionally
/// carrying a canonical list assignment. Immutable once made; `make`
/// validates every family invariant, including that each B_e is determined
/// by a subset of e minus v for every v in e.
class Instance {
 public:
  static Instance make(Hypergraph h, std::vector<BadFamily> families,
                       std::optional<ListAssignment> lists = std::nullopt);
  /// Skips validation; for feeding validate_instance with bad input.
  static Instance make_unchecked(Hypergraph h, std::vector<BadFamily> families,
                                 std::optional<ListAssignment> lists = std::nullopt);

  const Hypergraph& hypergraph() const { return h_; }
  const std::vector<BadFamily>& families() const { return families_; }
  const CompiledFamily& compiled(int e) const { return compiled_[e]; }
  const std::optional<ListAssignment>& lists() const { return lists_; }

  Instance induced(const std::vector<VertexId>& keep) const;

 private:
  Hypergraph h_;
  std::vector<BadFamily> families_;
  std::vector<CompiledFamily> compiled_;
  std::optional<ListAssignment> lists_;
};

InstanceValidation validate_instance(const Instance& instance);

/// Minimum-cardinality S inside edge-minus-v that determines B_e; ties
/// broken toward the lexicographically smallest id set.
std::vector<VertexId> min_determining_set(const Instance& instance, int edge, const VertexId& v);

/// |e| - 1 - |S|.
int pair_weight(const Instance& instance, int edge, const VertexId& v);

/// Per-vertex weight tallies E_k(v). Exact profiles come from an instance;
/// parametric ones carry theorem upper bounds and say so.
struct WeightProfile {
  bool exact = true;
  std::vector<std::map<int, mpz_class>> rows;
  std::vector<VertexId> row_names;  // empty for parametric profiles

  int row_count() const { return static_cast<int>(rows.size()); }

  static WeightProfile parametric(std::map<int, mpz_class> bounds) {
    WeightProfile p;
    p.exact = false;
    p.rows.push_back(std::move(bounds));
    return p;
  }
};

WeightProfile weight_profile(const Instance& instance);

}  // namespace goodcolour

#endif  // GOODCOLOUR_INSTANCE_HPP
