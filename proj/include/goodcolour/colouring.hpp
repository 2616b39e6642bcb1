#ifndef GOODCOLOUR_COLOURING_HPP
#define GOODCOLOUR_COLOURING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goodcolour/exact.hpp"
#include "goodcolour/instance.hpp"

namespace goodcolour {

using Colouring = std::map<VertexId, int>;

constexpr unsigned long long kDefaultBudget = 100'000'000ULL;

struct BadCheck {
  bool bad = false;
  int witness_edge = -1;  // lowest-index bad edge
};

/// Is some edge's restriction in its bad family? Colouring must be total.
BadCheck is_bad(const Instance& instance, const Colouring& colouring);

struct CountResult {
  mpz_class count;
  // Bound fields, populated by verify_count_bound.
  bool has_bound = false;
  bool exact_comparison = false;            // big-integer comparison (vs log-space)
  std::optional<mpq_class> bound_rational;  // beta^|V| when beta is rational
  double bound_log = 0.0;                   // |V| * ln(beta)
  bool bound_satisfied = false;
};

/// Exact count of B-good L-colourings by exhaustive enumeration with
/// incremental edge checks. Rejects runs whose list-size product exceeds
/// the budget. `threads` partitions the first vertex's colours; the total
/// is summed in a fixed order, so output does not depend on thread count.
CountResult count_good(const Instance& instance, const ListAssignment& lists,
                       unsigned long long budget = kDefaultBudget, int threads = 1);

struct SearchOptions {
  enum class Strategy { Exhaustive, RandomGreedy };
  Strategy strategy = Strategy::Exhaustive;
  int restarts = 1000;
  std::uint64_t seed = 0;
};

struct SearchResult {
  std::optional<Colouring> colouring;
  bool certified_none = false;  // exhaustive search exhausted the space
  int attempts = 0;             // greedy restarts consumed
};

/// Exhaustive: backtracking over vertices in descending incident-edge
/// order; finds a colouring iff one exists. RandomGreedy: random vertex
/// order and random list colours, restarting on the first bad edge;
/// deterministic for a fixed seed.
SearchResult find_good(const Instance& instance, const ListAssignment& lists,
                       const SearchOptions& options = {});

/// Checks count_good >= beta^|V|; exact big-integer comparison.
CountResult verify_count_bound(const Instance& instance, const ListAssignment& lists,
                               const exact::ExactReal& beta,
                               unsigned long long budget = kDefaultBudget);
/// Same with a floating beta; compares logs with a 1e-12 margin.
CountResult verify_count_bound(const Instance& instance, const ListAssignment& lists, double beta,
                               unsigned long long budget = kDefaultBudget);

struct LemmaViolation {
  std::vector<VertexId> subset;
  VertexId removed;
  mpz_class count_sub;      // P(H)
  mpz_class count_without;  // P(H - v)
};

struct LemmaReport {
  bool ok = true;
  std::uint64_t subsets_checked = 0;
  std::uint64_t pairs_checked = 0;
  double min_ratio = 0.0;  // min P(H)/P(H-v) over pairs with P(H-v) > 0
  bool min_ratio_defined = false;
  std::vector<LemmaViolation> violations;
  /// Whether Eq.-style per-vertex feasibility held for this instance at
  /// (beta, c = smallest list size); when false the recurrence is an
  /// untested claim rather than a verified theorem consequence.
  bool key_satisfied = false;
};

/// Verifies P(H) >= beta * P(H - v) for every induced sub-hypergraph H
/// (all vertex subsets) and every vertex v of H. Exact comparisons.
LemmaReport verify_extension_lemma(const Instance& instance, const ListAssignment& lists,
                                   const exact::ExactReal& beta,
                                   unsigned long long budget = kDefaultBudget);
LemmaReport verify_extension_lemma(const Instance& instance, const ListAssignment& lists,
                                   double beta, unsigned long long budget = kDefaultBudget);

}  // namespace goodcolour

#endif  // GOODCOLOUR_COLOURING_HPP
