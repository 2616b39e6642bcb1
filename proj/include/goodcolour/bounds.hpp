#ifndef GOODCOLOUR_BOUNDS_HPP
#define GOODCOLOUR_BOUNDS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "goodcolour/exact.hpp"
#include "goodcolour/hypergraph.hpp"
#include "goodcolour/instance.hpp"

namespace goodcolour {

/// Outcome of testing c >= Q_v(beta) at every vertex.
struct KeyReport {
  double beta = 1.0;
  long long c = 1;
  std::vector<double> slack;  // c - Q_v(beta), profile row order
  std::vector<VertexId> row_names;
  bool satisfied = false;
  int binding_row = -1;  // row with minimum slack
  bool exact_profile = true;
  double log_beta = 0.0;
  double count_log_lower_bound = 0.0;  // rows * ln(beta)
  bool beta_below_one = false;         // guarantee only meaningful for beta >= 1
};

/// Q_v(beta) = beta + sum_k beta^-k E_k(v).
double laurent_objective(const WeightProfile& profile, int row, double beta);

KeyReport check_key(const WeightProfile& profile, double beta, long long c);

struct OptimizeResult {
  double beta_star = 1.0;
  long long c_star = 1;
  double objective = 0.0;  // max_v Q_v(beta_star)
  bool linear = false;     // all weights zero: Q is linear, beta* = 1
};

/// Minimizes max_v Q_v(beta) over beta in [1, inf) by bracketed
/// golden-section search to 1e-9; c* = ceil(Q(beta*) - 1e-9).
OptimizeResult optimize_beta(const WeightProfile& profile);

// --- Closed forms -----------------------------------------------------------

struct ProperHypergraphParams {
  long long r;      // uniformity, >= 3
  long long delta;  // max degree, >= 1
};
struct ProperGraphParams {
  long long delta;  // >= 0
  double beta;      // >= 1
};
struct StarParams {
  long long delta;  // >= 1
};
struct NonrepetitiveParams {
  long long delta;  // >= 2; <= 2 is outside the formula's intended regime
};
struct FrugalParams {
  long long delta;
  long long k;  // delta > k >= 2
};
struct TransversalParams {
  long long r;  // >= 2
  long long t;  // >= 1
};
struct RamseyParams {
  long long k;  // >= 3
  long long c;  // >= 2
  std::optional<mpz_class> dk;  // D_k(G) when known
};
struct KSatParams {
  long long k;  // >= 2
};

using ClosedFormParams =
    std::variant<ProperHypergraphParams, ProperGraphParams, StarParams, NonrepetitiveParams,
                 FrugalParams, TransversalParams, RamseyParams, KSatParams>;

struct ClosedFormBound {
  std::optional<exact::ExactReal> beta;  // set when the theorem's beta is a pure root
  double beta_value = 0.0;
  std::optional<long long> c;       // number of colours / list size, exact ceiling
  std::optional<mpq_class> threshold;  // applicability threshold where the theorem has one
  bool threshold_satisfied = true;
  std::vector<std::string> notes;   // degenerate-regime flags
  WeightProfile parametric_profile; // the theorem's E_k upper bounds (empty when series-form)
};

ClosedFormBound closed_form_bound(const ClosedFormParams& params);

/// ceil((e (r (Delta-1) + 1))^(1/(r-1))), exact. r = 2 is a degenerate
/// evaluation (the companion closed form needs r >= 3); flagged.
struct LllBound {
  long long c;
  bool degenerate_r2 = false;
};
LllBound lll_bound(long long r, long long delta);

// --- Bound comparisons ------------------------------------------------------

struct ProperComparisonRow {
  long long r, delta;
  long long ours_c, lll_c;
  bool ours_leq;  // claimed for delta >= r-1
};
ProperComparisonRow compare_proper(long long r, long long delta);

struct EglComparisonRow {
  long long r, k;
  mpz_class egl_max_n;      // largest n with e (C(n,r) - C(n-r,r)) < k^r
  mpz_class ours_max_n;     // largest n with C(n-1,r-1) <= (r-1)^(r-1) k^r / r^r
  bool ours_wins;           // ours_max_n >= egl_max_n
  double ratio_lower_bound; // ((r-1)/r)^(r-1) (1 - r^2/(2n)) at n = ours_max_n
  bool exceeds_inv_e;
};
EglComparisonRow compare_egl(long long r, long long k);

struct RamseyComparisonRow {
  long long k, c;
  long long ours_max_n;     // largest n passing the m^m/(m-1)^(m-1) test
  long long spencer_max_n;  // largest n passing e C(k,2) (C(n-2,k-2)+1) < c^m
  bool ours_wins;
};
RamseyComparisonRow compare_ramsey(long long k, long long c);

/// Largest n with (m^m/(m-1)^(m-1)) C(n-2,k-2) <= c^m, m = C(k,2)-1.
long long ramsey_max_n(long long k, long long c);

// --- Vertex-dependent beta (graph lists) ------------------------------------

struct VertexBetaRow {
  VertexId vertex;
  mpq_class lhs;        // |L(v)|
  mpq_class rhs;        // 4 sum |L(v) cap L(w)| / |L(w)|
  bool holds;
};

struct VertexBetaReport {
  bool hypothesis_holds = true;
  std::vector<VertexBetaRow> rows;
  mpq_class count_bound;       // prod |L(v)|/2, exact
  double count_bound_log = 0.0;
  bool bound_below_one = false;  // degenerate: no existence claim intended
};

/// Per-vertex hypothesis |L(v)| >= 4 sum_w |L(v) cap L(w)|/|L(w)| on a
/// graph; on success the count bound prod |L(v)|/2 applies.
VertexBetaReport check_vertex_beta(const Hypergraph& g, const ListAssignment& lists);

}  // namespace goodcolour

#endif  // GOODCOLOUR_BOUNDS_HPP
