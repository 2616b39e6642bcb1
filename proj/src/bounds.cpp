#include "goodcolour/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>

namespace goodcolour {

namespace {

void require(bool ok, const std::string& hypothesis) {
  if (!ok) throw Error(ErrorCode::ParameterOutOfRange, hypothesis);
}

double row_objective(const std::map<int, mpz_class>& row, double beta) {
  double q = beta;
  for (const auto& [k, count] : row) {
    q += count.get_d() * std::pow(beta, -static_cast<double>(k));
  }
  return q;
}

/// Largest n >= lo with pred(n) true, where pred is monotone
/// (true then false). Returns lo - 1 when even pred(lo) fails.
long long max_true(long long lo, const std::function<bool(long long)>& pred) {
  if (!pred(lo)) return lo - 1;
  long long step = 1;
  long long last_true = lo;
  while (pred(last_true + step)) {
    last_true += step;
    step *= 2;
  }
  long long hi = last_true + step;  // pred(hi) false
  while (hi - last_true > 1) {
    long long mid = last_true + (hi - last_true) / 2;
    if (pred(mid)) {
      last_true = mid;
    } else {
      hi = mid;
    }
  }
  return last_true;
}

}  // namespace

double laurent_objective(const WeightProfile& profile, int row, double beta) {
  if (beta <= 0.0) throw Error(ErrorCode::NonPositiveBeta, "beta must be positive");
  if (row < 0 || row >= profile.row_count()) {
    throw Error(ErrorCode::ParameterOutOfRange, "profile row out of range");
  }
  return row_objective(profile.rows[row], beta);
}

KeyReport check_key(const WeightProfile& profile, double beta, long long c) {
  if (c < 1) throw Error(ErrorCode::ParameterOutOfRange, "c must be a positive integer");
  if (beta <= 0.0) throw Error(ErrorCode::NonPositiveBeta, "beta must be positive");
  KeyReport report;
  report.beta = beta;
  report.c = c;
  report.exact_profile = profile.exact;
  report.row_names = profile.row_names;
  report.beta_below_one = beta < 1.0;
  report.log_beta = std::log(beta);
  report.count_log_lower_bound = profile.row_count() * report.log_beta;
  report.satisfied = true;
  double worst = std::numeric_limits<double>::infinity();
  for (int v = 0; v < profile.row_count(); ++v) {
    double s = static_cast<double>(c) - row_objective(profile.rows[v], beta);
    report.slack.push_back(s);
    if (s < worst) {
      worst = s;
      report.binding_row = v;
    }
    if (s < 0.0) report.satisfied = false;
  }
  return report;
}

OptimizeResult optimize_beta(const WeightProfile& profile) {
  OptimizeResult result;
  mpz_class max_e0 = 0;
  bool all_zero_weight = true;
  for (const auto& row : profile.rows) {
    for (const auto& [k, count] : row) {
      if (k != 0 && count > 0) all_zero_weight = false;
      if (k == 0 && count > max_e0) max_e0 = count;
    }
  }
  if (all_zero_weight) {
    result.linear = true;
    result.beta_star = 1.0;
    result.objective = 1.0 + max_e0.get_d();
    result.c_star = 1 + max_e0.get_si();
    return result;
  }

  auto f = [&](double beta) {
    double worst = beta;  // no rows => Q = beta
    for (const auto& row : profile.rows) worst = std::max(worst, row_objective(row, beta));
    return worst;
  };

  double lo = 1.0, hi = 2.0;
  while (f(hi) < f(hi / 2) && hi < 1e18) hi *= 2;

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - (b - a) * invphi;
  double d = a + (b - a) * invphi;
  double fc = f(c), fd = f(d);
  while (b - a > 1e-9) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * invphi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * invphi;
      fd = f(d);
    }
  }
  result.beta_star = (a + b) / 2;
  result.objective = f(result.beta_star);
  result.c_star = static_cast<long long>(std::ceil(result.objective - 1e-9));
  return result;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

ClosedFormBound proper_hypergraph_bound(const ProperHypergraphParams& p) {
  require(p.r >= 3, "uniformity r must be >= 3");
  require(p.delta >= 1, "max degree must be >= 1");
  ClosedFormBound out;
  mpz_class base = mpz_class(p.r - 2) * p.delta;
  out.beta = {mpq_class(base), static_cast<unsigned long>(p.r - 1)};
  out.beta_value = out.beta->to_double();
  out.c = exact::ceil_scaled_root(p.r - 1, p.r - 2, base, p.r - 1);
  out.parametric_profile =
      WeightProfile::parametric({{static_cast<int>(p.r - 2), mpz_class(p.delta)}});
  return out;
}

ClosedFormBound proper_graph_bound(const ProperGraphParams& p) {
  require(p.delta >= 0, "max degree must be >= 0");
  require(p.beta >= 1.0, "beta must be >= 1");
  ClosedFormBound out;
  mpq_class beta_q(p.beta);  // exact binary-to-rational conversion
  out.beta = exact::ExactReal::rational(beta_q);
  out.beta_value = p.beta;
  out.c = exact::ceil_q(beta_q + p.delta);
  out.parametric_profile = WeightProfile::parametric({{0, mpz_class(p.delta)}});
  return out;
}

ClosedFormBound star_bound(const StarParams& p) {
  require(p.delta >= 1, "max degree must be >= 1");
  ClosedFormBound out;
  mpz_class two_delta = 2 * mpz_class(p.delta);
  mpz_class dm1 = p.delta - 1;
  out.beta = {mpq_class(two_delta * dm1 * dm1), 2};  // sqrt(2 Delta) (Delta-1)
  out.beta_value = out.beta->to_double();
  if (p.delta == 1) {
    out.c = 1;  // ceil(Delta + 0)
    out.notes.push_back("degenerate: beta = 0 < 1, no existence guarantee");
  } else {
    out.c = exact::ceil_offset_scaled_root(p.delta, dm1, 1, 8 * mpz_class(p.delta), 2);
  }
  out.parametric_profile = WeightProfile::parametric(
      {{0, mpz_class(p.delta)}, {1, 2 * mpz_class(p.delta) * dm1 * dm1}});
  return out;
}

ClosedFormBound nonrepetitive_bound(const NonrepetitiveParams& p) {
  require(p.delta >= 2, "max degree must be >= 2");
  ClosedFormBound out;
  if (p.delta == 2) {
    out.notes.push_back("Delta <= 2 is outside the formula's intended regime");
  }
  mpz_class dm1 = p.delta - 1;
  mpq_class eps_cubed(2, p.delta);
  eps_cubed.canonicalize();
  auto num_root = exact::perfect_root(mpz_class(eps_cubed.get_num()), 3);
  auto den_root = exact::perfect_root(mpz_class(eps_cubed.get_den()), 3);
  if (num_root && den_root) {
    mpq_class eps(*num_root, *den_root);
    eps.canonicalize();
    mpq_class beta = (1 + eps) * mpq_class(dm1 * dm1);
    mpq_class inv_eps = 1 / eps;
    mpq_class value = beta + inv_eps * inv_eps * (1 + eps) * (1 + eps) * p.delta;
    out.beta = exact::ExactReal::rational(beta);
    out.beta_value = beta.get_d();
    out.c = exact::ceil_q(value);
  } else {
    bool resolved = false;
    for (mpfr_prec_t prec = 96; prec <= (1 << 16) && !resolved; prec *= 2) {
      using exact::Interval;
      Interval eps = Interval::from(eps_cubed, prec).root(3);
      Interval one = Interval::from_ui(1, prec);
      Interval beta = (one + eps) * Interval::from(dm1 * dm1, prec);
      Interval series =
          (eps.reciprocal() + one).sqr() * Interval::from(mpz_class(p.delta), prec);
      Interval value = beta + series;
      if (auto c = value.definite_ceil()) {
        out.c = *c;
        out.beta_value = beta.midpoint_d();
        resolved = true;
      }
    }
    if (!resolved) std::abort();  // unreachable: the value is irrational here
  }
  out.notes.push_back("series-form profile: E_{t-1}(v) <= t Delta (Delta-1)^(2t-2) for all t >= 1");
  return out;
}

ClosedFormBound frugal_bound(const FrugalParams& p) {
  require(p.k >= 2, "frugality k must be >= 2");
  require(p.delta > p.k, "max degree must exceed k");
  ClosedFormBound out;
  mpz_class choices = exact::binomial(p.delta - 1, p.k);
  mpz_class base = mpz_class(p.k - 1) * p.delta * choices;
  out.beta = {mpq_class(base), static_cast<unsigned long>(p.k)};
  out.beta_value = out.beta->to_double();
  out.c = p.delta + exact::ceil_scaled_root(p.k, p.k - 1, base, p.k);
  out.parametric_profile = WeightProfile::parametric(
      {{0, mpz_class(p.delta)}, {static_cast<int>(p.k - 1), mpz_class(p.delta) * choices}});
  double asym = std::exp(1.0) *
                std::pow(static_cast<double>(p.delta), 1.0 + 1.0 / static_cast<double>(p.k)) /
                static_cast<double>(p.k);
  out.notes.push_back("asymptotic form (o(1) dropped): c ~ ceil(e Delta^(1+1/k)/k) = " +
                      std::to_string(static_cast<long long>(std::ceil(asym))));
  return out;
}

ClosedFormBound transversal_bound(const TransversalParams& p) {
  require(p.r >= 2, "uniformity r must be >= 2");
  require(p.t >= 1, "part size t must be >= 1");
  ClosedFormBound out;
  mpq_class beta(mpz_class(p.r - 1) * p.t, p.r);
  beta.canonicalize();
  out.beta = exact::ExactReal::rational(beta);
  out.beta_value = beta.get_d();
  out.c = p.t;
  // Stretched-edge cap per unit of |V_i|: r^-r (r-1)^(r-1) t^(r-1).
  mpq_class cap(exact::pow(mpz_class(p.r - 1), p.r - 1) * exact::pow(mpz_class(p.t), p.r - 1),
                exact::pow(mpz_class(p.r), p.r));
  cap.canonicalize();
  out.threshold = cap;
  out.notes.push_back("threshold is the stretched-edge cap per vertex of the part");
  mpq_class degree_cap = cap * p.t;
  mpz_class floor_cap = mpz_class(degree_cap.get_num()) / degree_cap.get_den();
  out.parametric_profile =
      WeightProfile::parametric({{static_cast<int>(p.r - 1), floor_cap}});
  return out;
}

ClosedFormBound ramsey_bound(const RamseyParams& p) {
  require(p.k >= 3, "clique size k must be >= 3");
  require(p.c >= 2, "colour count c must be >= 2");
  ClosedFormBound out;
  long long m = exact::binomial(p.k, 2).get_si() - 1;
  mpq_class threshold(exact::pow(mpz_class(m - 1), m - 1) * exact::pow(mpz_class(p.c), m),
                      exact::pow(mpz_class(m), m));
  threshold.canonicalize();
  out.threshold = threshold;
  out.c = p.c;
  if (p.dk) {
    out.threshold_satisfied = mpq_class(*p.dk) <= threshold;
    if (*p.dk == 0) {
      out.beta = exact::ExactReal::rational(mpq_class(p.c));
      out.beta_value = static_cast<double>(p.c);
      out.notes.push_back("D_k = 0: no cliques, every colouring is good (beta set to c)");
    } else {
      out.beta = {mpq_class(*p.dk * (m - 1)), static_cast<unsigned long>(m)};
      out.beta_value = out.beta->to_double();
    }
    out.parametric_profile =
        WeightProfile::parametric({{static_cast<int>(m - 1), *p.dk}});
  }
  return out;
}

ClosedFormBound ksat_bound(const KSatParams& p) {
  require(p.k >= 2, "clause width k must be >= 2");
  ClosedFormBound out;
  mpq_class beta(2 * (p.k - 1), p.k);
  beta.canonicalize();
  out.beta = exact::ExactReal::rational(beta);
  out.beta_value = beta.get_d();
  out.c = 2;
  mpq_class threshold(exact::pow(mpz_class(2), p.k) * exact::pow(mpz_class(p.k - 1), p.k - 1),
                      exact::pow(mpz_class(p.k), p.k));
  threshold.canonicalize();
  out.threshold = threshold;
  mpz_class floor_thr = mpz_class(threshold.get_num()) / threshold.get_den();
  out.parametric_profile =
      WeightProfile::parametric({{static_cast<int>(p.k - 1), floor_thr}});
  return out;
}

}  // namespace

ClosedFormBound closed_form_bound(const ClosedFormParams& params) {
  return std::visit(
      [](const auto& p) -> ClosedFormBound {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ProperHypergraphParams>) return proper_hypergraph_bound(p);
        else if constexpr (std::is_same_v<T, ProperGraphParams>) return proper_graph_bound(p);
        else if constexpr (std::is_same_v<T, StarParams>) return star_bound(p);
        else if constexpr (std::is_same_v<T, NonrepetitiveParams>) return nonrepetitive_bound(p);
        else if constexpr (std::is_same_v<T, FrugalParams>) return frugal_bound(p);
        else if constexpr (std::is_same_v<T, TransversalParams>) return transversal_bound(p);
        else if constexpr (std::is_same_v<T, RamseyParams>) return ramsey_bound(p);
        else return ksat_bound(p);
      },
      params);
}

LllBound lll_bound(long long r, long long delta) {
  require(r >= 2, "uniformity r must be >= 2");
  require(delta >= 1, "max degree must be >= 1");
  mpz_class m = mpz_class(r) * (delta - 1) + 1;
  LllBound out;
  out.c = exact::ceil_e_scaled_root(m, r - 1);
  out.degenerate_r2 = (r == 2);
  return out;
}

// ---------------------------------------------------------------------------
// Comparisons

ProperComparisonRow compare_proper(long long r, long long delta) {
  ProperComparisonRow row;
  row.r = r;
  row.delta = delta;
  row.ours_c = *closed_form_bound(ProperHypergraphParams{r, delta}).c;
  row.lll_c = lll_bound(r, delta).c;
  row.ours_leq = row.ours_c <= row.lll_c;
  return row;
}

EglComparisonRow compare_egl(long long r, long long k) {
  require(r >= 2, "uniformity r must be >= 2");
  require(k >= 1, "part size k must be >= 1");
  EglComparisonRow row;
  row.r = r;
  row.k = k;
  mpz_class kr = exact::pow(mpz_class(k), r);

  // Eq-style LLL condition: e (C(n,r) - C(n-r,r)) < k^r.
  auto egl_pred = [&](long long n) {
    mpz_class count = exact::binomial(n, r) - exact::binomial(n - r, r);
    if (count <= 0) return true;
    return exact::e_times_less(count, kr);
  };
  row.egl_max_n = max_true(r, egl_pred);

  // Our condition: C(n-1,r-1) r^r <= (r-1)^(r-1) k^r.
  mpz_class rhs = exact::pow(mpz_class(r - 1), r - 1) * kr;
  mpz_class rr = exact::pow(mpz_class(r), r);
  auto ours_pred = [&](long long n) { return exact::binomial(n - 1, r - 1) * rr <= rhs; };
  row.ours_max_n = max_true(r, ours_pred);

  row.ours_wins = row.ours_max_n >= row.egl_max_n;
  double n = row.ours_max_n.get_d();
  double base = std::pow((static_cast<double>(r) - 1.0) / r, static_cast<double>(r - 1));
  row.ratio_lower_bound = n > 0 ? base * (1.0 - static_cast<double>(r) * r / (2.0 * n)) : 0.0;
  row.exceeds_inv_e = row.ratio_lower_bound > 1.0 / std::exp(1.0);
  return row;
}

long long ramsey_max_n(long long k, long long c) {
  require(k >= 3, "clique size k must be >= 3");
  require(c >= 2, "colour count c must be >= 2");
  long long m = exact::binomial(k, 2).get_si() - 1;
  mpz_class rhs = exact::pow(mpz_class(m - 1), m - 1) * exact::pow(mpz_class(c), m);
  mpz_class mm = exact::pow(mpz_class(m), m);
  auto pred = [&](long long n) {
    return mm * exact::binomial(n >= 2 ? n - 2 : 0, k - 2) <= rhs;
  };
  return max_true(3, pred);
}

RamseyComparisonRow compare_ramsey(long long k, long long c) {
  RamseyComparisonRow row;
  row.k = k;
  row.c = c;
  row.ours_max_n = ramsey_max_n(k, c);
  long long m = exact::binomial(k, 2).get_si() - 1;
  mpz_class cm = exact::pow(mpz_class(c), m);
  mpz_class pairs = exact::binomial(k, 2);
  auto spencer_pred = [&](long long n) {
    mpz_class lhs = pairs * (exact::binomial(n >= 2 ? n - 2 : 0, k - 2) + 1);
    return exact::e_times_less(lhs, cm);
  };
  row.spencer_max_n = max_true(3, spencer_pred);
  row.ours_wins = row.ours_max_n >= row.spencer_max_n;
  return row;
}

VertexBetaReport check_vertex_beta(const Hypergraph& g, const ListAssignment& lists) {
  if (!g.is_graph()) throw Error(ErrorCode::NotAGraph, "vertex-beta check needs a 2-uniform host");
  lists.validate_for(g);
  VertexBetaReport report;
  report.count_bound = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& lv = lists.list(g.vertex_name(v));
    VertexBetaRow row;
    row.vertex = g.vertex_name(v);
    row.lhs = static_cast<long>(lv.size());
    mpq_class sum = 0;
    for (int w : g.neighbours(v)) {
      const auto& lw = lists.list(g.vertex_name(w));
      std::vector<int> common;
      std::set_intersection(lv.begin(), lv.end(), lw.begin(), lw.end(),
                            std::back_inserter(common));
      mpq_class term(static_cast<long>(common.size()), static_cast<long>(lw.size()));
      sum += term;
    }
    row.rhs = 4 * sum;
    row.rhs.canonicalize();
    row.holds = row.lhs >= row.rhs;
    if (!row.holds) report.hypothesis_holds = false;
    report.count_bound *= mpq_class(static_cast<long>(lv.size()), 2);
    report.count_bound_log += std::log(static_cast<double>(lv.size()) / 2.0);
    report.rows.push_back(std::move(row));
  }
  report.count_bound.canonicalize();
  report.bound_below_one = report.count_bound < 1;
  return report;
}

}  // namespace goodcolour
