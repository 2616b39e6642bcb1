#ifndef GOODCOLOUR_EXACT_HPP
#define GOODCOLOUR_EXACT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>

namespace goodcolour::exact {

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class pow(const mpz_class& base, unsigned long e);
mpq_class pow(const mpq_class& base, unsigned long e);

/// Integer p-th root; returns the root when n is a perfect p-th power.
std::optional<mpz_class> perfect_root(const mpz_class& n, unsigned long p);

/// floor(sqrt(n)) for n >= 0.
mpz_class isqrt(const mpz_class& n);

/// ceil(p/q) for q > 0, exact.
mpz_class ceil_div(const mpz_class& p, const mpz_class& q);
long long ceil_q(const mpq_class& x);

/// A real of the form (num/den)^(1/root) with num/den >= 0.
/// Covers every beta the closed forms produce exactly: rationals
/// (root = 1), sqrt(Delta), ((k-1)*Delta*binom(...))^(1/k), ...
struct ExactReal {
  mpq_class base;
  unsigned long root = 1;

  static ExactReal rational(mpq_class q) { return {std::move(q), 1}; }
  double to_double() const;
  /// Exact rational value when the root extracts; nullopt if irrational.
  std::optional<mpq_class> as_rational() const;
};

/// Exact comparison lhs >= rhs^n, all quantities nonnegative.
bool geq_power(const mpz_class& lhs, const ExactReal& rhs, unsigned long n);

/// Exact comparison lhs >= rhs * scale, lhs/scale nonnegative integers.
bool geq_scaled(const mpz_class& lhs, const ExactReal& rhs, const mpz_class& scale);

/// Directed-rounding enclosure [lo, hi] of a nonnegative real. All
/// operands of a binary op must share the working precision. Queries
/// answer only when both endpoints agree, so a caller refines by
/// recomputing at higher precision until the answer is definite.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval&);
  Interval(Interval&&) noexcept;
  Interval& operator=(Interval);
  ~Interval();

  static Interval from(const mpz_class& z, mpfr_prec_t prec);
  static Interval from(const mpq_class& q, mpfr_prec_t prec);
  static Interval from_ui(unsigned long v, mpfr_prec_t prec);
  static Interval euler_e(mpfr_prec_t prec);

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;  // requires result >= 0 semantics not enforced
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // o strictly positive
  Interval root(unsigned long p) const;
  Interval reciprocal() const;
  Interval sqr() const;

  std::optional<long long> definite_ceil() const;
  std::optional<long long> definite_floor() const;
  std::optional<mpz_class> definite_floor_z() const;
  /// Definite strict comparison against an integer.
  std::optional<bool> definitely_less_than(const mpz_class& z) const;

  double midpoint_d() const;
  mpfr_prec_t precision() const { return prec_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

/// ceil of (a/b) * n^(1/p) for integers a,b > 0, n >= 0, p >= 1:
/// perfect-power shortcut, else directed-rounding refinement.
long long ceil_scaled_root(const mpz_class& a, const mpz_class& b, const mpz_class& n,
                           unsigned long p);

/// ceil of add + (a/b) * n^(1/p); same machinery with an integer offset.
long long ceil_offset_scaled_root(const mpz_class& add, const mpz_class& a, const mpz_class& b,
                                  const mpz_class& n, unsigned long p);

/// ceil of (e * m)^(1/p) for integer m >= 1; e is irrational, so the
/// directed-rounding refinement always terminates.
long long ceil_e_scaled_root(const mpz_class& m, unsigned long p);

/// True iff e * lhs < rhs for positive integers lhs, rhs (exact: never equal).
bool e_times_less(const mpz_class& lhs, const mpz_class& rhs);

/// floor(bound / e) for a positive integer bound (never an integer itself).
mpz_class floor_div_e(const mpz_class& bound);

std::string to_decimal(const mpz_class& z);

/// Snap a double through a 15-significant-digit decimal round trip.
double round_sig15(double x);

}  // namespace goodcolour::exact

#endif  // GOODCOLOUR_EXACT_HPP
