#include "goodcolour/exact.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>

namespace goodcolour::exact {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class pow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpq_class pow(const mpq_class& base, unsigned long e) {
  mpq_class r(pow(mpz_class(base.get_num()), e), pow(mpz_class(base.get_den()), e));
  r.canonicalize();
  return r;
}

std::optional<mpz_class> perfect_root(const mpz_class& n, unsigned long p) {
  assert(n >= 0 && p >= 1);
  mpz_class root;
  int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), p);
  if (exact != 0) return root;
  return std::nullopt;
}

mpz_class isqrt(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class ceil_div(const mpz_class& p, const mpz_class& q) {
  assert(q > 0);
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return r;
}

long long ceil_q(const mpq_class& x) {
  return ceil_div(mpz_class(x.get_num()), mpz_class(x.get_den())).get_si();
}

double ExactReal::to_double() const {
  double b = base.get_d();
  if (root == 1) return b;
  return std::pow(b, 1.0 / static_cast<double>(root));
}

std::optional<mpq_class> ExactReal::as_rational() const {
  if (root == 1) return base;
  auto num = perfect_root(mpz_class(base.get_num()), root);
  auto den = perfect_root(mpz_class(base.get_den()), root);
  if (num && den) {
    mpq_class q(*num, *den);
    q.canonicalize();
    return q;
  }
  return std::nullopt;
}

bool geq_power(const mpz_class& lhs, const ExactReal& rhs, unsigned long n) {
  assert(lhs >= 0 && rhs.base >= 0);
  // lhs >= (num/den)^(n/root)  <=>  lhs^root * den^n >= num^n
  mpz_class l = pow(lhs, rhs.root) * pow(mpz_class(rhs.base.get_den()), n);
  mpz_class r = pow(mpz_class(rhs.base.get_num()), n);
  return l >= r;
}

bool geq_scaled(const mpz_class& lhs, const ExactReal& rhs, const mpz_class& scale) {
  assert(lhs >= 0 && scale >= 0 && rhs.base >= 0);
  // lhs >= (num/den)^(1/root) * scale  <=>  lhs^root * den >= num * scale^root
  mpz_class l = pow(lhs, rhs.root) * rhs.base.get_den();
  mpz_class r = mpz_class(rhs.base.get_num()) * pow(scale, rhs.root);
  return l >= r;
}

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from(const mpz_class& z, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from(const mpq_class& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_ui(unsigned long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_ui(r.lo_, v, MPFR_RNDD);
  mpfr_set_ui(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::euler_e(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_t one;
  mpfr_init2(one, prec);
  mpfr_set_ui(one, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, one, MPFR_RNDD);
  mpfr_exp(r.hi_, one, MPFR_RNDU);
  mpfr_clear(one);
  return r;
}

Interval Interval::operator+(const Interval& o) const {
  assert(prec_ == o.prec_);
  Interval r(prec_);
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  assert(prec_ == o.prec_);
  Interval r(prec_);
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  // Nonnegative operands assumed.
  assert(prec_ == o.prec_);
  Interval r(prec_);
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  assert(prec_ == o.prec_);
  assert(mpfr_sgn(o.lo_) > 0);
  Interval r(prec_);
  mpfr_div(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_div(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::root(unsigned long p) const {
  Interval r(prec_);
  mpfr_rootn_ui(r.lo_, lo_, p, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, hi_, p, MPFR_RNDU);
  return r;
}

Interval Interval::reciprocal() const {
  assert(mpfr_sgn(lo_) > 0);
  Interval r(prec_);
  mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::sqr() const {
  Interval r(prec_);
  mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
  return r;
}

std::optional<long long> Interval::definite_ceil() const {
  mpfr_t cl, ch;
  mpfr_init2(cl, prec_);
  mpfr_init2(ch, prec_);
  mpfr_ceil(cl, lo_);
  mpfr_ceil(ch, hi_);
  std::optional<long long> result;
  if (mpfr_equal_p(cl, ch) && mpfr_fits_slong_p(cl, MPFR_RNDN)) {
    result = mpfr_get_si(cl, MPFR_RNDN);
  }
  mpfr_clear(cl);
  mpfr_clear(ch);
  return result;
}

std::optional<long long> Interval::definite_floor() const {
  mpfr_t fl, fh;
  mpfr_init2(fl, prec_);
  mpfr_init2(fh, prec_);
  mpfr_floor(fl, lo_);
  mpfr_floor(fh, hi_);
  std::optional<long long> result;
  if (mpfr_equal_p(fl, fh) && mpfr_fits_slong_p(fl, MPFR_RNDN)) {
    result = mpfr_get_si(fl, MPFR_RNDN);
  }
  mpfr_clear(fl);
  mpfr_clear(fh);
  return result;
}

std::optional<mpz_class> Interval::definite_floor_z() const {
  mpfr_t fl, fh;
  mpfr_init2(fl, prec_);
  mpfr_init2(fh, prec_);
  mpfr_floor(fl, lo_);
  mpfr_floor(fh, hi_);
  std::optional<mpz_class> result;
  if (mpfr_equal_p(fl, fh)) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), fl, MPFR_RNDN);
    result = z;
  }
  mpfr_clear(fl);
  mpfr_clear(fh);
  return result;
}

std::optional<bool> Interval::definitely_less_than(const mpz_class& z) const {
  if (mpfr_cmp_z(hi_, z.get_mpz_t()) < 0) return true;
  if (mpfr_cmp_z(lo_, z.get_mpz_t()) >= 0) return false;
  return std::nullopt;
}

double Interval::midpoint_d() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

// ---------------------------------------------------------------------------
// Exact ceilings

namespace {
constexpr mpfr_prec_t kStartPrec = 96;
constexpr mpfr_prec_t kMaxPrec = 1 << 16;
}  // namespace

long long ceil_offset_scaled_root(const mpz_class& add, const mpz_class& a, const mpz_class& b,
                                  const mpz_class& n, unsigned long p) {
  assert(a > 0 && b > 0 && n >= 0 && p >= 1);
  if (auto m = perfect_root(n, p)) {
    // add + a*m/b is rational; ceiling by exact division.
    mpq_class q(add * b + a * (*m), b);
    q.canonicalize();
    return ceil_q(q);
  }
  mpq_class scale(a, b);
  scale.canonicalize();
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    Interval v = Interval::from(add, prec) +
                 Interval::from(scale, prec) * Interval::from(n, prec).root(p);
    if (auto c = v.definite_ceil()) return *c;
  }
  std::abort();  // unreachable: n^(1/p) irrational here
}

long long ceil_scaled_root(const mpz_class& a, const mpz_class& b, const mpz_class& n,
                           unsigned long p) {
  return ceil_offset_scaled_root(0, a, b, n, p);
}

long long ceil_e_scaled_root(const mpz_class& m, unsigned long p) {
  assert(m >= 1 && p >= 1);
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    Interval v = (Interval::euler_e(prec) * Interval::from(m, prec)).root(p);
    if (auto c = v.definite_ceil()) return *c;
  }
  std::abort();
}

bool e_times_less(const mpz_class& lhs, const mpz_class& rhs) {
  assert(lhs > 0 && rhs > 0);
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    Interval v = Interval::euler_e(prec) * Interval::from(lhs, prec);
    if (auto ans = v.definitely_less_than(rhs)) return *ans;
  }
  std::abort();
}

mpz_class floor_div_e(const mpz_class& bound) {
  assert(bound > 0);
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    Interval v = Interval::from(bound, prec) / Interval::euler_e(prec);
    if (auto f = v.definite_floor_z()) return *f;
  }
  std::abort();
}

std::string to_decimal(const mpz_class& z) { return z.get_str(10); }

double round_sig15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace goodcolour::exact
