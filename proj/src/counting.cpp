#include "treecolor/counting.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/gmp.hpp>

#include "treecolor/error.hpp"

namespace treecolor::counting {

namespace mp = boost::multiprecision;
using Rational = mp::mpq_rational;

PrecisionScope::PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
  Real::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

namespace {

void check_exact_index(int n, const char* what) {
  if (n < 1)
    throw DomainError(std::string(what) + ": n must be >= 1");
  if (n > kMaxExactIndex)
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) + " exceeds limit " +
                        std::to_string(kMaxExactIndex));
}

void check_digits(int digits, const char* what) {
  if (digits < 1 || digits > kMaxDigits)
    throw DomainError(std::string(what) + ": digits must be in [1, " + std::to_string(kMaxDigits) + "]");
}

BigInt power(long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.backend().data(), static_cast<unsigned long>(base), exponent);
  return out;
}

// Smallest K >= 3 with 2 log(K) / 2^K below 10^-(digits + guard).
int tail_terms(int digits) {
  const double target = -(digits + 10) * std::log(10.0);
  int k = 3;
  while (std::log(2 * std::log(static_cast<double>(k))) - k * std::log(2.0) > target)
    ++k;
  return k;
}

Real tail_bound(int terms) {
  const Real k = terms;
  return 2 * log(k) / pow(Real(2), terms);
}

// Accumulated rounding over `terms` operations at the working precision.
Real rounding_slack(int terms, unsigned working) {
  return Real(terms + 10) * pow(Real(10), -static_cast<int>(working) + 2);
}

} // namespace

BigInt factorial(int n) {
  if (n < 0)
    throw DomainError("factorial: negative argument");
  BigInt out;
  mpz_fac_ui(out.backend().data(), static_cast<unsigned long>(n));
  return out;
}

BigInt count_labeled_colorings(int n) {
  check_exact_index(n, "count_labeled_colorings");
  BigInt d = 1;
  for (int k = 2; k <= n; ++k)
    d = k * d * d;
  return d;
}

BigInt count_labeled_colorings_product(int n) {
  check_exact_index(n, "count_labeled_colorings_product");
  BigInt d = 1;
  for (int k = 2; k <= n; ++k)
    d *= power(k, 1ul << (n - k));
  return d;
}

BigInt count_colorings(int n) {
  check_exact_index(n, "count_colorings");
  BigInt c = 1;
  for (int k = 2; k <= n - 1; ++k)
    c *= power(k, (1ul << (n - k)) - 1);
  return c;
}

Real log_count_colorings(int n, unsigned digits10) {
  if (n < 1 || n > kMaxLogIndex)
    throw DomainError("log_count_colorings: n outside [1, " + std::to_string(kMaxLogIndex) + "]");
  PrecisionScope scope(digits10);
  Real sum = 0;
  for (int k = 2; k <= n - 1; ++k)
    sum += Real((std::uint64_t{1} << (n - k)) - 1) * log(Real(k));
  return sum;
}

CountReport count_report(int n, unsigned digits10) {
  CountReport r;
  r.n = n;
  r.d = count_labeled_colorings(n);
  r.c = count_colorings(n);
  r.log_c = log_count_colorings(n, digits10);
  PrecisionScope scope(digits10);
  r.entropy_per_node = r.log_c / Real((std::uint64_t{1} << n) - 1);
  return r;
}

std::string CertifiedReal::rounded(int decimals) const {
  PrecisionScope scope(working_digits);
  return value.str(decimals, std::ios_base::fixed);
}

namespace {

std::string truncate_fixed(const Real& x, int decimals) {
  const Real scaled = floor(abs(x) * pow(Real(10), decimals));
  std::string digits = scaled.convert_to<BigInt>().str();
  if (digits.size() <= static_cast<std::size_t>(decimals))
    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  if (decimals > 0)
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  return (x < 0 ? "-" : "") + digits;
}

} // namespace

std::string CertifiedReal::truncated(int decimals) const {
  PrecisionScope scope(working_digits);
  return truncate_fixed(value, decimals);
}

bool CertifiedReal::certified_truncated_to(int decimals) const {
  PrecisionScope scope(working_digits);
  return truncate_fixed(value - error_bound, decimals) == truncate_fixed(value + error_bound, decimals);
}

bool CertifiedReal::certified_to(int decimals) const {
  PrecisionScope scope(working_digits);
  const Real lo = value - error_bound;
  const Real hi = value + error_bound;
  return lo.str(decimals, std::ios_base::fixed) == hi.str(decimals, std::ios_base::fixed);
}

Real quadratic_recurrence_partial(int terms, unsigned digits10) {
  if (terms < 1)
    throw DomainError("quadratic_recurrence_partial: need at least one term");
  PrecisionScope scope(digits10);
  Real v = 1;
  for (int k = terms; k >= 1; --k)
    v = sqrt(Real(k) * v);
  return v;
}

CertifiedReal quadratic_recurrence_constant(int digits) {
  check_digits(digits, "quadratic_recurrence_constant");
  CertifiedReal out;
  out.working_digits = static_cast<unsigned>(digits) + 20;
  out.terms = tail_terms(digits);
  out.value = quadratic_recurrence_partial(out.terms, out.working_digits);
  PrecisionScope scope(out.working_digits);
  // The partial radical underestimates U by the factor exp(tail).
  out.error_bound = out.value * expm1(tail_bound(out.terms)) + rounding_slack(out.terms, out.working_digits);
  return out;
}

Real entropy_partial_sum(int terms, unsigned digits10) {
  PrecisionScope scope(digits10);
  Real sum = 0;
  Real scale = 0.25;
  for (int k = 2; k <= terms; ++k) {
    sum += log(Real(k)) * scale;
    scale /= 2;
  }
  return sum;
}

CertifiedReal entropy_per_node(int digits) {
  check_digits(digits, "entropy_per_node");
  CertifiedReal out;
  out.working_digits = static_cast<unsigned>(digits) + 20;
  out.terms = tail_terms(digits);
  out.value = entropy_partial_sum(out.terms, out.working_digits);
  PrecisionScope scope(out.working_digits);
  out.error_bound = tail_bound(out.terms) + rounding_slack(out.terms, out.working_digits);
  return out;
}

std::vector<BigInt> s_numbers(int count) {
  if (count < 0 || count > kMaxSNumbers)
    throw DomainError("s_numbers: count outside [0, " + std::to_string(kMaxSNumbers) + "]");
  // Numerator polynomial P (coefficients by degree) of P(x) / (1-x)^m.
  std::vector<BigInt> poly{0, 1};
  int m = 1;
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) {
    // x d/dx [P / (1-x)^m] = x [P' (1-x) + m P] / (1-x)^(m+1)
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (std::size_t j = 1; j < poly.size(); ++j) {
      const BigInt dj = poly[j] * static_cast<long>(j); // coefficient of x^(j-1) in P'
      next[j] += dj;                                    // x * P'
      next[j + 1] -= dj;                                // -x^2 * P'
    }
    for (std::size_t j = 0; j < poly.size(); ++j)
      next[j + 1] += m * poly[j];
    poly = std::move(next);
    ++m;

    Rational at_half = 0;
    Rational x_pow = 1;
    for (const BigInt& coef : poly) {
      at_half += Rational(coef) * x_pow;
      x_pow /= 2;
    }
    at_half *= Rational(power(2, static_cast<unsigned long>(m)));
    if (mp::denominator(at_half) != 1)
      throw std::logic_error("s_numbers: S_" + std::to_string(i) + " is not an integer");
    out.push_back(mp::numerator(at_half));
  }
  return out;
}

std::vector<BigInt> f_series(int order) {
  if (order < 0 || order > kMaxSeriesOrder)
    throw DomainError("f_series: order outside [0, " + std::to_string(kMaxSeriesOrder) + "]");
  const std::vector<BigInt> s = s_numbers(order);
  std::vector<BigInt> f{1};
  for (int n = 1; n <= order; ++n) {
    BigInt acc = 0;
    for (int k = 1; k <= n; ++k) {
      const BigInt term = s[static_cast<std::size_t>(k - 1)] * f[static_cast<std::size_t>(n - k)];
      acc += (k % 2 == 0) ? term : BigInt(-term);
    }
    if (acc % n != 0)
      throw std::logic_error("f_series: coefficient " + std::to_string(n) + " is not an integer");
    f.push_back(acc / n);
  }
  return f;
}

Real asymptotic_log_cn(int n, int order, unsigned digits10) {
  if (n < 2 || n > kMaxLogIndex)
    throw DomainError("asymptotic_log_cn: n outside [2, " + std::to_string(kMaxLogIndex) + "]");
  const std::vector<BigInt> f = f_series(order);
  const CertifiedReal sigma = entropy_per_node(static_cast<int>(digits10));
  PrecisionScope scope(digits10 + 10);
  Real series = 0;
  const Real inv_n = Real(1) / n;
  Real x_pow = 1;
  for (const BigInt& coef : f) {
    series += Real(coef) * x_pow;
    x_pow *= inv_n;
  }
  if (series <= 0)
    throw DomainError("asymptotic_log_cn: truncated series is not positive at n = " + std::to_string(n));
  Real log_fact = 0;
  for (int k = 2; k <= n; ++k)
    log_fact += log(Real(k));
  return Real(std::uint64_t{1} << n) * sigma.value - log(Real(n)) - log_fact + log(series);
}

} // namespace treecolor::counting
