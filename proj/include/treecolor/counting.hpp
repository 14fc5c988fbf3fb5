#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace treecolor::counting {

using BigInt = boost::multiprecision::mpz_int;
using Real = boost::multiprecision::mpfr_float;

/// Largest n accepted by the exact counts; d_n has about 0.22 * 2^n digits.
inline constexpr int kMaxExactIndex = 28;
/// Largest n accepted by the log-domain evaluations.
inline constexpr int kMaxLogIndex = 60;
inline constexpr int kMaxDigits = 1000;
inline constexpr int kMaxSNumbers = 30;
inline constexpr int kMaxSeriesOrder = 20;

/// Sets the default mpfr precision (decimal digits) for its lifetime.
class PrecisionScope {
public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
  unsigned saved_;
};

[[nodiscard]] BigInt factorial(int n);

/// d_n, labeled colorings of a height n-1 tree with n colors, from
/// d_1 = 1 and d_n = n * d_{n-1}^2.
[[nodiscard]] BigInt count_labeled_colorings(int n);

/// d_n as the product of k^(2^(n-k)) over k = 1..n.
[[nodiscard]] BigInt count_labeled_colorings_product(int n);

/// c_n = d_n / n!, from the product of k^(2^(n-k) - 1) over k = 1..n-1.
[[nodiscard]] BigInt count_colorings(int n);

/// log c_n = sum over k of (2^(n-k) - 1) log k, without forming c_n.
[[nodiscard]] Real log_count_colorings(int n, unsigned digits10 = 50);

struct CountReport {
  int n = 0;
  BigInt d;
  BigInt c;
  Real log_c;
  Real entropy_per_node; // log c_n / (2^n - 1)
};

[[nodiscard]] CountReport count_report(int n, unsigned digits10 = 30);

/// A truncated series value with a rigorous bound on |true - value|.
struct CertifiedReal {
  Real value;
  Real error_bound;
  int terms = 0;
  unsigned working_digits = 0;

  /// Fixed notation with `decimals` digits after the point.
  [[nodiscard]] std::string rounded(int decimals) const;
  /// Fixed notation cut (not rounded) after `decimals` digits, the way digits
  /// of a constant are usually quoted.
  [[nodiscard]] std::string truncated(int decimals) const;
  /// True when both ends of [value - bound, value + bound] round to the same
  /// `decimals`-digit string.
  [[nodiscard]] bool certified_to(int decimals) const;
  /// Same for truncated().
  [[nodiscard]] bool certified_truncated_to(int decimals) const;
};

/// Quadratic recurrence constant prod_{k>=1} k^(1/2^k), evaluated as the
/// nested radical sqrt(1 sqrt(2 sqrt(3 ...))) truncated at K terms. The log of
/// the missing factor is sum_{k>K} log(k)/2^k <= 2 log(K)/2^K for K >= 3.
[[nodiscard]] CertifiedReal quadratic_recurrence_constant(int digits);

/// Nested radical with `terms` levels; 1 level gives 1.
[[nodiscard]] Real quadratic_recurrence_partial(int terms, unsigned digits10 = 50);

/// Entropy per node sum_{k>=2} log(k)/2^k, with the same tail bound.
[[nodiscard]] CertifiedReal entropy_per_node(int digits);

/// sum_{k=2}^{terms} log(k)/2^k
[[nodiscard]] Real entropy_partial_sum(int terms, unsigned digits10 = 50);

/// S_i = sum_{k>=1} k^i / 2^k for i = 1..count, computed exactly by applying
/// x d/dx to x/(1-x) and evaluating at 1/2. Throws std::logic_error if a value
/// is not an integer.
[[nodiscard]] std::vector<BigInt> s_numbers(int count);

/// Coefficients f_0..f_order of f = exp(g), g(x) = sum (-1)^i S_i x^i / i,
/// from n f_n = sum_{k=1}^{n} (-1)^k S_k f_{n-k}.
[[nodiscard]] std::vector<BigInt> f_series(int order);

/// log of U^(2^n) / (n * n!) * sum_{j<=order} f_j / n^j, all in the log domain.
/// Throws DomainError for n < 2 or when the truncated series is not positive.
[[nodiscard]] Real asymptotic_log_cn(int n, int order, unsigned digits10 = 50);

} // namespace treecolor::counting
