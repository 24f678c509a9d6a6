#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "generating_functions.hpp"
#include "numeric_types.hpp"

namespace seqfree {

/// Value of sum_n Q_k(n) e^{-eps n} with a certificate for the dropped tail.
struct SeriesEvaluation {
  HighPrecisionReal value;
  real tail_bound;  // absolute bound on sum_{n >= terms}
  int terms;        // number of coefficients summed
};

/// Rigorous bound on sum_{n>=N} q(n) e^{-eps n}, using q(n) <= exp(pi sqrt(n/3))
/// and the tangent line of the concave exponent at N. Returns +inf when the
/// exponent is not yet decreasing at N.
inline real distinct_tail_bound(const real& eps, int N) {
  const real a = pi_r() / sqrt(real(3));
  const real rootN = sqrt(real(N));
  const real slope = eps - a / (2 * rootN);
  if (N < 1 || slope <= 0) return std::numeric_limits<real>::infinity();
  return exp(a * rootN - eps * N) / (1 - exp(-slope));
}

/// Smallest N with distinct_tail_bound(eps, N) <= tol, or -1 if none up to limit.
inline int terms_for_tail(const real& eps, const real& tol, int limit) {
  for (int N = 1; N <= limit; ++N)
    if (distinct_tail_bound(eps, N) <= tol) return N;
  return -1;
}

/// sum_{n < size} c(n) e^{-eps n}.
inline real weighted_sum(const std::vector<big_int>& c, const real& eps) {
  real s = 0;
  const real w = exp(-eps);
  real wn = 1;
  for (const auto& v : c) {
    if (v != 0) s += static_cast<real>(v) * wn;
    wn *= w;
  }
  return s;
}

/// Numeric value of the distinct-part generating function at q = e^{-eps}.
///
/// Coefficients come from the double series; the number of terms is the
/// smallest that makes the certified tail at most rel_tol (the sum is >= 1, so
/// this is also a relative bound). Refuses when that exceeds max_terms.
inline SeriesEvaluation eval_series_real(int k, const real& eps, int max_terms = 6000,
                                         const real& rel_tol = real("1e-20")) {
  if (!(eps > 0)) throw std::domain_error("eps must be positive");
  const int N = terms_for_tail(eps, rel_tol, max_terms);
  if (N < 0) {
    const int need = terms_for_tail(eps, rel_tol, 50 * max_terms);
    throw budget_exceeded("eps = " + to_decimal(eps, 6) + " needs " +
                          (need < 0 ? std::string("more than ") + std::to_string(50 * max_terms)
                                    : std::to_string(need)) +
                          " terms for the requested tail; budget is " +
                          std::to_string(max_terms));
  }
  const auto series = theorem1_series(k, distinct_z_order_for(N), N).specialize_z(0);
  const real tail = distinct_tail_bound(eps, N);
  SeriesEvaluation out{{weighted_sum(series.z_slice(0), eps)}, tail, N};
  if (tail > 0) {
    const int d = static_cast<int>(floor(log10(out.value.value / tail)));
    out.value.digits = std::min(working_digits, std::max(0, d));
  }
  return out;
}

}  // namespace seqfree
