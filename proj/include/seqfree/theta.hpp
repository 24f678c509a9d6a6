#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "dilog.hpp"
#include "numeric_types.hpp"

namespace seqfree {

namespace detail {

// Bilateral sum over n in Z of term(n) = (re, im), stopping in each direction
// once the magnitude is negligible and no longer growing.
template <class Term>
std::pair<real, real> bilateral_sum(Term&& term, long long max_terms = 1000000) {
  const real eps = std::numeric_limits<real>::epsilon();
  auto [re, im] = term(0);
  for (int dir : {1, -1}) {
    real prev_mag = std::numeric_limits<real>::infinity();
    long long n = 1;
    for (; n <= max_terms; ++n) {
      const auto [tr, ti] = term(dir * n);
      re += tr;
      im += ti;
      const real mag = abs(tr) + abs(ti);
      const real scale = abs(re) + abs(im);
      if (mag <= eps * scale && mag <= prev_mag) break;
      prev_mag = mag;
    }
    if (n > max_terms) throw std::domain_error("bilateral theta-type sum does not settle");
  }
  return {re, im};
}

}  // namespace detail

/// Jacobi theta function sum_{n in Z} q^{n^2} x^n for 0 < q < 1, x > 0.
inline real theta_eval(const real& q, const real& x) {
  if (!(q > 0 && q < 1)) throw std::domain_error("theta needs 0 < q < 1");
  if (!(x > 0)) throw std::domain_error("theta is evaluated for x > 0");
  const real lq = log(q), lx = log(x);
  return detail::bilateral_sum([&](long long n) {
           const real nn = n;
           return std::pair<real, real>{exp(lq * nn * nn + lx * nn), real(0)};
         }).first;
}

/// Both sides of the modular inversion
///   theta(e^{-eps}; e^{2 pi i u}) = sqrt(pi/eps) sum_n e^{-pi^2 (n+u)^2 / eps}
/// for complex u = u_re + i u_im.
struct ThetaInversionReport {
  real lhs_re, lhs_im;
  real rhs_re, rhs_im;
  real discrepancy;  // |lhs - rhs|
};

inline ThetaInversionReport theta_inversion_check(const real& eps, const real& u_re,
                                                  const real& u_im = 0) {
  if (!(eps > 0)) throw std::domain_error("eps must be positive");
  const real pi = pi_r();
  const real tp = 2 * pi;
  auto lhs = detail::bilateral_sum([&](long long n) {
    const real nn = n;
    const real mag = exp(-eps * nn * nn - tp * nn * u_im);
    const real ph = tp * nn * u_re;
    return std::pair<real, real>{mag * cos(ph), mag * sin(ph)};
  });
  const real pref = sqrt(pi / eps);
  auto rhs = detail::bilateral_sum([&](long long n) {
    const real a = n + u_re;
    // (a + i b)^2 = a^2 - b^2 + 2 i a b
    const real mag = pref * exp(-pi * pi * (a * a - u_im * u_im) / eps);
    const real ph = -pi * pi * 2 * a * u_im / eps;
    return std::pair<real, real>{mag * cos(ph), mag * sin(ph)};
  });
  ThetaInversionReport r{lhs.first, lhs.second, rhs.first, rhs.second, 0};
  r.discrepancy = sqrt((r.lhs_re - r.rhs_re) * (r.lhs_re - r.rhs_re) +
                       (r.lhs_im - r.rhs_im) * (r.lhs_im - r.rhs_im));
  return r;
}

/// Quantum dilogarithm as sum_{n>=1} x^n / (n (1 - q^n)).
inline real quantum_dilog_sum(const real& x, const real& q) {
  if (!(x >= 0 && x < 1 && q > 0 && q < 1)) throw std::domain_error("need 0 <= x < 1, 0 < q < 1");
  const real eps = std::numeric_limits<real>::epsilon();
  real s = 0, xn = 1, qn = 1;
  for (int n = 1; n < 10000000; ++n) {
    xn *= x;
    qn *= q;
    const real t = xn / (n * (1 - qn));
    s += t;
    if (t <= eps * s) break;
  }
  return s;
}

/// Quantum dilogarithm as -log (x; q)_inf = -sum_{j>=0} log(1 - x q^j).
inline real quantum_dilog_product(const real& x, const real& q) {
  if (!(x >= 0 && x < 1 && q > 0 && q < 1)) throw std::domain_error("need 0 <= x < 1, 0 < q < 1");
  const real eps = std::numeric_limits<real>::epsilon();
  real s = 0, xq = x;
  for (int j = 0; j < 10000000 && xq > 0; ++j) {
    const real t = -log1p(-xq);
    s += t;
    if (t <= eps * s) break;
    xq *= q;
  }
  return s;
}

/// Remainder R(eps) = Li_2(x; e^{-eps}) - Li_2(x)/eps + log(1-x)/2 over a grid of eps.
struct QuantumDilogReport {
  real x;
  std::vector<real> eps;
  std::vector<real> remainder;
  std::vector<real> ratio;            // |R(eps)| / eps
  std::vector<real> form_difference;  // |sum form - product form|
  real ratio_spread = 0;              // max ratio / min ratio

  bool bounded(const real& factor = 2) const { return ratio_spread <= factor; }
};

inline QuantumDilogReport quantum_dilog_check(const real& x, const std::vector<real>& eps_grid) {
  if (!(x > 0 && x < 1)) throw std::domain_error("need 0 < x < 1");
  QuantumDilogReport r{x};
  const real li2 = dilog(x);
  const real half_log = log(1 - x) / 2;
  real lo = std::numeric_limits<real>::infinity(), hi = 0;
  for (const auto& e : eps_grid) {
    if (!(e > 0)) throw std::domain_error("eps must be positive");
    const real q = exp(-e);
    const real s = quantum_dilog_sum(x, q);
    const real rem = s - li2 / e + half_log;
    r.eps.push_back(e);
    r.remainder.push_back(rem);
    r.ratio.push_back(abs(rem) / e);
    r.form_difference.push_back(abs(s - quantum_dilog_product(x, q)));
    lo = std::min(lo, r.ratio.back());
    hi = std::max(hi, r.ratio.back());
  }
  r.ratio_spread = lo > 0 ? hi / lo : std::numeric_limits<real>::infinity();
  return r;
}

}  // namespace seqfree
