#pragma once

#include <stdexcept>
#include <string>

#include "dilog.hpp"
#include "errors.hpp"
#include "numeric_types.hpp"

namespace seqfree {

/// h_k(x) = x^{k+1} - 2x + 1.
inline real h_k_eval(int k, const real& x) { return pow(x, k + 1) - 2 * x + 1; }

/// h_k'(x) = (k+1) x^k - 2.
inline real h_k_prime(int k, const real& x) { return (k + 1) * pow(x, k) - 2; }

/// Root of h_k in (0, 1) with the bracket it was isolated in.
struct RootCertificate {
  real root;
  real lo;  // h_k(lo) > 0
  real hi;  // h_k(hi) < 0
  real residual;
  real derivative;
  int iterations = 0;
};

/// The unique root w_k of h_k in (0,1), for k >= 2.
///
/// h_k(0) = 1 > 0 and h_k(3/4) < 0, and x = 1 is the other positive root, so
/// bisection on [0, 3/4] isolates w_k. A few Newton steps then polish the
/// midpoint, each accepted only if it stays inside the bracket.
inline RootCertificate find_wk(int k, const real& tol = real("1e-30")) {
  if (k < 2) throw std::invalid_argument("w_k is defined for k >= 2");
  real lo = 0, hi = real(3) / 4;
  if (!(h_k_eval(k, lo) > 0 && h_k_eval(k, hi) < 0))
    throw std::logic_error("h_k does not change sign on [0, 3/4] for k = " + std::to_string(k));
  RootCertificate c;
  const real width = tol * real("1e-3");
  while (hi - lo > width && c.iterations < 1000) {
    const real mid = (lo + hi) / 2;
    if (h_k_eval(k, mid) > 0)
      lo = mid;
    else
      hi = mid;
    ++c.iterations;
  }
  real x = (lo + hi) / 2;
  for (int i = 0; i < 4; ++i) {
    const real next = x - h_k_eval(k, x) / h_k_prime(k, x);
    if (next <= lo || next >= hi) break;
    x = next;
  }
  c.root = x;
  c.lo = lo;
  c.hi = hi;
  c.residual = abs(h_k_eval(k, x));
  c.derivative = h_k_prime(k, x);
  if (!(c.residual < tol))
    throw convergence_failure("h_k root residual " + to_decimal(c.residual, 6) +
                              " not below tolerance");
  if (!(c.derivative < 0)) throw std::logic_error("h_k'(w_k) must be negative");
  return c;
}

/// g_k on the positive imaginary axis, u = i y with y > 0:
///   g_k(iy) = 2 pi^2 y^2 + Li_2(e^{-2 pi y}) - Li_2(e^{-2 pi k y}) / k.
/// All dilogarithm arguments are real in (0, 1).
inline real g_on_imaginary_axis(int k, const real& y) {
  if (!(y > 0)) throw std::domain_error("y must be positive");
  const real tp = 2 * pi_r();
  return 2 * pi_r() * pi_r() * y * y + dilog(real(exp(-tp * y))) - dilog(real(exp(-tp * k * y))) / k;
}

/// Saddle-point data for the distinct-part generating function with parameter k.
struct AsymptoticConstants {
  int k = 0;
  real w;                 // root of h_k in (0, 1)
  real log_inv_w;         // log(1/w); the critical point is i log(1/w) / (2 pi)
  real g_val;             // g_k at the critical point
  real g_dd;              // g_k'' at the critical point (negative)
  real ingham_prefactor;  // sqrt(pi) g_val^{1/4} / sqrt(-g_dd)
  int digits = working_digits;
};

/// g_k(v_k) = log(w)^2 / 2 + Li_2(w) - Li_2(w^k) / k.
inline real gk_value_at(int k, const real& w) {
  const real l = log(w);
  return l * l / 2 + dilog(w) - dilog(real(pow(w, k))) / k;
}

/// g_k''(v_k) = -4 pi^2 (1 - k w^{k+1}) / (1 - w), valid at the root of h_k.
inline real gk_second_at(int k, const real& w) {
  const real margin = 1 - k * pow(w, k + 1);
  if (!(margin > 0)) throw std::logic_error("1 - k w^{k+1} must be positive at the critical point");
  return -4 * pi_r() * pi_r() * margin / (1 - w);
}

inline AsymptoticConstants asymptotic_constants(int k) {
  const auto root = find_wk(k);
  AsymptoticConstants c;
  c.k = k;
  c.w = root.root;
  c.log_inv_w = -log(c.w);
  c.g_val = gk_value_at(k, c.w);
  c.g_dd = gk_second_at(k, c.w);
  c.ingham_prefactor = sqrt(pi_r()) * sqrt(sqrt(c.g_val)) / sqrt(-c.g_dd);
  // The root is good to the working precision less a few guard digits.
  c.digits = working_digits - 4;
  return c;
}

inline real gk_value(int k) { return asymptotic_constants(k).g_val; }
inline real gk_second(int k) { return asymptotic_constants(k).g_dd; }

}  // namespace seqfree
