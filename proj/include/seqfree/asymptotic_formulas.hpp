#pragma once

#include <stdexcept>
#include <string>

#include "critical_point.hpp"
#include "numeric_types.hpp"

namespace seqfree {

/// Ingham's Tauberian transfer: if f(e^{-eps}) ~ lambda eps^alpha exp(A/eps),
/// the (weakly increasing, nonnegative) coefficients satisfy
///   a(n) ~ lambda / (2 sqrt(pi)) A^{alpha/2 + 1/4} n^{-(alpha/2 + 3/4)} exp(2 sqrt(A n)).
inline real ingham_compose(const real& lambda, const real& alpha, const real& A, long long n) {
  if (!(A > 0)) throw std::domain_error("Ingham transfer needs A > 0");
  if (!(lambda > 0)) throw std::domain_error("Ingham transfer needs lambda > 0");
  if (n < 1) throw std::domain_error("Ingham transfer is an n >= 1 formula");
  const real nn = n;
  return lambda / (2 * sqrt(pi_r())) * pow(A, alpha / 2 + real(1) / 4) /
         pow(nn, alpha / 2 + real(3) / 4) * exp(2 * sqrt(A * nn));
}

/// Main term for Q_k(n):
///   sqrt(pi) g^{1/4} / (sqrt(-g'') n^{3/4}) exp(2 sqrt(g n)).
inline real asym_Qk(const AsymptoticConstants& c, long long n) {
  if (n < 1) throw std::domain_error("asymptotic formula needs n >= 1");
  const real nn = n;
  return c.ingham_prefactor / pow(nn, real(3) / 4) * exp(2 * sqrt(c.g_val * nn));
}

inline real asym_Qk(int k, long long n) { return asym_Qk(asymptotic_constants(k), n); }

/// Main term of the generating function at q = e^{-eps}:
///   2 pi / sqrt(-g'') exp(g / eps).
inline real asym_Ck_near_1(const AsymptoticConstants& c, const real& eps) {
  if (!(eps > 0)) throw std::domain_error("eps must be positive");
  return 2 * pi_r() / sqrt(-c.g_dd) * exp(c.g_val / eps);
}

inline real asym_Ck_near_1(int k, const real& eps) {
  return asym_Ck_near_1(asymptotic_constants(k), eps);
}

enum class ReferenceFormula {
  p,       // all partitions (Hardy-Ramanujan)
  q,       // distinct parts (Hardy-Ramanujan)
  p_k,     // no k-sequences, repeats allowed (Kane-Rhoades)
  lehner,  // distinct parts without 2-sequences, closed form in the golden ratio
};

/// pi^2 / (3k(k+1)) in working precision.
inline real lambda_k_exact(int k) { return pi_r() * pi_r() / (3 * k * (k + 1)); }

/// Exponent of the p_k formula: pi sqrt((2/3)(1 - 2/(k(k+1))) n).
inline real pk_exponent(int k, long long n) {
  return pi_r() * sqrt(real(2) / 3 * (1 - real(2) / (k * (k + 1))) * n);
}

inline real reference_asymptotics(ReferenceFormula which, long long n, int k = 0) {
  if (n < 1) throw std::domain_error("asymptotic formula needs n >= 1");
  const real nn = n;
  const real pi = pi_r();
  switch (which) {
    case ReferenceFormula::p:
      return exp(pi * sqrt(2 * nn / 3)) / (4 * sqrt(real(3)) * nn);
    case ReferenceFormula::q:
      return exp(pi * sqrt(nn / 3)) / (4 * pow(real(3), real(1) / 4) * pow(nn, real(3) / 4));
    case ReferenceFormula::p_k: {
      if (k < 2) throw std::domain_error("p_k formula needs k >= 2");
      const real c = 1 - real(2) / (k * (k + 1));
      return pow(c / 6, real(1) / 4) / (2 * k) / pow(nn, real(3) / 4) * exp(pk_exponent(k, n));
    }
    case ReferenceFormula::lehner: {
      const real phi = golden_ratio();
      return sqrt(phi) / (2 * pow(real(3), real(1) / 4) * sqrt(real(5)) * pow(nn, real(3) / 4)) *
             exp(2 * pi * sqrt(nn / 15));
    }
  }
  throw std::invalid_argument("unknown reference formula");
}

}  // namespace seqfree
