#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric_types.hpp"

namespace seqfree {

/// Bivariate formal power series sum c(i,j) z^i q^j truncated to the box
/// 0 <= i < z_order, 0 <= j < q_order, with exact integer coefficients.
///
/// Every operation keeps the box fixed and discards terms that fall outside
/// it. Because all substitutions used here shift exponents upward, a
/// coefficient inside the box never depends on one outside it.
class TruncatedSeries {
 public:
  TruncatedSeries(int z_order, int q_order) : z_order_(z_order), q_order_(q_order) {
    if (z_order < 1 || q_order < 1) throw std::invalid_argument("truncation orders must be >= 1");
    coeffs_.resize(static_cast<std::size_t>(z_order) * q_order);
  }

  static TruncatedSeries one(int z_order, int q_order) {
    TruncatedSeries s(z_order, q_order);
    s.coeffs_[0] = 1;
    return s;
  }

  static TruncatedSeries monomial(int z_order, int q_order, big_int c, int i, int j) {
    TruncatedSeries s(z_order, q_order);
    if (s.in_box(i, j)) s.ref(i, j) = std::move(c);
    return s;
  }

  /// Univariate series in q (z_order 1) from a coefficient vector, truncated to q_order.
  static TruncatedSeries from_q_coeffs(const std::vector<big_int>& c, int q_order) {
    TruncatedSeries s(1, q_order);
    for (int j = 0; j < q_order && j < static_cast<int>(c.size()); ++j) s.ref(0, j) = c[j];
    return s;
  }

  int z_order() const noexcept { return z_order_; }
  int q_order() const noexcept { return q_order_; }

  bool in_box(int i, int j) const noexcept {
    return i >= 0 && i < z_order_ && j >= 0 && j < q_order_;
  }

  /// Coefficient of z^i q^j; zero outside the box.
  big_int coeff(int i, int j) const { return in_box(i, j) ? ref(i, j) : big_int(0); }

  void set(int i, int j, big_int v) { checked(i, j) = std::move(v); }
  void add(int i, int j, const big_int& v) { checked(i, j) += v; }

  /// Coefficients of q^0..q^{N-1} in the z^i slice.
  std::vector<big_int> z_slice(int i) const {
    std::vector<big_int> out(q_order_);
    for (int j = 0; j < q_order_; ++j) out[j] = coeff(i, j);
    return out;
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_) n += (c != 0);
    return n;
  }

  /// Visits nonzero coefficients ordered by (j, i).
  template <class F>
  void for_each_nonzero(F&& f) const {
    for (int j = 0; j < q_order_; ++j)
      for (int i = 0; i < z_order_; ++i)
        if (const auto& c = ref(i, j); c != 0) f(i, j, c);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_box(o);
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
      if (o.coeffs_[t] != 0) coeffs_[t] += o.coeffs_[t];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_box(o);
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
      if (o.coeffs_[t] != 0) coeffs_[t] -= o.coeffs_[t];
    return *this;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_box(b);
    TruncatedSeries r(a.z_order_, a.q_order_);
    for (int i1 = 0; i1 < a.z_order_; ++i1)
      for (int j1 = 0; j1 < a.q_order_; ++j1) {
        const auto& x = a.ref(i1, j1);
        if (x == 0) continue;
        for (int i2 = 0; i1 + i2 < a.z_order_; ++i2)
          for (int j2 = 0; j1 + j2 < a.q_order_; ++j2) {
            const auto& y = b.ref(i2, j2);
            if (y != 0) r.ref(i1 + i2, j1 + j2) += x * y;
          }
      }
    return r;
  }

  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.z_order_ == b.z_order_ && a.q_order_ == b.q_order_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse; the constant term must be +1 or -1.
  TruncatedSeries reciprocal() const {
    const big_int& c0 = ref(0, 0);
    if (c0 != 1 && c0 != -1)
      throw std::domain_error("reciprocal requires constant term +-1, got " + c0.str());
    TruncatedSeries r(z_order_, q_order_);
    // r(i,j) = -c0 * sum_{(a,b) != (0,0)} s(a,b) r(i-a, j-b), visiting (i,j) in
    // lexicographic order so every referenced r is already final.
    for (int i = 0; i < z_order_; ++i)
      for (int j = 0; j < q_order_; ++j) {
        if (i == 0 && j == 0) {
          r.ref(0, 0) = c0;
          continue;
        }
        big_int acc = 0;
        for (int a = 0; a <= i; ++a)
          for (int b = 0; b <= j; ++b) {
            if (a == 0 && b == 0) continue;
            const auto& s = ref(a, b);
            if (s == 0) continue;
            const auto& t = r.ref(i - a, j - b);
            if (t != 0) acc += s * t;
          }
        r.ref(i, j) = c0 == 1 ? big_int(-acc) : acc;
      }
    return r;
  }

  /// In place: *this *= (1 + c z^a q^b).
  TruncatedSeries& multiply_binomial(const big_int& c, int a, int b) {
    if (a < 0 || b < 0 || (a == 0 && b == 0))
      throw std::invalid_argument("binomial factor needs a positive-degree monomial");
    // Descending so sources are read before they are overwritten.
    for (int i = z_order_ - 1; i >= a; --i)
      for (int j = q_order_ - 1; j >= b; --j) {
        const auto& s = ref(i - a, j - b);
        if (s != 0) ref(i, j) += c * s;
      }
    return *this;
  }

  /// In place: *this /= (1 + c z^a q^b), i.e. multiply by sum_t (-c z^a q^b)^t.
  TruncatedSeries& divide_binomial(const big_int& c, int a, int b) {
    if (a < 0 || b < 0 || (a == 0 && b == 0))
      throw std::invalid_argument("binomial factor needs a positive-degree monomial");
    // Ascending: ref(i-a, j-b) is already divided when ref(i, j) reads it.
    for (int i = a; i < z_order_; ++i)
      for (int j = b; j < q_order_; ++j) {
        const auto& s = ref(i - a, j - b);
        if (s != 0) ref(i, j) -= c * s;
      }
    return *this;
  }

  /// Multiply by z^di q^dj (di, dj >= 0).
  TruncatedSeries shifted(int di, int dj) const {
    if (di < 0 || dj < 0) throw std::invalid_argument("shift must be nonnegative");
    TruncatedSeries r(z_order_, q_order_);
    for (int i = 0; i + di < z_order_; ++i)
      for (int j = 0; j + dj < q_order_; ++j) r.ref(i + di, j + dj) = ref(i, j);
    return r;
  }

  /// Substitute z -> z q^s (s >= 0): coefficient (i, j) moves to (i, j + s i).
  TruncatedSeries substitute_z_scale(int s) const {
    if (s < 0) throw std::invalid_argument("z substitution shift must be nonnegative");
    TruncatedSeries r(z_order_, q_order_);
    for (int i = 0; i < z_order_; ++i)
      for (int j = 0; j + s * i < q_order_; ++j) r.ref(i, j + s * i) = ref(i, j);
    return r;
  }

  /// Substitute z -> q^s (s >= 0), giving a univariate series (z_order 1).
  /// Exact only if every dropped z^i term has q-degree >= q_order after the shift,
  /// which callers guarantee by choosing z_order large enough.
  TruncatedSeries specialize_z(int s) const {
    if (s < 0) throw std::invalid_argument("z specialization exponent must be nonnegative");
    TruncatedSeries r(1, q_order_);
    for (int i = 0; i < z_order_; ++i)
      for (int j = 0; j + s * i < q_order_; ++j)
        if (const auto& c = ref(i, j); c != 0) r.ref(0, j + s * i) += c;
    return r;
  }

  /// Copy into a smaller (or equal) box.
  TruncatedSeries truncated(int z_order, int q_order) const {
    if (z_order > z_order_ || q_order > q_order_)
      throw std::invalid_argument("cannot enlarge a truncated series");
    TruncatedSeries r(z_order, q_order);
    for (int i = 0; i < z_order; ++i)
      for (int j = 0; j < q_order; ++j) r.ref(i, j) = ref(i, j);
    return r;
  }

 private:
  big_int& ref(int i, int j) { return coeffs_[static_cast<std::size_t>(i) * q_order_ + j]; }
  const big_int& ref(int i, int j) const {
    return coeffs_[static_cast<std::size_t>(i) * q_order_ + j];
  }

  big_int& checked(int i, int j) {
    if (!in_box(i, j))
      throw std::out_of_range("exponent (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside truncation box");
    return ref(i, j);
  }

  void require_same_box(const TruncatedSeries& o) const {
    if (z_order_ != o.z_order_ || q_order_ != o.q_order_)
      throw std::invalid_argument("series truncation orders differ");
  }

  int z_order_;
  int q_order_;
  std::vector<big_int> coeffs_;
};

/// Signed monomial c z^a q^b.
struct Monomial {
  big_int coeff = 1;
  int z_power = 0;
  int q_power = 0;
};

/// (a; q^step)_length, or the infinite product when length is empty.
struct PochhammerSpec {
  Monomial base;
  int step = 1;
  std::optional<int> length;
};

namespace detail {

// Calls f(c, a, b) for each factor (1 + c z^a q^b) of the product that can
// affect the box. Factors whose exponent leaves the box are identities.
template <class F>
void for_each_pochhammer_factor(const PochhammerSpec& p, int z_order, int q_order, F&& f) {
  if (p.step < 1) throw std::invalid_argument("Pochhammer step must be >= 1");
  if (p.base.z_power < 0 || p.base.q_power < 0)
    throw std::invalid_argument("Pochhammer base must have nonnegative exponents");
  if (p.base.coeff == 0) return;
  if (p.base.z_power >= z_order) return;
  const big_int c = -p.base.coeff;
  for (int t = 0; !p.length || t < *p.length; ++t) {
    const long long b = p.base.q_power + static_cast<long long>(p.step) * t;
    if (b >= q_order) break;
    f(c, p.base.z_power, static_cast<int>(b));
  }
}

}  // namespace detail

/// Expansion of the Pochhammer product in the given box.
inline TruncatedSeries expand(const PochhammerSpec& p, int z_order, int q_order) {
  auto s = TruncatedSeries::one(z_order, q_order);
  if (p.base.z_power == 0 && p.base.q_power == 0) {
    // Only the t = 0 factor is constant; it scales the whole product.
    if (p.length && *p.length == 0) return s;
    PochhammerSpec rest = p;
    rest.base.q_power = p.step;
    if (rest.length) --*rest.length;
    s = expand(rest, z_order, q_order);
    const big_int scale = 1 - p.base.coeff;
    if (scale != 1)
      for (int i = 0; i < z_order; ++i)
        for (int j = 0; j < q_order; ++j)
          if (auto c = s.coeff(i, j); c != 0) s.set(i, j, c * scale);
    return s;
  }
  detail::for_each_pochhammer_factor(
      p, z_order, q_order, [&](const big_int& c, int a, int b) { s.multiply_binomial(c, a, b); });
  return s;
}

/// Expansion of 1 / (a; q^step)_length. The base must have positive degree so
/// every factor has constant term 1.
inline TruncatedSeries expand_reciprocal(const PochhammerSpec& p, int z_order, int q_order) {
  if (p.base.z_power == 0 && p.base.q_power == 0 && p.base.coeff != 0 &&
      !(p.length && *p.length == 0))
    throw std::domain_error("reciprocal Pochhammer product needs a base of positive degree");
  auto s = TruncatedSeries::one(z_order, q_order);
  detail::for_each_pochhammer_factor(
      p, z_order, q_order, [&](const big_int& c, int a, int b) { s.divide_binomial(c, a, b); });
  return s;
}

}  // namespace seqfree
