#pragma once

#include <string>

#include "json.hpp"

#include "critical_point.hpp"
#include "truncated_series.hpp"

namespace seqfree {

/// {k, z_order, q_order, coeffs: [[i, j, "c"], ...]}, nonzero coefficients sorted by (j, i).
inline nlohmann::ordered_json series_to_json(const TruncatedSeries& s, int k) {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["z_order"] = s.z_order();
  j["q_order"] = s.q_order();
  auto coeffs = nlohmann::ordered_json::array();
  s.for_each_nonzero([&](int i, int jj, const big_int& c) {
    coeffs.push_back(nlohmann::ordered_json::array({i, jj, c.str()}));
  });
  j["coeffs"] = std::move(coeffs);
  return j;
}

/// {k, precision, w_k, log_inv_w, g_val, g_dd, ingham_prefactor} with decimal strings.
inline nlohmann::ordered_json constants_to_json(const AsymptoticConstants& c) {
  nlohmann::ordered_json j;
  j["k"] = c.k;
  j["precision"] = c.digits;
  j["w_k"] = to_decimal(c.w, c.digits);
  j["log_inv_w"] = to_decimal(c.log_inv_w, c.digits);
  j["g_val"] = to_decimal(c.g_val, c.digits);
  j["g_dd"] = to_decimal(c.g_dd, c.digits);
  j["ingham_prefactor"] = to_decimal(c.ingham_prefactor, c.digits);
  return j;
}

}  // namespace seqfree
