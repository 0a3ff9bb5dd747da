#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "d23/matrix.hpp"

namespace d23 {

struct CheckReport {
  std::string identity;
  nlohmann::json params;
  double residual_max = 0.0;
  double residual_fro = 0.0;
  double tol = 1e-9;
  bool pass = false;
};

// Pass/fail on the max-entry norm relative to the largest operand entry; the
// Frobenius norm rides along for reporting.
inline CheckReport make_report(std::string identity, nlohmann::json params, const CMat& lhs,
                               const CMat& rhs, double tol) {
  CheckReport rep;
  rep.identity = std::move(identity);
  rep.params = std::move(params);
  const double scale = std::max({max_abs(lhs), max_abs(rhs), 1e-300});
  rep.residual_max = max_abs(lhs - rhs) / scale;
  rep.residual_fro = fro_norm(lhs - rhs) / std::max(fro_norm(lhs), 1e-300);
  rep.tol = tol;
  rep.pass = rep.residual_max < tol;
  return rep;
}

inline nlohmann::json to_json(const CheckReport& r) {
  return nlohmann::json{{"identity", r.identity},   {"params", r.params},
                        {"residual_max", r.residual_max}, {"residual_fro", r.residual_fro},
                        {"tol", r.tol},             {"pass", r.pass}};
}

inline nlohmann::json to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

nlohmann::json cplx_json(const Cplx& z);

}  // namespace d23
