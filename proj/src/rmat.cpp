#include "d23/rmat.hpp"

#include <sstream>

#include "d23/report.hpp"

namespace d23 {

const std::vector<ErratumRecord>& errata_table() {
  static const std::vector<ErratumRecord> table = {
      {"rsv.r15_18", "r15..r18 carry sin(2 eta)", "sinh(2 eta)",
       "YBE residual for R^{s+v} drops from O(1e-1) to O(1e-13)"},
      {"rsv.r31", "r31 = -e^{-u} r26 (duplicates r34)", "r31 = -e^{-u} r27",
       "YBE residual for R^{s+v} drops from O(1e-1) to O(1e-13)"},
      {"rsn.row19_r38", "row 19 of the s- block references r^+_38", "r^-_38",
       "YBE residual for R^{s-v} drops from O(1e-1) to O(1e-13)"},
      {"kv_trace.cosh_eta", "tr[Kbar^v(0)] K^v(0) printed as sinh(6eta)/sinh(eta) id",
       "actual value carries an extra cosh(eta): tr[Kbar^v(0)] K^v(0) = cosh(eta) sinh(6eta)/sinh(eta) id",
       "direct evaluation; consistent with t(0) and the u=0 value of the open T-Q expression"},
  };
  return table;
}

std::string errata_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : errata_table())
    arr.push_back({{"id", e.id}, {"printed", e.printed}, {"adopted", e.adopted},
                   {"resolved_by", e.resolved_by}});
  return arr.dump();
}

std::string errata_hash() {
  // FNV-1a over the serialized table; reports embed this so results are
  // traceable to a transcription revision.
  const std::string s = errata_json();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

bool generic_position_ok(const ChainSpec& chain, const ModelParams& p, double min_abs) {
  const Cplx eta = p.eta;
  const auto bad = [&](Cplx x) {
    for (const Cplx& shift : {Cplx{0.0, 0.0}, 4.0 * eta, -2.0 * eta, 2.0 * eta}) {
      if (std::abs(std::sinh(x + shift)) < min_abs) return true;
    }
    return false;
  };
  for (int j = 0; j < chain.n_sites; ++j) {
    for (int l = 0; l < chain.n_sites; ++l) {
      if (j != l && bad(chain.thetas[j] - chain.thetas[l])) return false;
      if (bad(chain.thetas[j] + chain.thetas[l])) return false;
    }
    // denominators of the open-chain identity prefactors
    const Cplx th = chain.thetas[j];
    for (const Cplx& d : {std::sinh(th - eta), std::sinh(th + eta), std::cosh(th),
                          std::cosh(th - 2.0 * eta), std::sinh(2.0 * th + 2.0 * eta),
                          std::sinh(2.0 * th - 4.0 * eta), std::sinh(2.0 * th + 4.0 * eta),
                          std::sinh(2.0 * th - 6.0 * eta), std::sinh(th - 3.0 * eta)}) {
      if (std::abs(d) < min_abs) return false;
    }
  }
  return true;
}

nlohmann::json cplx_json(const Cplx& z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace d23
