#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdsopt/graph.hpp"

namespace cdsopt {

struct Violation {
  NodeId node = -1;
  std::string reason;
};

/// Result of checking a candidate set. For a domination-only check the
/// connectivity fields stay empty.
struct VerifyReport {
  bool is_m_ds = false;
  std::optional<bool> is_connected;
  std::optional<bool> is_cds;
  std::vector<Violation> violations;
  double cost = 0.0;
};

/// Every node outside D needs m neighbors in D, and G[D] must be nonempty
/// and connected.
VerifyReport verify_cds(const Instance& inst, const NodeSet& nodes);
VerifyReport verify_mds(const Instance& inst, const NodeSet& nodes);

class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  NodeSet opt_set;
  double opt_cost = 0.0;
  std::uint64_t nodes_explored = 0;
  bool exhausted = false;
};

inline constexpr NodeId kDefaultOracleBudget = 16;

/// Exact minimum-cost (1,m)-CDS by include/exclude branch and bound.
/// Throws OracleTooLarge when n exceeds `node_budget`.
OracleResult exact_opt_cds(const Instance& inst, NodeId node_budget = kDefaultOracleBudget);

/// Exact minimum-cost m-fold dominating set (no connectivity).
OracleResult exact_opt_mds(const Instance& inst, NodeId node_budget = kDefaultOracleBudget);

/// H(k) = 1 + 1/2 + ... + 1/k, H(0) = 0.
double harmonic(int k);

inline constexpr double kUdgConnectorBound = 11.0 / 3.0;

struct RatioRecord {
  double cost_d1 = 0.0;
  double cost_d2 = 0.0;
  double cost_total = 0.0;
  double opt = 0.0;      // min (1,m)-CDS
  double opt_mds = 0.0;  // min m-DS
  double ratio_d1 = 0.0;     // c(D1) / opt_mds
  double ratio_d2 = 0.0;     // c(D2) / opt
  double ratio_total = 0.0;  // c(D_G) / opt
  int delta = 0;
  double bound_d1 = 0.0;      // H(delta + m)
  double bound_d2 = 0.0;      // 2 H(delta - 1)
  double bound_total = 0.0;   // H(delta + m) + 2 H(delta - 1)
  std::optional<double> bound_udg;  // 2 H(3), UDG instances only
};

/// Throws std::invalid_argument if either oracle run is incomplete.
RatioRecord ratio_report(const Instance& inst, const NodeSet& d1, const NodeSet& d2,
                         const OracleResult& cds_oracle, const OracleResult& mds_oracle);

/// Relative slack for comparing an observed cost against a proven bound.
inline constexpr double kBoundSlack = 1e-12;

struct BoundCheck {
  bool phase1_ok = true;
  bool connector_ok = true;
  bool total_ok = true;
  bool udg_ok = true;
  bool all() const { return phase1_ok && connector_ok && total_ok && udg_ok; }
  std::string describe() const;
};

BoundCheck check_bounds(const RatioRecord& r);

}  // namespace cdsopt
