#pragma once

#include <optional>

#include "cdsopt/connector.hpp"
#include "cdsopt/domination.hpp"
#include "cdsopt/graph.hpp"
#include "cdsopt/verify.hpp"
#include "json.hpp"

namespace cdsopt {

enum class ConnectorKind { Star, Pairwise };

const char* to_string(ConnectorKind kind);

struct SolveOptions {
  ConnectorKind connector = ConnectorKind::Star;
  /// Skip phase 1 and connect this dominating set instead.
  std::optional<NodeSet> given_ds;
  bool run_oracle = false;
  NodeId oracle_budget = kDefaultOracleBudget;
};

struct PhaseTimings {
  double phase1_ms = 0.0;
  double phase2_ms = 0.0;
  double verify_ms = 0.0;
  double oracle_ms = 0.0;
};

struct SolveResult {
  ConnectorKind connector = ConnectorKind::Star;
  bool given_ds = false;
  NodeSet d1;
  NodeSet d2;
  NodeSet dg;
  GreedyTrace phase1;
  ConnectReport phase2;
  VerifyReport verification;
  std::optional<OracleResult> opt_cds;
  std::optional<OracleResult> opt_mds;
  std::optional<RatioRecord> ratios;
  PhaseTimings timings;
};

/// Phase 1 (unless a dominating set is given), then the chosen connector,
/// then verification of D1 + D2 and, on request, the exact oracles.
SolveResult solve(const Instance& inst, const SolveOptions& options = {});

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const VerifyReport& report);
nlohmann::json to_json(const OracleResult& result);
nlohmann::json to_json(const RatioRecord& record);
nlohmann::json solve_report_json(const Instance& inst, const SolveResult& result, bool include_timing);

}  // namespace cdsopt
