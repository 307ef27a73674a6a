#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdsopt/generators.hpp"
#include "cdsopt/solve.hpp"
#include "json.hpp"

namespace cdsopt {

// Batch file (JSON):
//
//   {
//     "oracle": true, "node_budget": 16, "threads": 4, "connector": "star",
//     "configs": [
//       {"kind": "random", "n": [8, 12], "p": [0.3], "m": [1, 2],
//        "cost": [0.1, 10], "seeds": [1, 20]},
//       {"kind": "udg", "n": [12], "side": [2.0], "m": [1], "seeds": [1, 50]},
//       {"kind": "fig1", "d": [3, 5], "eps": 0.01}
//     ]
//   }
//
// Scalars are accepted wherever a list is; "seeds" is an inclusive range.

struct BatchConfig {
  std::string kind;  // random | udg | fig1
  std::vector<NodeId> ns;
  std::vector<double> edge_probs;
  std::vector<double> sides;
  std::vector<int> ms{1};
  CostRange cost{1.0, 1.0};
  std::uint64_t seed_from = 0;
  std::uint64_t seed_to = 0;
  std::vector<int> ds;
  double eps = 0.01;
};

struct BatchSpec {
  std::vector<BatchConfig> configs;
  bool oracle = true;
  NodeId node_budget = kDefaultOracleBudget;
  int threads = 0;  // 0: unspecified
  ConnectorKind connector = ConnectorKind::Star;
};

/// Throws std::invalid_argument on unknown kinds or bad parameter combinations.
BatchSpec parse_batch_spec(const nlohmann::json& j);

/// Instances of a batch in deterministic order.
std::vector<Instance> expand_batch(const BatchSpec& spec);

struct BenchRow {
  std::string label;
  NodeId n = 0;
  std::size_t edges = 0;
  int m = 0;
  int delta = 0;
  double cost_d1 = 0.0;
  double cost_d2 = 0.0;
  double cost_total = 0.0;
  std::optional<double> opt;
  std::optional<double> opt_mds;
  std::optional<double> ratio_total;
  std::optional<double> ratio_d1;
  std::optional<double> ratio_d2;
  double bound_total = 0.0;
  bool udg = false;
  std::string violation;  // empty when the row is clean
  double elapsed_ms = 0.0;
};

BenchRow bench_instance(const Instance& inst, const BatchSpec& spec);

/// Pool width: CDS_OPT_THREADS, else the batch value, else hardware concurrency.
int resolve_thread_count(int requested);

/// Solves every instance on a pool of `threads` workers; rows come back in
/// instance order.
std::vector<BenchRow> run_bench(const std::vector<Instance>& instances, const BatchSpec& spec, int threads);

inline constexpr const char* kBenchCsvHeader =
    "label,n,edges,m,delta,cost_d1,cost_d2,cost_total,opt,opt_mds,ratio_total,bound_total,udg,violation";

std::string bench_csv(const std::vector<BenchRow>& rows);
nlohmann::json bench_summary(const std::vector<BenchRow>& rows);

}  // namespace cdsopt
