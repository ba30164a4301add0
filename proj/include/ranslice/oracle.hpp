#pragma once

#include "ranslice/model.hpp"

namespace ranslice {

// Tractability cap: the exact search is exponential, so instances are
// size-gated and the expansion count is bounded.
struct OracleBudget {
  int max_vnfs = 10;
  int max_nodes = 6;
  long long max_expansions = 10'000'000;
};

struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  MappingPlan plan;
  bool optimal = false;  // search completed within max_expansions
};

// Depth-first branch and bound maximizing the embedded-VNF count. VNFs are
// branched in ascending id order over {skip} ∪ {feasible nodes}; a branch is
// cut when placed-so-far plus remaining VNFs cannot beat the incumbent.
// Throws BudgetExceededError when the instance exceeds max_vnfs/max_nodes;
// hitting max_expansions instead degrades `optimal` to false.
OracleResult solve_exact(const SubstrateNetwork& substrate, const SliceSet& slices,
                         const OracleBudget& budget = {});

bool fits_budget(const SubstrateNetwork& substrate, const SliceSet& slices,
                 const OracleBudget& budget = {});

}  // namespace ranslice
