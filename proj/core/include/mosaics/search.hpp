#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mosaics/bitvec.hpp"
#include "mosaics/mosaic.hpp"

namespace mosaics {

// Node/time limits for the backtracking search.  Negative means unlimited.
// A node is one accepted block placement.
struct SearchBudget {
  long long max_nodes = -1;
  double max_seconds = -1.0;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchStats {
  long long nodes = 0;
  long long solutions = 0;
  double elapsed_seconds = 0.0;
  long long columns_completed_best = 0;  // deepest fully coloured column
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Mosaic> mosaic;  // first solution found, when any
  SearchStats stats;
};

// A search instance: fill the v x b matrix column by column; in each column
// place one block per colour, drawn from that colour's candidate pool.
// Pools are indexed by colour (entry i serves colour i+1).  Within a column,
// colours are processed in order of decreasing block size (ties by colour
// number); pool candidates are tried in pool order.  Deterministic for a
// fixed problem and seed.
struct SearchProblem {
  explicit SearchProblem(MosaicScheme s) : scheme(std::move(s)) {}

  MosaicScheme scheme;
  std::vector<std::vector<BitVec>> pools;
  SearchBudget budget;
  uint64_t seed = 0;         // reserved for randomized pool generation
  bool exhaustive = false;   // enumerate all solutions, count them
  bool break_first_column = false;  // pin column 0 to the first candidates
};

// Runs the search.  Throws InfeasibleScheme when check_necessary rejects the
// scheme.  Every returned mosaic is verified with verify_mosaic first.  The
// status is Found when at least one solution was seen, Exhausted when the
// sweep completed without one, BudgetExceeded when a limit stopped the search
// early.  In exhaustive mode the sweep continues past the first solution and
// stats.solutions counts all of them (complete unless the budget was hit).
SearchOutcome search_mosaic(const SearchProblem& p);

// All k-subsets of 0..v-1 in colex order.
std::vector<BitVec> all_k_subsets_pool(int v, int k);

// Pool of cyclic developments: `count` random base k-subsets (mt19937_64,
// given seed), each developed mod v; duplicate blocks are removed while
// keeping first-seen order.
std::vector<BitVec> cyclic_development_pool(int v, int k, int count,
                                            uint64_t seed);

// The open 31-point constellation 2-(31,15,7) + 2-(31,10,3) + 2-(31,6,1)
// with b = 31: searches pools of cyclic developments (developments_per_colour
// random base blocks per colour).  No mosaic is known; expected outcomes are
// Exhausted or BudgetExceeded.
SearchOutcome search_open_31(const SearchBudget& budget, uint64_t seed = 0,
                             int developments_per_colour = 8);

// The scheme of the open 31-point constellation.
MosaicScheme open_31_scheme();

}  // namespace mosaics
