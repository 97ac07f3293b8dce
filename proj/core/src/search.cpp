#include "mosaics/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <unordered_set>

namespace mosaics {

std::vector<BitVec> all_k_subsets_pool(int v, int k) {
  if (k < 0 || k > v) throw Error("k out of range");
  if (binomial(v, k) > 1'000'000)
    throw Error("all_k_subsets_pool would be too large");
  std::vector<BitVec> out;
  out.reserve(static_cast<size_t>(binomial(v, k)));
  // Colex order: repeatedly increment the smallest movable element.
  std::vector<int> s(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<size_t>(i)] = i;
  if (k == 0) {
    out.push_back(BitVec(v));
    return out;
  }
  while (true) {
    out.push_back(BitVec::from_points(v, s));
    int i = 0;
    while (i < k) {
      int limit = (i + 1 < k) ? s[static_cast<size_t>(i + 1)] : v;
      if (s[static_cast<size_t>(i)] + 1 < limit) break;
      ++i;
    }
    if (i == k) break;
    ++s[static_cast<size_t>(i)];
    for (int j = 0; j < i; ++j) s[static_cast<size_t>(j)] = j;
  }
  return out;
}

std::vector<BitVec> cyclic_development_pool(int v, int k, int count,
                                            uint64_t seed) {
  if (k < 1 || k > v) throw Error("k out of range");
  if (count < 1) throw Error("count must be positive");
  std::mt19937_64 rng(seed);
  std::vector<BitVec> out;
  std::unordered_set<BitVec, BitVecHash> seen;
  std::vector<int> deck(static_cast<size_t>(v));
  for (int c = 0; c < count; ++c) {
    // Portable partial Fisher-Yates: take the first k of a shuffled deck.
    for (int i = 0; i < v; ++i) deck[static_cast<size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(rng() % static_cast<uint64_t>(v - i));
      std::swap(deck[static_cast<size_t>(i)], deck[static_cast<size_t>(j)]);
    }
    for (int shift = 0; shift < v; ++shift) {
      BitVec blk(v);
      for (int i = 0; i < k; ++i)
        blk.set((deck[static_cast<size_t>(i)] + shift) % v);
      if (seen.insert(blk).second) out.push_back(std::move(blk));
    }
  }
  return out;
}

namespace {

long long colex_rank(const std::vector<int>& s) {
  long long r = 0;
  for (size_t i = 0; i < s.size(); ++i)
    r += binomial(s[i], static_cast<int>(i) + 1);
  return r;
}

template <typename Fn>
void for_each_combination(const std::vector<int>& pts, int t, Fn&& fn) {
  int m = static_cast<int>(pts.size());
  if (t > m || t < 0) return;
  std::vector<int> idx(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) idx[static_cast<size_t>(i)] = i;
  std::vector<int> comb(static_cast<size_t>(t));
  while (true) {
    for (int i = 0; i < t; ++i)
      comb[static_cast<size_t>(i)] = pts[static_cast<size_t>(
          idx[static_cast<size_t>(i)])];
    fn(comb);
    int i = t - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == m - t + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < t; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

struct ColourState {
  int colour = 0;  // 1-based colour number
  int t = 0;
  int k = 0;
  long long lambda = 0;
  long long r = 0;
  std::vector<BitVec> blocks;
  std::vector<std::vector<int>> block_points;
  std::vector<std::vector<int64_t>> block_ranks;  // t-subset colex ranks
  std::vector<long long> counts;                  // per t-subset coverage
  std::vector<long long> used;                    // per point replication
  std::map<BitVec, std::vector<int>> by_mask;     // for forced last colour
};

struct Searcher {
  const SearchProblem& prob;
  int v;
  long long b;
  int c;
  std::vector<ColourState> cs;  // in placement order (decreasing k)
  std::vector<std::vector<int>> chosen;  // [column][order index] -> pool idx
  SearchStats stats;
  bool exceeded = false;
  std::optional<Mosaic> first;
  std::chrono::steady_clock::time_point t0;

  explicit Searcher(const SearchProblem& p)
      : prob(p),
        v(p.scheme.v()),
        b(p.scheme.b()),
        c(p.scheme.colours()) {}

  bool budget_hit() {
    if (exceeded) return true;
    if (prob.budget.max_nodes >= 0 && stats.nodes >= prob.budget.max_nodes) {
      exceeded = true;
      return true;
    }
    if (prob.budget.max_seconds >= 0 && (stats.nodes & 1023) == 0) {
      double el = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      if (el >= prob.budget.max_seconds) {
        exceeded = true;
        return true;
      }
    }
    return false;
  }

  bool feasible(ColourState& s, int bi, const BitVec& col_mask) {
    const BitVec& blk = s.blocks[static_cast<size_t>(bi)];
    if (!col_mask.disjoint(blk)) return false;
    for (int p : s.block_points[static_cast<size_t>(bi)])
      if (s.used[static_cast<size_t>(p)] >= s.r) return false;
    for (int64_t rk : s.block_ranks[static_cast<size_t>(bi)])
      if (s.counts[static_cast<size_t>(rk)] >= s.lambda) return false;
    return true;
  }

  void apply(ColourState& s, int bi, BitVec& col_mask) {
    col_mask |= s.blocks[static_cast<size_t>(bi)];
    for (int p : s.block_points[static_cast<size_t>(bi)])
      ++s.used[static_cast<size_t>(p)];
    for (int64_t rk : s.block_ranks[static_cast<size_t>(bi)])
      ++s.counts[static_cast<size_t>(rk)];
    ++stats.nodes;
  }

  void undo(ColourState& s, int bi, BitVec& col_mask) {
    col_mask ^= s.blocks[static_cast<size_t>(bi)];
    for (int p : s.block_points[static_cast<size_t>(bi)])
      --s.used[static_cast<size_t>(p)];
    for (int64_t rk : s.block_ranks[static_cast<size_t>(bi)])
      --s.counts[static_cast<size_t>(rk)];
  }

  // Every point still needs r_i - used_i placements in the columns left.
  bool replication_feasible(long long columns_left) {
    for (const ColourState& s : cs)
      for (int p = 0; p < v; ++p)
        if (s.r - s.used[static_cast<size_t>(p)] > columns_left) return false;
    return true;
  }

  // Returns true to stop the whole search (solution found and not
  // exhaustive, or budget exceeded).
  bool column(long long col, int oi, BitVec col_mask) {
    if (budget_hit()) return true;
    if (oi == c) {
      stats.columns_completed_best =
          std::max(stats.columns_completed_best, col + 1);
      if (col + 1 == b) {
        ++stats.solutions;
        if (!first) first = build_mosaic();
        return !prob.exhaustive;
      }
      if (!replication_feasible(b - (col + 1))) return false;
      return column(col + 1, 0, BitVec(v));
    }
    ColourState& s = cs[static_cast<size_t>(oi)];
    if (oi == c - 1) {
      // The final block of the column is forced: it must be the complement.
      BitVec need = col_mask.complement();
      auto it = s.by_mask.find(need);
      if (it == s.by_mask.end()) return false;
      for (int bi : it->second) {
        if (!feasible(s, bi, col_mask)) continue;
        apply(s, bi, col_mask);
        chosen[static_cast<size_t>(col)][static_cast<size_t>(oi)] = bi;
        if (column(col, oi + 1, col_mask)) return true;
        undo(s, bi, col_mask);
        if (exceeded) return true;
      }
      return false;
    }
    bool pin = prob.break_first_column && col == 0;
    for (int bi = 0; bi < static_cast<int>(s.blocks.size()); ++bi) {
      if (!feasible(s, bi, col_mask)) continue;
      BitVec next_mask = col_mask;
      apply(s, bi, next_mask);
      chosen[static_cast<size_t>(col)][static_cast<size_t>(oi)] = bi;
      if (column(col, oi + 1, next_mask)) return true;
      undo(s, bi, next_mask);
      if (exceeded) return true;
      if (pin) break;  // symmetry break: only the first feasible candidate
    }
    return false;
  }

  Mosaic build_mosaic() {
    std::vector<std::vector<int>> cells(
        static_cast<size_t>(v),
        std::vector<int>(static_cast<size_t>(b), 0));
    for (long long col = 0; col < b; ++col)
      for (int oi = 0; oi < c; ++oi) {
        const ColourState& s = cs[static_cast<size_t>(oi)];
        int bi = chosen[static_cast<size_t>(col)][static_cast<size_t>(oi)];
        for (int p : s.block_points[static_cast<size_t>(bi)])
          cells[static_cast<size_t>(p)][static_cast<size_t>(col)] = s.colour;
      }
    return Mosaic(prob.scheme, std::move(cells));
  }
};

}  // namespace

SearchOutcome search_mosaic(const SearchProblem& p) {
  NecessaryCheck nc = check_necessary(p.scheme);
  if (!nc.ok) {
    std::string msg = "scheme fails the necessary conditions:";
    for (const std::string& f : nc.failures) msg += " [" + f + "]";
    throw InfeasibleScheme(msg);
  }
  if (static_cast<int>(p.pools.size()) != p.scheme.colours())
    throw Error("pool count does not match the colour count");

  Searcher srch(p);
  srch.t0 = std::chrono::steady_clock::now();

  for (int colour = 1; colour <= srch.c; ++colour) {
    ColourState s;
    DesignParams dp = p.scheme.resolved_colour(colour);
    s.colour = colour;
    s.t = dp.t;
    s.k = dp.k;
    s.lambda = dp.lambda;
    if (!dp.r)
      throw InfeasibleScheme("colour " + std::to_string(colour) +
                             " has no integral replication number");
    s.r = *dp.r;
    s.counts.assign(static_cast<size_t>(binomial(srch.v, s.t)), 0);
    s.used.assign(static_cast<size_t>(srch.v), 0);
    for (const BitVec& blk : p.pools[static_cast<size_t>(colour) - 1]) {
      if (blk.size() != srch.v)
        throw Error("pool block width differs from v");
      if (blk.count() != s.k)
        throw Error("pool for colour " + std::to_string(colour) +
                    " contains a block of size " + std::to_string(blk.count()) +
                    ", expected k=" + std::to_string(s.k));
      std::vector<int> pts = blk.points();
      std::vector<int64_t> ranks;
      for_each_combination(pts, s.t, [&](const std::vector<int>& comb) {
        ranks.push_back(colex_rank(comb));
      });
      s.block_points.push_back(std::move(pts));
      s.block_ranks.push_back(std::move(ranks));
      s.blocks.push_back(blk);
    }
    srch.cs.push_back(std::move(s));
  }

  // Place large blocks first; ties broken by colour number (stable).
  std::stable_sort(srch.cs.begin(), srch.cs.end(),
                   [](const ColourState& a, const ColourState& b2) {
                     return a.k > b2.k;
                   });
  for (ColourState& s : srch.cs)
    for (int bi = 0; bi < static_cast<int>(s.blocks.size()); ++bi)
      s.by_mask[s.blocks[static_cast<size_t>(bi)]].push_back(bi);

  srch.chosen.assign(static_cast<size_t>(srch.b),
                     std::vector<int>(static_cast<size_t>(srch.c), -1));

  srch.column(0, 0, BitVec(srch.v));

  SearchOutcome out;
  out.stats = srch.stats;
  out.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - srch.t0)
          .count();
  out.mosaic = std::move(srch.first);
  if (srch.exceeded) {
    out.status = SearchStatus::BudgetExceeded;
  } else if (out.stats.solutions > 0) {
    out.status = SearchStatus::Found;
  } else {
    out.status = SearchStatus::Exhausted;
  }
  if (out.mosaic) {
    MosaicCheck mc = verify_mosaic(*out.mosaic);
    if (!mc.ok)
      throw Error("internal error: search produced an invalid mosaic: " +
                  mc.message);
  }
  return out;
}

MosaicScheme open_31_scheme() {
  std::vector<DesignParams> colours(3);
  colours[0] = DesignParams{2, 31, 15, 7, 31, 15};
  colours[1] = DesignParams{2, 31, 10, 3, 31, 10};
  colours[2] = DesignParams{2, 31, 6, 1, 31, 6};
  return MosaicScheme(31, 31, std::move(colours));
}

SearchOutcome search_open_31(const SearchBudget& budget, uint64_t seed,
                             int developments_per_colour) {
  SearchProblem p(open_31_scheme());
  p.budget = budget;
  p.seed = seed;
  const int ks[3] = {15, 10, 6};
  for (int i = 0; i < 3; ++i)
    p.pools.push_back(cyclic_development_pool(
        31, ks[i], developments_per_colour,
        seed + static_cast<uint64_t>(i)));
  return search_mosaic(p);
}

}  // namespace mosaics
