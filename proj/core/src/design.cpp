#include "mosaics/design.hpp"

#include <algorithm>
#include <unordered_map>

namespace mosaics {

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(__INT64_MAX__))
      throw Error("binomial coefficient overflows long long");
  }
  return static_cast<long long>(r);
}

DesignParams derive_params(int t, int v, int k, long long lambda) {
  if (t < 0 || v < 1 || k < 1 || k > v || lambda < 0)
    throw Error("invalid design parameters");
  if (k < t)
    throw Error("block size k must be at least t");
  DesignParams p;
  p.t = t;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  long long cvt = binomial(v, t);
  long long ckt = binomial(k, t);
  if ((lambda * cvt) % ckt != 0)
    throw NonIntegralParameters(
        "b = lambda*C(v,t)/C(k,t) is not an integer for t=" +
        std::to_string(t) + " v=" + std::to_string(v) + " k=" +
        std::to_string(k) + " lambda=" + std::to_string(lambda));
  p.b = lambda * cvt / ckt;
  if (t >= 1) {
    long long cv1 = binomial(v - 1, t - 1);
    long long ck1 = binomial(k - 1, t - 1);
    if ((lambda * cv1) % ck1 != 0)
      throw NonIntegralParameters(
          "r = lambda*C(v-1,t-1)/C(k-1,t-1) is not an integer for t=" +
          std::to_string(t) + " v=" + std::to_string(v) + " k=" +
          std::to_string(k) + " lambda=" + std::to_string(lambda));
    p.r = lambda * cv1 / ck1;
  } else {
    // For t = 0 every point lies in b*k/v blocks only on average; r is the
    // replication number when it is exact, otherwise left unset.
    if (p.b && (*p.b * k) % v == 0) p.r = *p.b * k / v;
  }
  return p;
}

Design::Design(int v, std::vector<BitVec> blocks,
               std::optional<DesignParams> declared)
    : v_(v), blocks_(std::move(blocks)), declared_(std::move(declared)) {
  if (v < 1) throw Error("design needs at least one point");
  for (const BitVec& b : blocks_)
    if (b.size() != v)
      throw Error("block bit width does not match point count");
}

Design Design::from_point_lists(int v,
                                const std::vector<std::vector<int>>& lists,
                                std::optional<DesignParams> declared) {
  std::vector<BitVec> blocks;
  blocks.reserve(lists.size());
  for (const auto& pts : lists) {
    BitVec bv(v);
    for (int p : pts) bv.set(p);  // BitVec::set validates the range
    blocks.push_back(std::move(bv));
  }
  return Design(v, std::move(blocks), std::move(declared));
}

std::vector<std::vector<int>> Design::point_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(blocks_.size());
  for (const BitVec& b : blocks_) out.push_back(b.points());
  return out;
}

bool Design::same_blocks(const Design& o) const {
  if (v_ != o.v_ || blocks_.size() != o.blocks_.size()) return false;
  std::vector<BitVec> a = blocks_, b = o.blocks_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

// Colex rank of a strictly increasing t-subset: sum C(s_i, i+1).
long long colex_rank(const std::vector<int>& s) {
  long long r = 0;
  for (size_t i = 0; i < s.size(); ++i) r += binomial(s[i], static_cast<int>(i) + 1);
  return r;
}

// Inverse of colex_rank for subsets of size t.
std::vector<int> colex_unrank(long long rank, int t) {
  std::vector<int> s(t);
  for (int i = t; i >= 1; --i) {
    int x = i - 1;
    while (binomial(x + 1, i) <= rank) ++x;
    s[i - 1] = x;
    rank -= binomial(x, i);
  }
  return s;
}

// Calls fn(combination) for every t-subset of pts (given sorted ascending).
template <typename Fn>
void for_each_combination(const std::vector<int>& pts, int t, Fn&& fn) {
  int m = static_cast<int>(pts.size());
  if (t > m) return;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  std::vector<int> comb(t);
  while (true) {
    for (int i = 0; i < t; ++i) comb[i] = pts[idx[i]];
    fn(comb);
    int i = t - 1;
    while (i >= 0 && idx[i] == m - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

constexpr long long kDenseCounterLimit = 100'000'000;  // ~400 MB of uint32

}  // namespace

DesignCheck verify_design(const Design& d, int t, long long lambda) {
  DesignCheck res;
  if (t < 0 || lambda < 0) {
    res.message = "t and lambda must be non-negative";
    return res;
  }
  if (t > d.v()) {
    res.message = "t exceeds the number of points";
    return res;
  }

  // Determine the expected block size.
  int k;
  if (d.declared() && d.declared()->v == d.v()) {
    k = d.declared()->k;
  } else if (!d.blocks().empty()) {
    k = d.blocks().front().count();
  } else {
    k = 0;
  }
  for (size_t j = 0; j < d.blocks().size(); ++j) {
    int c = d.blocks()[j].count();
    if (c != k) {
      res.message = "block " + std::to_string(j) + " has size " +
                    std::to_string(c) + ", expected k=" + std::to_string(k);
      return res;
    }
  }
  if (lambda > 0 && k < t) {
    res.message = "block size k=" + std::to_string(k) +
                  " is smaller than t=" + std::to_string(t);
    return res;
  }

  long long total = binomial(d.v(), t);
  auto fail_at = [&](const std::vector<int>& subset, long long count) {
    res.message = "subset covered " + std::to_string(count) +
                  " times, expected lambda=" + std::to_string(lambda);
    res.witness_subset = subset;
    res.witness_count = count;
  };

  if (total <= kDenseCounterLimit) {
    std::vector<uint32_t> counts(static_cast<size_t>(total), 0);
    for (const BitVec& blk : d.blocks()) {
      std::vector<int> pts = blk.points();
      for_each_combination(pts, t, [&](const std::vector<int>& comb) {
        ++counts[static_cast<size_t>(colex_rank(comb))];
      });
    }
    for (long long rnk = 0; rnk < total; ++rnk) {
      if (counts[static_cast<size_t>(rnk)] != lambda) {
        fail_at(colex_unrank(rnk, t), counts[static_cast<size_t>(rnk)]);
        return res;
      }
    }
  } else {
    std::unordered_map<long long, long long> counts;
    for (const BitVec& blk : d.blocks()) {
      std::vector<int> pts = blk.points();
      for_each_combination(pts, t, [&](const std::vector<int>& comb) {
        ++counts[colex_rank(comb)];
      });
    }
    if (lambda == 0) {
      if (!counts.empty()) {
        auto it = std::min_element(
            counts.begin(), counts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
        fail_at(colex_unrank(it->first, t), it->second);
        return res;
      }
    } else {
      if (static_cast<long long>(counts.size()) != total) {
        // Some subset is uncovered; find the smallest by rank.
        for (long long rnk = 0; rnk < total; ++rnk) {
          if (!counts.count(rnk)) {
            fail_at(colex_unrank(rnk, t), 0);
            return res;
          }
        }
      }
      long long first_bad = -1;
      for (const auto& [rnk, c] : counts)
        if (c != lambda && (first_bad < 0 || rnk < first_bad)) first_bad = rnk;
      if (first_bad >= 0) {
        fail_at(colex_unrank(first_bad, t), counts[first_bad]);
        return res;
      }
    }
  }

  res.ok = true;
  res.message = "ok: " + std::to_string(t) + "-(" + std::to_string(d.v()) +
                "," + std::to_string(k) + "," + std::to_string(lambda) +
                ") with b=" + std::to_string(d.b());
  return res;
}

Design complement(const Design& d) {
  std::vector<BitVec> blocks;
  blocks.reserve(d.blocks().size());
  for (const BitVec& b : d.blocks()) blocks.push_back(b.complement());
  std::optional<DesignParams> decl;
  if (d.declared()) {
    const DesignParams& p = *d.declared();
    if (p.t == 2 && p.b && p.r && p.k < p.v) {
      DesignParams q;
      q.t = 2;
      q.v = p.v;
      q.k = p.v - p.k;
      q.lambda = *p.b - 2 * *p.r + p.lambda;
      q.b = *p.b;
      q.r = *p.b - *p.r;
      decl = q;
    } else if (p.t == 1 && p.b && p.k < p.v) {
      DesignParams q;
      q.t = 1;
      q.v = p.v;
      q.k = p.v - p.k;
      q.lambda = *p.b - p.lambda;
      q.b = *p.b;
      q.r = q.lambda;
      decl = q;
    }
  }
  return Design(d.v(), std::move(blocks), std::move(decl));
}

bool is_resolution(const Design& d, const Resolution& r) {
  long long b = d.b();
  std::vector<bool> used(static_cast<size_t>(b), false);
  for (const auto& cls : r.classes) {
    BitVec cover(d.v());
    for (int idx : cls) {
      if (idx < 0 || idx >= b) return false;
      if (used[static_cast<size_t>(idx)]) return false;
      used[static_cast<size_t>(idx)] = true;
      if (!cover.disjoint(d.blocks()[static_cast<size_t>(idx)])) return false;
      cover |= d.blocks()[static_cast<size_t>(idx)];
    }
    if (!cover.all()) return false;
  }
  for (bool u : used)
    if (!u) return false;
  return true;
}

namespace {

bool extend_resolution(const Design& d, int per_class,
                       std::vector<bool>& used, long long remaining,
                       std::vector<std::vector<int>>& classes) {
  long long b = d.b();
  if (remaining == 0) return true;

  // Seed the next class with the lowest-indexed unused block.
  long long seed = 0;
  while (seed < b && used[static_cast<size_t>(seed)]) ++seed;
  classes.emplace_back();
  classes.back().push_back(static_cast<int>(seed));
  used[static_cast<size_t>(seed)] = true;

  BitVec cover = d.blocks()[static_cast<size_t>(seed)];

  // Depth-first extension, lowest-indexed candidate first.
  std::vector<long long> stack;  // candidate cursor per slot
  struct Frame {
    long long chosen;
    BitVec prev_cover;
  };
  std::vector<Frame> frames;
  long long cursor = seed + 1;
  while (true) {
    if (static_cast<int>(classes.back().size()) == per_class) {
      if (extend_resolution(d, per_class, used, remaining - 1, classes))
        return true;
      // Undo the deepest choice and continue scanning from there.
      if (frames.empty()) break;
      Frame f = frames.back();
      frames.pop_back();
      classes.back().pop_back();
      used[static_cast<size_t>(f.chosen)] = false;
      cover = f.prev_cover;
      cursor = f.chosen + 1;
      continue;
    }
    // Find the next compatible block at or after cursor.
    long long cand = cursor;
    while (cand < b &&
           (used[static_cast<size_t>(cand)] ||
            !cover.disjoint(d.blocks()[static_cast<size_t>(cand)])))
      ++cand;
    if (cand == b) {
      if (frames.empty()) break;
      Frame f = frames.back();
      frames.pop_back();
      classes.back().pop_back();
      used[static_cast<size_t>(f.chosen)] = false;
      cover = f.prev_cover;
      cursor = f.chosen + 1;
      continue;
    }
    frames.push_back({cand, cover});
    classes.back().push_back(static_cast<int>(cand));
    used[static_cast<size_t>(cand)] = true;
    cover |= d.blocks()[static_cast<size_t>(cand)];
    cursor = cand + 1;
  }

  // Class could not be completed with this seed: fail upward.
  used[static_cast<size_t>(classes.back().front())] = false;
  classes.pop_back();
  return false;
}

}  // namespace

std::optional<Resolution> find_resolution(const Design& d) {
  if (d.blocks().empty()) return Resolution{};
  int k = d.blocks().front().count();
  for (const BitVec& blk : d.blocks())
    if (blk.count() != k) return std::nullopt;
  if (k == 0 || d.v() % k != 0) return std::nullopt;
  int per_class = d.v() / k;
  if (d.b() % per_class != 0) return std::nullopt;

  std::vector<bool> used(static_cast<size_t>(d.b()), false);
  std::vector<std::vector<int>> classes;
  if (!extend_resolution(d, per_class, used, d.b() / per_class, classes))
    return std::nullopt;
  return Resolution{std::move(classes)};
}

std::vector<std::vector<uint8_t>> incidence_matrix(const Design& d) {
  std::vector<std::vector<uint8_t>> m(
      static_cast<size_t>(d.v()),
      std::vector<uint8_t>(static_cast<size_t>(d.b()), 0));
  for (size_t j = 0; j < d.blocks().size(); ++j)
    for (int p : d.blocks()[j].points()) m[static_cast<size_t>(p)][j] = 1;
  return m;
}

Design design_from_matrix(const std::vector<std::vector<uint8_t>>& m,
                          std::optional<DesignParams> declared) {
  if (m.empty()) throw Error("incidence matrix needs at least one row");
  int v = static_cast<int>(m.size());
  size_t b = m.front().size();
  for (const auto& row : m)
    if (row.size() != b) throw Error("ragged incidence matrix");
  std::vector<BitVec> blocks(b, BitVec(v));
  for (int p = 0; p < v; ++p)
    for (size_t j = 0; j < b; ++j)
      if (m[static_cast<size_t>(p)][j]) blocks[j].set(p);
  return Design(v, std::move(blocks), std::move(declared));
}

}  // namespace mosaics
