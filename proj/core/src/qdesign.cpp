#include "mosaics/qdesign.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace mosaics {

namespace {

using u128 = unsigned __int128;

constexpr u128 kU128Max = ~static_cast<u128>(0);

int lead_bit(uint64_t x) { return 63 - std::countl_zero(x); }

std::string u128_str(u128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

unsigned __int128 gaussian_binomial(int n, int k, int q) {
  if (q < 2) throw Error("Gaussian binomial needs q >= 2");
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // [n k]_q = prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{i+1} - 1); every partial
  // product is itself a Gaussian binomial, so each division is exact.
  u128 r = 1;
  for (int i = 0; i < k; ++i) {
    u128 num = 1;
    for (int e = 0; e < n - i; ++e) {
      if (num > kU128Max / static_cast<unsigned>(q))
        throw Error("Gaussian binomial overflows 128 bits");
      num *= static_cast<unsigned>(q);
    }
    num -= 1;
    u128 den = 1;
    for (int e = 0; e < i + 1; ++e) den *= static_cast<unsigned>(q);
    den -= 1;
    if (r > kU128Max / num)
      throw Error("Gaussian binomial overflows 128 bits");
    r = r * num / den;
  }
  return r;
}

long long gaussian_binomial_ll(int n, int k, int q) {
  u128 r = gaussian_binomial(n, k, q);
  if (r > static_cast<u128>(__INT64_MAX__))
    throw Error("Gaussian binomial [" + std::to_string(n) + " " +
                std::to_string(k) + "]_" + std::to_string(q) +
                " does not fit in long long");
  return static_cast<long long>(r);
}

// --- Subspace ---

namespace {

// In-place echelon accumulator over GF(2) masks.
struct Echelon {
  uint64_t rows[64];
  int count = 0;

  // Returns true when v was independent (rank grew).
  bool insert(uint64_t v) {
    for (int i = 0; i < count; ++i)
      if ((v >> lead_bit(rows[i])) & 1) v ^= rows[i];
    if (v == 0) return false;
    int lv = lead_bit(v);
    for (int i = 0; i < count; ++i)
      if ((rows[i] >> lv) & 1) rows[i] ^= v;
    int pos = count;
    while (pos > 0 && lead_bit(rows[pos - 1]) < lv) {
      rows[pos] = rows[pos - 1];
      --pos;
    }
    rows[pos] = v;
    ++count;
    return true;
  }

  bool reduces_to_zero(uint64_t v) const {
    for (int i = 0; i < count; ++i)
      if ((v >> lead_bit(rows[i])) & 1) v ^= rows[i];
    return v == 0;
  }
};

}  // namespace

Subspace Subspace::span(int ambient, std::span<const uint64_t> vectors) {
  if (ambient < 1 || ambient > 64)
    throw Error("subspace ambient dimension must be in 1..64");
  Echelon e;
  uint64_t mask =
      ambient == 64 ? ~uint64_t{0} : (uint64_t{1} << ambient) - 1;
  for (uint64_t v : vectors) {
    if (v & ~mask)
      throw Error("vector has bits outside the ambient dimension");
    if (v) e.insert(v);
  }
  Subspace s(ambient);
  s.rows_.assign(e.rows, e.rows + e.count);
  return s;
}

bool Subspace::contains_vector(uint64_t v) const {
  for (uint64_t r : rows_)
    if ((v >> lead_bit(r)) & 1) v ^= r;
  return v == 0;
}

bool Subspace::contains(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw DimensionMismatch("ambient mismatch");
  for (uint64_t r : o.rows_)
    if (!contains_vector(r)) return false;
  return true;
}

std::vector<uint64_t> Subspace::nonzero_vectors() const {
  size_t total = (size_t{1} << rows_.size()) - 1;
  std::vector<uint64_t> out(total + 1, 0);
  for (size_t m = 1; m <= total; ++m)
    out[m] = out[m & (m - 1)] ^ rows_[static_cast<size_t>(
                 std::countr_zero(m))];
  out.erase(out.begin());
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t Subspace::canonical_key() const {
  if (dim() * ambient_ > 64)
    throw Error("canonical_key requires dim*ambient <= 64");
  uint64_t key = 0;
  for (uint64_t r : rows_) key = (key << ambient_) | r;
  return key;
}

Subspace subspace_sum(std::span<const Subspace> parts) {
  if (parts.empty()) throw Error("subspace_sum needs at least one part");
  int ambient = parts.front().ambient();
  std::vector<uint64_t> rows;
  for (const Subspace& s : parts) {
    if (s.ambient() != ambient)
      throw DimensionMismatch("subspace_sum: ambient mismatch");
    rows.insert(rows.end(), s.basis().begin(), s.basis().end());
  }
  return Subspace::span(ambient, rows);
}

bool is_direct_sum(std::span<const Subspace> parts) {
  if (parts.empty()) throw Error("is_direct_sum needs at least one part");
  int ambient = parts.front().ambient();
  Echelon e;
  int total = 0;
  for (const Subspace& s : parts) {
    if (s.ambient() != ambient)
      throw DimensionMismatch("is_direct_sum: ambient mismatch");
    total += s.dim();
    for (uint64_t r : s.basis()) e.insert(r);
  }
  return e.count == total;
}

// --- QDesign ---

QDesign::QDesign(int v, std::vector<Subspace> blocks,
                 std::optional<DesignParams> declared)
    : v_(v), blocks_(std::move(blocks)), declared_(std::move(declared)) {
  if (v < 1 || v > 64) throw Error("ambient dimension must be in 1..64");
  for (const Subspace& s : blocks_)
    if (s.ambient() != v)
      throw DimensionMismatch("block ambient differs from design ambient");
}

namespace {

// Reduced echelon basis of the plane spanned by independent x, y; returns
// (r0, r1) with lead(r0) > lead(r1) and lead(r1) cleared in r0.
inline std::pair<uint64_t, uint64_t> rref2(uint64_t x, uint64_t y) {
  if (lead_bit(x) == lead_bit(y)) x ^= y;
  uint64_t r0 = x, r1 = y;
  if (lead_bit(r0) < lead_bit(r1)) std::swap(r0, r1);
  if ((r0 >> lead_bit(r1)) & 1) r0 ^= r1;
  return {r0, r1};
}

}  // namespace

QDesignCheck verify_qdesign(const QDesign& d, int t, long long lambda) {
  QDesignCheck res;
  int v = d.v();
  if (t < 0 || lambda < 0) {
    res.message = "t and lambda must be non-negative";
    return res;
  }
  if (t > v) {
    res.message = "t exceeds the ambient dimension";
    return res;
  }

  int k;
  if (d.declared()) {
    k = d.declared()->k;
  } else if (!d.blocks().empty()) {
    k = d.blocks().front().dim();
  } else {
    k = 0;
  }
  for (size_t j = 0; j < d.blocks().size(); ++j) {
    if (d.blocks()[j].dim() != k) {
      res.message = "block " + std::to_string(j) + " has dimension " +
                    std::to_string(d.blocks()[j].dim()) + ", expected k=" +
                    std::to_string(k);
      return res;
    }
  }
  if (lambda > 0 && k < t) {
    res.message = "block dimension k=" + std::to_string(k) +
                  " is smaller than t=" + std::to_string(t);
    return res;
  }

  u128 total = gaussian_binomial(v, t, 2);

  if (t == 0) {
    // The single 0-dimensional subspace lies in every block.
    if (static_cast<u128>(d.b()) != static_cast<u128>(lambda)) {
      res.message = "the zero subspace is covered " + std::to_string(d.b()) +
                    " times, expected lambda=" + std::to_string(lambda);
      res.witness_basis = std::vector<uint64_t>{};
      res.witness_count = d.b();
      return res;
    }
    res.ok = true;
    res.message = "ok";
    return res;
  }

  const bool dense = t * v <= 26;
  std::vector<uint16_t> dense_counts;
  std::unordered_map<uint64_t, long long> sparse_counts;
  if (dense) {
    dense_counts.assign(size_t{1} << (t * v), 0);
  } else if (t * v > 64) {
    throw Error("verify_qdesign unsupported for t*ambient > 64");
  }

  auto bump = [&](uint64_t key) {
    if (dense) {
      uint16_t& c = dense_counts[key];
      if (c != 0xffff) ++c;  // saturate; lambda below 65535 in practice
    } else {
      ++sparse_counts[key];
    }
  };

  for (const Subspace& blk : d.blocks()) {
    if (t == 1) {
      for (uint64_t w : blk.nonzero_vectors()) bump(w);
    } else if (t == 2) {
      std::vector<uint64_t> vecs = blk.nonzero_vectors();
      for (size_t a = 0; a < vecs.size(); ++a) {
        for (size_t bidx = a + 1; bidx < vecs.size(); ++bidx) {
          uint64_t x = vecs[a], y = vecs[bidx];
          if ((x ^ y) < y) continue;  // count each plane at its two smallest
          auto [r0, r1] = rref2(x, y);
          bump((r0 << v) | r1);
        }
      }
    } else if (t == k) {
      bump(blk.canonical_key());
    } else {
      // General fallback: enumerate t-subsets of the block's vectors and
      // dedupe by canonical key.  Only sensible for small blocks.
      std::vector<uint64_t> vecs = blk.nonzero_vectors();
      if (binomial(static_cast<int>(vecs.size()), t) > 2'000'000)
        throw Error("verify_qdesign fallback too large for k=" +
                    std::to_string(k) + ", t=" + std::to_string(t));
      std::unordered_set<uint64_t> local;
      std::vector<int> idx(static_cast<size_t>(t));
      std::vector<uint64_t> pick(static_cast<size_t>(t));
      int m = static_cast<int>(vecs.size());
      for (int i = 0; i < t; ++i) idx[static_cast<size_t>(i)] = i;
      while (true) {
        for (int i = 0; i < t; ++i)
          pick[static_cast<size_t>(i)] = vecs[static_cast<size_t>(
              idx[static_cast<size_t>(i)])];
        Subspace s = Subspace::span(v, pick);
        if (s.dim() == t) local.insert(s.canonical_key());
        int i = t - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - t + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j2 = i + 1; j2 < t; ++j2)
          idx[static_cast<size_t>(j2)] = idx[static_cast<size_t>(j2 - 1)] + 1;
      }
      for (uint64_t key : local) bump(key);
    }
  }

  auto decode = [&](uint64_t key) {
    std::vector<uint64_t> rows;
    for (int i = t - 1; i >= 0; --i)
      rows.push_back((key >> (i * v)) & ((uint64_t{1} << v) - 1));
    return rows;
  };

  long long covered = 0;
  if (dense) {
    for (uint64_t key = 0; key < dense_counts.size(); ++key) {
      uint16_t c = dense_counts[key];
      if (c == 0) continue;
      ++covered;
      if (c != lambda) {
        res.message = "a " + std::to_string(t) +
                      "-subspace is covered " + std::to_string(c) +
                      " times, expected lambda=" + std::to_string(lambda);
        res.witness_basis = decode(key);
        res.witness_count = c;
        return res;
      }
    }
  } else {
    for (const auto& [key, c] : sparse_counts) {
      ++covered;
      if (c != lambda) {
        res.message = "a " + std::to_string(t) +
                      "-subspace is covered " + std::to_string(c) +
                      " times, expected lambda=" + std::to_string(lambda);
        res.witness_basis = decode(key);
        res.witness_count = c;
        return res;
      }
    }
  }

  if (lambda > 0 && static_cast<u128>(covered) != total) {
    res.message = "only " + std::to_string(covered) + " of " +
                  u128_str(total) + " " + std::to_string(t) +
                  "-subspaces are covered";
    return res;
  }

  res.ok = true;
  res.message = "ok: 2-analogue " + std::to_string(t) + "-(" +
                std::to_string(v) + "," + std::to_string(k) + "," +
                std::to_string(lambda) + ") with b=" + std::to_string(d.b());
  return res;
}

NecessaryCheck check_q_necessary(const std::vector<DesignParams>& params,
                                 int v, int q) {
  NecessaryCheck res;
  if (params.empty()) {
    res.failures.push_back("no designs given");
    return res;
  }
  if (v < 1 || v > 126 || q < 2) {
    res.failures.push_back("v or q out of supported range");
    return res;
  }

  u128 qv = 1;
  for (int i = 0; i < v; ++i) {
    if (qv > kU128Max / static_cast<unsigned>(q)) {
      res.failures.push_back("q^v overflows 128 bits");
      return res;
    }
    qv *= static_cast<unsigned>(q);
  }

  long long sum_k = 0;
  std::optional<u128> b;
  std::vector<std::optional<u128>> r(params.size());
  bool r_known = true;

  for (size_t i = 0; i < params.size(); ++i) {
    const DesignParams& p = params[i];
    std::string tag = "design " + std::to_string(i + 1);
    if (p.v != v) {
      res.failures.push_back(tag + ": ambient dimension differs from v");
      r_known = false;
      continue;
    }
    if (p.k < 1 || p.k > v || p.t < 0 || p.lambda < 0) {
      res.failures.push_back(tag + ": parameters out of range");
      r_known = false;
      continue;
    }
    sum_k += p.k;
    if (p.lambda > 0) {
      if (p.k < p.t) {
        res.failures.push_back(tag + ": k < t with lambda > 0");
        r_known = false;
        continue;
      }
      u128 num_b = static_cast<u128>(p.lambda) * gaussian_binomial(v, p.t, q);
      u128 den_b = gaussian_binomial(p.k, p.t, q);
      if (num_b % den_b != 0) {
        res.failures.push_back(tag + ": b_i is not an integer");
        r_known = false;
        continue;
      }
      u128 bi = num_b / den_b;
      if (p.t >= 1) {
        u128 num_r = static_cast<u128>(p.lambda) *
                     gaussian_binomial(v - 1, p.t - 1, q);
        u128 den_r = gaussian_binomial(p.k - 1, p.t - 1, q);
        if (num_r % den_r != 0) {
          res.failures.push_back(tag + ": r_i is not an integer");
          r_known = false;
        } else {
          r[i] = num_r / den_r;
        }
      }
      if (b && *b != bi)
        res.failures.push_back(tag + ": b_i = " + u128_str(bi) +
                               " differs from b = " + u128_str(*b));
      if (!b) b = bi;
      if (p.b && static_cast<u128>(*p.b) != bi)
        res.failures.push_back(tag + ": declared b differs from derived b_i");
    }
  }

  if (!b) {
    // No design determined b (all lambda == 0); fall back on declared b.
    for (const DesignParams& p : params)
      if (p.b) {
        b = static_cast<u128>(*p.b);
        break;
      }
    if (!b) {
      res.failures.push_back("cannot determine the common block count b");
      res.ok = false;
      return res;
    }
  }

  // Replications for lambda == 0 designs default via b(q^k - 1) = (q^v - 1) r.
  for (size_t i = 0; i < params.size(); ++i) {
    const DesignParams& p = params[i];
    if (r[i] || p.v != v || p.k < 1 || p.k > v) continue;
    u128 qk = 1;
    for (int e = 0; e < p.k; ++e) qk *= static_cast<unsigned>(q);
    u128 num = *b * (qk - 1);
    if (num % (qv - 1) != 0) {
      res.failures.push_back("design " + std::to_string(i + 1) +
                             ": r_i = b(q^k-1)/(q^v-1) is not an integer");
      r_known = false;
    } else {
      r[i] = num / (qv - 1);
    }
  }

  // Row-sum relation b(q^{k_i} - 1) = (q^v - 1) r_i for every design.
  for (size_t i = 0; i < params.size(); ++i) {
    if (!r[i]) continue;
    const DesignParams& p = params[i];
    u128 qk = 1;
    for (int e = 0; e < p.k; ++e) qk *= static_cast<unsigned>(q);
    if (*b * (qk - 1) != (qv - 1) * *r[i])
      res.failures.push_back("design " + std::to_string(i + 1) +
                             ": b(q^k-1) != (q^v-1) r_i");
  }

  if (sum_k != v)
    res.failures.push_back("sum of block dimensions is " +
                           std::to_string(sum_k) + ", expected v = " +
                           std::to_string(v));

  // Product identity: q^v = prod_i ((q^v-1) r_i / b + 1).
  if (r_known) {
    u128 prod = 1;
    bool prod_ok = true;
    for (size_t i = 0; i < params.size(); ++i) {
      if (!r[i]) {
        prod_ok = false;
        break;
      }
      u128 num = (qv - 1) * *r[i];
      if (num % *b != 0) {
        res.failures.push_back("design " + std::to_string(i + 1) +
                               ": (q^v-1) r_i is not divisible by b");
        prod_ok = false;
        break;
      }
      u128 factor = num / *b + 1;
      if (prod > kU128Max / factor) {
        res.failures.push_back("product identity overflows 128 bits");
        prod_ok = false;
        break;
      }
      prod *= factor;
    }
    if (prod_ok && prod != qv)
      res.failures.push_back("product identity prod((q^v-1)r_i/b + 1) = " +
                             u128_str(prod) + " differs from q^v = " +
                             u128_str(qv));
  }

  res.ok = res.failures.empty();
  return res;
}

QMosaicCheck verify_qmosaic(const std::vector<QDesign>& designs, int v,
                            bool partial) {
  QMosaicCheck res;
  if (designs.empty()) {
    res.message = "no designs given";
    return res;
  }
  long long b = designs.front().b();
  for (const QDesign& d : designs) {
    if (d.v() != v) {
      res.message = "design ambient dimension differs from v";
      return res;
    }
    if (d.b() != b) {
      res.message = "designs have differing block counts";
      return res;
    }
  }
  for (long long j = 0; j < b; ++j) {
    Echelon e;
    int total = 0;
    for (const QDesign& d : designs) {
      const Subspace& s = d.blocks()[static_cast<size_t>(j)];
      total += s.dim();
      for (uint64_t row : s.basis()) e.insert(row);
    }
    if (e.count != total) {
      res.message = "column " + std::to_string(j) +
                    ": blocks intersect nontrivially (rank " +
                    std::to_string(e.count) + " < " + std::to_string(total) +
                    ")";
      res.failing_column = j;
      return res;
    }
    if (!partial && total != v) {
      res.message = "column " + std::to_string(j) +
                    ": dimensions sum to " + std::to_string(total) +
                    ", expected v = " + std::to_string(v);
      res.failing_column = j;
      return res;
    }
  }
  res.ok = true;
  res.message = partial ? "ok: partial q-mosaic" : "ok: q-mosaic";
  return res;
}

// --- the 2-(13,3,1;2) design over GF(2^13) ---

namespace {

constexpr int kQAmbient = 13;
constexpr int kQOrder = 8191;  // 2^13 - 1
constexpr long long kQOrbit = 13LL * kQOrder;  // 106483
constexpr long long kQBlocks = 15 * kQOrbit;   // 1597245

constexpr std::array<std::array<int, 7>, 15> kRepExponents = {{
    {0, 1, 1249, 5040, 7258, 7978, 8105},
    {0, 7, 1857, 6681, 7259, 7381, 7908},
    {0, 9, 1144, 1945, 6771, 7714, 8102},
    {0, 11, 209, 1941, 2926, 3565, 6579},
    {0, 12, 2181, 2519, 3696, 6673, 6965},
    {0, 13, 4821, 5178, 7823, 8052, 8110},
    {0, 17, 291, 1199, 5132, 6266, 8057},
    {0, 20, 1075, 3939, 3996, 4776, 7313},
    {0, 21, 2900, 4226, 4915, 6087, 8008},
    {0, 27, 1190, 3572, 4989, 5199, 6710},
    {0, 30, 141, 682, 2024, 6256, 6406},
    {0, 31, 814, 1161, 1243, 4434, 6254},
    {0, 37, 258, 2093, 4703, 5396, 6469},
    {0, 115, 949, 1272, 1580, 4539, 4873},
    {0, 119, 490, 5941, 6670, 6812, 7312},
}};

constexpr std::array<std::array<int, 4>, 15> kCopyOffsets = {{
    {0, 2, 4, 8},
    {0, 1, 4, 12},
    {0, 1, 2, 3},
    {0, 1, 2, 3},
    {0, 1, 2, 3},
    {0, 1, 2, 3},
    {0, 1, 2, 3},
    {0, 1, 2, 3},
    {0, 1, 2, 3},
    {0, 1, 2, 3},
    {0, 1, 2, 3},
    {0, 1, 2, 4},
    {0, 1, 2, 4},
    {0, 1, 2, 3},
    {0, 1, 2, 4},
}};

struct BraunTables {
  FieldSpec field;
  std::vector<int> expt;  // expt[e] = alpha^e (alpha = the class of x)
  std::vector<int> logt;  // logt[m] = e with alpha^e = m; logt[0] = -1

  BraunTables() : field(2, 13, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1}) {
    expt.assign(kQOrder, 0);
    logt.assign(kQOrder + 1, -1);
    int cur = 1;
    const int alpha = 2;  // canonical index of the polynomial x
    for (int e = 0; e < kQOrder; ++e) {
      expt[static_cast<size_t>(e)] = cur;
      logt[static_cast<size_t>(cur)] = e;
      cur = field.mul(cur, alpha);
    }
    if (cur != 1) throw Error("alpha does not have order 2^13 - 1");
  }

  // The action of Frobenius^a composed with multiplication by alpha^boff on
  // exponents: e -> (e + boff) * 2^a mod (2^13 - 1).
  int transport_exp(int e, int a, int boff) const {
    long long x = (static_cast<long long>(e) + boff) % kQOrder;
    return static_cast<int>((x << a) % kQOrder);
  }
};

const BraunTables& braun_tables() {
  static const BraunTables t;
  return t;
}

DesignParams braun_params() {
  DesignParams p;
  p.t = 2;
  p.v = kQAmbient;
  p.k = 3;
  p.lambda = 1;
  p.b = kQBlocks;
  p.r = 1365;  // lambda * [12 1]_2 / [2 1]_2
  return p;
}

}  // namespace

const OrbitSpec& braun_orbit_spec() {
  static const OrbitSpec spec{braun_tables().field, kRepExponents,
                              kCopyOffsets};
  return spec;
}

QDesign braun_design() {
  const BraunTables& tab = braun_tables();
  std::vector<Subspace> blocks;
  blocks.reserve(static_cast<size_t>(kQBlocks));
  std::unordered_set<uint64_t> seen;
  std::array<uint64_t, 7> vecs{};
  for (const auto& rep : kRepExponents) {
    seen.clear();
    seen.reserve(2 * kQOrbit);
    for (int a = 0; a < kQAmbient; ++a) {
      for (int boff = 0; boff < kQOrder; ++boff) {
        for (size_t i = 0; i < 7; ++i)
          vecs[i] = static_cast<uint64_t>(
              tab.expt[static_cast<size_t>(
                  tab.transport_exp(rep[i], a, boff))]);
        Subspace s = Subspace::span(kQAmbient, vecs);
        if (seen.insert(s.canonical_key()).second)
          blocks.push_back(std::move(s));
      }
    }
  }
  return QDesign(kQAmbient, std::move(blocks), braun_params());
}

PartialQMosaic13 partial_qmosaic_13() {
  const BraunTables& tab = braun_tables();

  // Per orbit: the four aligned representative blocks (copy m multiplied by
  // alpha^{2^offset - worth of exponent shifts}), their 12-dimensional direct
  // sum, and the smallest line outside it.
  std::array<std::array<std::array<int, 7>, 4>, 15> rep_exps;
  std::array<int, 15> line_exp;  // exponent of the completion line generator
  std::vector<std::array<uint64_t, 4>> column0_keys;

  for (int oi = 0; oi < 15; ++oi) {
    Echelon acc;
    std::array<uint64_t, 4> keys{};
    for (int m = 0; m < 4; ++m) {
      std::array<uint64_t, 7> vecs{};
      for (int i = 0; i < 7; ++i) {
        int e = (kRepExponents[static_cast<size_t>(oi)][static_cast<size_t>(i)] +
                 kCopyOffsets[static_cast<size_t>(oi)][static_cast<size_t>(m)]) %
                kQOrder;
        rep_exps[static_cast<size_t>(oi)][static_cast<size_t>(m)]
                [static_cast<size_t>(i)] = e;
        vecs[static_cast<size_t>(i)] =
            static_cast<uint64_t>(tab.expt[static_cast<size_t>(e)]);
        acc.insert(vecs[static_cast<size_t>(i)]);
      }
      keys[static_cast<size_t>(m)] =
          Subspace::span(kQAmbient, vecs).canonical_key();
    }
    if (acc.count != 12)
      throw DirectSumFailure("orbit " + std::to_string(oi + 1) +
                             ": the four copies span dimension " +
                             std::to_string(acc.count) + ", expected 12");
    uint64_t w = 1;
    while (acc.reduces_to_zero(w)) ++w;
    line_exp[static_cast<size_t>(oi)] =
        tab.logt[static_cast<size_t>(w)];
    column0_keys.push_back(keys);
  }

  // Sweep every column of every orbit: transport the four blocks and the
  // line, check the direct-sum property, and tally line multiplicities.
  std::vector<std::vector<Subspace>> copy_blocks(4);
  for (auto& cb : copy_blocks) cb.reserve(static_cast<size_t>(kQBlocks));
  std::vector<Subspace> completion;
  completion.reserve(static_cast<size_t>(kQBlocks));
  std::vector<long long> orbit_sizes;
  std::vector<long long> orbit_line_multiplicity;

  std::vector<int> line_count(static_cast<size_t>(kQOrder) + 1, 0);
  for (int oi = 0; oi < 15; ++oi) {
    std::fill(line_count.begin(), line_count.end(), 0);
    long long cols = 0;
    for (int a = 0; a < kQAmbient; ++a) {
      for (int boff = 0; boff < kQOrder; ++boff) {
        Echelon acc;
        std::array<uint64_t, 7> vecs{};
        for (int m = 0; m < 4; ++m) {
          for (int i = 0; i < 7; ++i) {
            int e = tab.transport_exp(
                rep_exps[static_cast<size_t>(oi)][static_cast<size_t>(m)]
                        [static_cast<size_t>(i)],
                a, boff);
            vecs[static_cast<size_t>(i)] =
                static_cast<uint64_t>(tab.expt[static_cast<size_t>(e)]);
            acc.insert(vecs[static_cast<size_t>(i)]);
          }
          copy_blocks[static_cast<size_t>(m)].push_back(
              Subspace::span(kQAmbient, vecs));
        }
        if (acc.count != 12)
          throw DirectSumFailure(
              "orbit " + std::to_string(oi + 1) + ", column " +
              std::to_string(cols) + ": copies span dimension " +
              std::to_string(acc.count));
        int we = tab.transport_exp(line_exp[static_cast<size_t>(oi)], a, boff);
        uint64_t w =
            static_cast<uint64_t>(tab.expt[static_cast<size_t>(we)]);
        if (acc.reduces_to_zero(w))
          throw DirectSumFailure("orbit " + std::to_string(oi + 1) +
                                 ": transported line lies in the column span");
        uint64_t lv[1] = {w};
        completion.push_back(Subspace::span(kQAmbient, lv));
        ++line_count[static_cast<size_t>(w)];
        ++cols;
      }
    }
    orbit_sizes.push_back(cols);
    int mult = line_count[1];
    for (int mask = 1; mask <= kQOrder; ++mask)
      if (line_count[static_cast<size_t>(mask)] != mult)
        throw Error("orbit " + std::to_string(oi + 1) +
                    ": completion lines are not uniformly distributed");
    orbit_line_multiplicity.push_back(mult);
  }

  PartialQMosaic13 out{
      {},
      QDesign(kQAmbient, std::move(completion),
              DesignParams{1, kQAmbient, 1, 195, kQBlocks, 195}),
      std::move(orbit_sizes),
      std::move(orbit_line_multiplicity),
      std::move(column0_keys)};
  DesignParams bp = braun_params();
  for (int m = 0; m < 4; ++m)
    out.copies.emplace_back(kQAmbient, std::move(copy_blocks[static_cast<size_t>(m)]),
                            bp);
  return out;
}

}  // namespace mosaics
