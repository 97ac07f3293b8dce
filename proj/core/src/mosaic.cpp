#include "mosaics/mosaic.hpp"

#include <numeric>

namespace mosaics {

MosaicScheme::MosaicScheme(int v, long long b,
                           std::vector<DesignParams> colours,
                           std::vector<int> labels)
    : v_(v), b_(b), colours_(std::move(colours)), labels_(std::move(labels)) {
  if (v_ < 1) throw Error("scheme needs at least one point");
  if (b_ < 1) throw Error("scheme needs at least one column");
  if (colours_.empty()) throw Error("scheme needs at least one colour");
  for (const DesignParams& p : colours_) {
    if (p.t < 0 || p.lambda < 0 || p.k < 1 || p.k > v_)
      throw Error("colour parameters out of range");
    if (p.v != 0 && p.v != v_)
      throw Error("colour v does not match the scheme");
  }
  for (DesignParams& p : colours_) p.v = v_;
  if (labels_.empty()) {
    labels_.resize(colours_.size());
    std::iota(labels_.begin(), labels_.end(), 1);
  }
  if (labels_.size() != colours_.size())
    throw Error("label list length does not match colour count");
}

const DesignParams& MosaicScheme::colour(int colour) const {
  return colours_[static_cast<size_t>(check(colour)) - 1];
}

DesignParams MosaicScheme::resolved_colour(int colour) const {
  DesignParams p = colours_[static_cast<size_t>(check(colour)) - 1];
  p.b = b_;
  if (p.lambda > 0 && p.t >= 1 && p.k >= p.t) {
    try {
      DesignParams derived = derive_params(p.t, v_, p.k, p.lambda);
      p.r = derived.r;
    } catch (const NonIntegralParameters&) {
      p.r.reset();
    }
  } else if ((b_ * p.k) % v_ == 0) {
    p.r = b_ * p.k / v_;
  } else {
    p.r.reset();
  }
  return p;
}

Mosaic::Mosaic(MosaicScheme scheme, std::vector<std::vector<int>> cells)
    : scheme_(std::move(scheme)), cells_(std::move(cells)) {
  if (static_cast<int>(cells_.size()) != scheme_.v())
    throw Error("cell matrix has " + std::to_string(cells_.size()) +
                " rows, scheme expects " + std::to_string(scheme_.v()));
  for (const auto& row : cells_) {
    if (static_cast<long long>(row.size()) != scheme_.b())
      throw Error("cell matrix row length does not match scheme b");
    for (int cval : row)
      if (cval < 0 || cval > scheme_.colours())
        throw Error("cell value " + std::to_string(cval) +
                    " outside 0..c range");
  }
}

Design Mosaic::colour_class(int colour) const {
  DesignParams p = scheme_.resolved_colour(colour);  // validates the colour
  std::vector<BitVec> blocks(static_cast<size_t>(b()), BitVec(v()));
  for (int pt = 0; pt < v(); ++pt)
    for (long long j = 0; j < b(); ++j)
      if (cells_[static_cast<size_t>(pt)][static_cast<size_t>(j)] == colour)
        blocks[static_cast<size_t>(j)].set(pt);
  return Design(v(), std::move(blocks), p);
}

bool Mosaic::has_uncoloured() const {
  for (const auto& row : cells_)
    for (int cval : row)
      if (cval == 0) return true;
  return false;
}

NecessaryCheck check_necessary(const MosaicScheme& s) {
  NecessaryCheck res;
  long long sum_k = 0;
  long long sum_r = 0;
  bool r_known = true;
  for (int i = 1; i <= s.colours(); ++i) {
    const DesignParams& p = s.colour(i);
    std::string tag = "colour " + std::to_string(i);
    sum_k += p.k;
    if (p.lambda > 0 && p.t >= 1) {
      if (p.k < p.t) {
        res.failures.push_back(tag + ": k < t with lambda > 0");
        r_known = false;
        continue;
      }
      // Integrality of lambda_s = lambda*C(v-s,t-s)/C(k-s,t-s) for all
      // 0 <= s <= t (s = 0 gives b, s = 1 gives r).
      bool integral = true;
      for (int step = 0; step <= p.t; ++step) {
        long long num = p.lambda * binomial(s.v() - step, p.t - step);
        long long den = binomial(p.k - step, p.t - step);
        if (num % den != 0) {
          res.failures.push_back(
              tag + ": lambda_" + std::to_string(step) +
              " = lambda*C(v-s,t-s)/C(k-s,t-s) is not an integer");
          integral = false;
          break;
        }
      }
      if (!integral) {
        r_known = false;
        continue;
      }
      DesignParams derived = derive_params(p.t, s.v(), p.k, p.lambda);
      if (*derived.b != s.b()) {
        res.failures.push_back(tag + ": b_i = " + std::to_string(*derived.b) +
                               " differs from scheme b = " +
                               std::to_string(s.b()));
      }
      sum_r += *derived.r;
    } else {
      // lambda == 0 or t == 0: the block count carries no constraint beyond
      // the degenerate t == 0 case (where b_i = lambda), and the replication
      // defaults to the row sum b*k/v, which must be integral.
      if (p.t == 0 && p.lambda > 0 && p.lambda != s.b())
        res.failures.push_back(tag + ": 0-design block count lambda = " +
                               std::to_string(p.lambda) +
                               " differs from scheme b");
      if ((s.b() * p.k) % s.v() != 0) {
        res.failures.push_back(tag +
                               ": replication b*k/v is not an integer");
        r_known = false;
      } else {
        sum_r += s.b() * p.k / s.v();
      }
    }
  }
  if (sum_k != s.v())
    res.failures.push_back("sum of block sizes is " + std::to_string(sum_k) +
                           ", expected v = " + std::to_string(s.v()));
  if (r_known && sum_r != s.b())
    res.failures.push_back("sum of replications is " + std::to_string(sum_r) +
                           ", expected b = " + std::to_string(s.b()));
  res.ok = res.failures.empty();
  return res;
}

MosaicCheck verify_mosaic(const Mosaic& m) {
  MosaicCheck res;

  for (int pt = 0; pt < m.v(); ++pt)
    for (long long j = 0; j < m.b(); ++j)
      if (m.cell(pt, j) == 0) {
        res.message = "uncoloured cell at point " + std::to_string(pt) +
                      ", column " + std::to_string(j);
        return res;
      }

  bool all_ok = true;
  for (int colour = 1; colour <= m.colours(); ++colour) {
    Design cls = m.colour_class(colour);
    const DesignParams& p = m.scheme().colour(colour);
    DesignCheck dc = verify_design(cls, p.t, p.lambda);
    if (!dc.ok && all_ok) {
      all_ok = false;
      res.failing_colour = colour;
      res.message = "colour " + std::to_string(colour) + ": " + dc.message;
    }
    res.per_colour.push_back(std::move(dc));
  }
  res.ok = all_ok;
  if (all_ok) {
    res.message = "ok: " + std::to_string(m.colours()) + "-mosaic on v=" +
                  std::to_string(m.v()) + ", b=" + std::to_string(m.b());
  }
  return res;
}

MosaicAssembly from_designs(const std::vector<Design>& designs,
                            bool allow_partial) {
  if (designs.empty()) throw Error("from_designs needs at least one design");
  int v = designs.front().v();
  long long b = designs.front().b();
  std::vector<DesignParams> colours;
  for (const Design& d : designs) {
    if (d.v() != v) throw Error("designs have differing point counts");
    if (d.b() != b) throw Error("designs have differing block counts");
    if (!d.declared())
      throw Error("from_designs requires declared parameters on every design");
    colours.push_back(*d.declared());
  }

  std::vector<std::vector<int>> cells(
      static_cast<size_t>(v), std::vector<int>(static_cast<size_t>(b), 0));
  for (size_t i = 0; i < designs.size(); ++i) {
    int colour = static_cast<int>(i) + 1;
    for (long long j = 0; j < b; ++j) {
      for (int pt : designs[i].blocks()[static_cast<size_t>(j)].points()) {
        int& cellref = cells[static_cast<size_t>(pt)][static_cast<size_t>(j)];
        if (cellref != 0) throw OverlappingBlocks(pt, j, cellref, colour);
        cellref = colour;
      }
    }
  }

  std::optional<Design> remainder;
  std::optional<DesignCheck> remainder_check;
  if (allow_partial) {
    std::vector<BitVec> rem_blocks(static_cast<size_t>(b), BitVec(v));
    bool any = false;
    for (int pt = 0; pt < v; ++pt)
      for (long long j = 0; j < b; ++j)
        if (cells[static_cast<size_t>(pt)][static_cast<size_t>(j)] == 0) {
          rem_blocks[static_cast<size_t>(j)].set(pt);
          any = true;
        }
    if (any) {
      Design rem(v, std::move(rem_blocks));
      // Regularity of the leftovers: every point uncovered equally often.
      long long lam0 = 0;
      for (const BitVec& blk : rem.blocks())
        if (blk.test(0)) ++lam0;
      remainder_check = verify_design(rem, 1, lam0);
      remainder = std::move(rem);
    }
  } else {
    for (int pt = 0; pt < v; ++pt)
      for (long long j = 0; j < b; ++j)
        if (cells[static_cast<size_t>(pt)][static_cast<size_t>(j)] == 0)
          throw UncoveredCell(pt, j);
  }

  MosaicScheme scheme(v, b, std::move(colours));
  Mosaic mosaic(std::move(scheme), std::move(cells));
  return MosaicAssembly{std::move(mosaic), std::move(remainder),
                        std::move(remainder_check)};
}

}  // namespace mosaics
