#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mosaics/bitvec.hpp"
#include "mosaics/errors.hpp"

namespace mosaics {

// Exact binomial coefficient; throws on overflow past long long.
long long binomial(int n, int k);

// Parameter tuple of a t-(v, k, lambda) design.  b and r are present when
// they have been derived or declared; they are not invariants of the struct.
struct DesignParams {
  int t = 0;
  int v = 0;
  int k = 0;
  long long lambda = 0;
  std::optional<long long> b;
  std::optional<long long> r;

  bool operator==(const DesignParams& o) const {
    return t == o.t && v == o.v && k == o.k && lambda == o.lambda &&
           b == o.b && r == o.r;
  }
};

// Fills b = lambda*C(v,t)/C(k,t) and r = lambda*C(v-1,t-1)/C(k-1,t-1).
// Throws NonIntegralParameters when either division is not exact.
DesignParams derive_params(int t, int v, int k, long long lambda);

// A block design on points 0..v-1.  Blocks are an ordered list (a multiset;
// repeated blocks are allowed and multiplicity matters for equality).
class Design {
 public:
  Design(int v, std::vector<BitVec> blocks,
         std::optional<DesignParams> declared = std::nullopt);

  static Design from_point_lists(int v,
                                 const std::vector<std::vector<int>>& lists,
                                 std::optional<DesignParams> declared =
                                     std::nullopt);

  int v() const { return v_; }
  long long b() const { return static_cast<long long>(blocks_.size()); }
  const std::vector<BitVec>& blocks() const { return blocks_; }
  const std::optional<DesignParams>& declared() const { return declared_; }
  void set_declared(std::optional<DesignParams> p) { declared_ = std::move(p); }

  std::vector<std::vector<int>> point_lists() const;

  // Multiset equality of blocks (order-insensitive), same v.
  bool same_blocks(const Design& o) const;

 private:
  int v_ = 0;
  std::vector<BitVec> blocks_;
  std::optional<DesignParams> declared_;
};

// Result of a verification; ok == true means every check passed.  On failure
// the message names the first violated condition and, where applicable,
// witness_subset holds the first offending t-subset (in colex order) together
// with its observed count.
struct DesignCheck {
  bool ok = false;
  std::string message;
  std::optional<std::vector<int>> witness_subset;
  std::optional<long long> witness_count;
};

// Checks that d is a t-(v, k, lambda) design: every block has the same size k
// (the declared k when present, otherwise the first block's size) and every
// t-subset of points lies in exactly lambda blocks.
DesignCheck verify_design(const Design& d, int t, long long lambda);

// Complement every block inside the point set.  When the declared parameters
// are a 2-design with known b and r, the declared parameters become
// 2-(v, v-k, b - 2r + lambda); for a declared 1-design they become
// 1-(v, v-k, b - lambda); otherwise the declared parameters are dropped.
Design complement(const Design& d);

// A resolution: a partition of block indices into parallel classes, each
// class partitioning the point set.
struct Resolution {
  std::vector<std::vector<int>> classes;
};

bool is_resolution(const Design& d, const Resolution& r);

// Deterministic backtracking search for a resolution: each class is seeded
// with the lowest-indexed unused block and extended with the lowest-indexed
// compatible blocks.  Returns nullopt when no resolution exists (including
// when k does not divide v).
std::optional<Resolution> find_resolution(const Design& d);

// v x b incidence matrix with entries 0/1; rows are points, columns blocks.
std::vector<std::vector<uint8_t>> incidence_matrix(const Design& d);
Design design_from_matrix(const std::vector<std::vector<uint8_t>>& m,
                          std::optional<DesignParams> declared = std::nullopt);

}  // namespace mosaics
