#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mosaics/design.hpp"
#include "mosaics/errors.hpp"
#include "mosaics/finite_field.hpp"
#include "mosaics/mosaic.hpp"

namespace mosaics {

// Gaussian binomial [n k]_q; exact in 128-bit arithmetic.
unsigned __int128 gaussian_binomial(int n, int k, int q);
// Same value when it fits in long long, otherwise throws.
long long gaussian_binomial_ll(int n, int k, int q);

// A subspace of GF(2)^ambient with ambient <= 64.  Vectors are bitmasks
// (bit i = coordinate i).  The basis is kept in reduced row echelon form,
// rows ordered by decreasing leading bit, which is a canonical form: two
// subspaces are equal iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}

  // Span of arbitrary vectors (reduced internally).
  static Subspace span(int ambient, std::span<const uint64_t> vectors);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<uint64_t>& basis() const { return rows_; }

  bool contains_vector(uint64_t v) const;
  bool contains(const Subspace& o) const;

  // All 2^dim - 1 nonzero vectors, in increasing numeric order.
  std::vector<uint64_t> nonzero_vectors() const;

  // Basis rows packed row-major into a single word: row 0 (highest leading
  // bit) occupies the most significant ambient-bit group.  Requires
  // dim * ambient <= 64.  Two subspaces of equal ambient and dim are equal
  // iff their keys are equal.
  uint64_t canonical_key() const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }
  auto operator<=>(const Subspace& o) const = default;

 private:
  int ambient_ = 0;
  std::vector<uint64_t> rows_;  // RREF, decreasing leading bit
};

// Sum of subspaces (all of the same ambient).
Subspace subspace_sum(std::span<const Subspace> parts);
// True when dim(sum) equals the sum of dims.
bool is_direct_sum(std::span<const Subspace> parts);

// A t-(v, k, lambda; 2) subspace design over GF(2): blocks are k-dimensional
// subspaces of GF(2)^v, as an ordered list (multiset).
class QDesign {
 public:
  QDesign(int v, std::vector<Subspace> blocks,
          std::optional<DesignParams> declared = std::nullopt);

  int v() const { return v_; }
  long long b() const { return static_cast<long long>(blocks_.size()); }
  const std::vector<Subspace>& blocks() const { return blocks_; }
  const std::optional<DesignParams>& declared() const { return declared_; }

 private:
  int v_ = 0;
  std::vector<Subspace> blocks_;
  std::optional<DesignParams> declared_;
};

// Checks that every block has dimension k and every t-dimensional subspace of
// GF(2)^v is contained in exactly lambda blocks.  The witness (when a count
// is off) is reported as the basis of the offending t-subspace.
struct QDesignCheck {
  bool ok = false;
  std::string message;
  std::optional<std::vector<uint64_t>> witness_basis;
  std::optional<long long> witness_count;
};

QDesignCheck verify_qdesign(const QDesign& d, int t, long long lambda);

// Arithmetic necessary conditions for a q-analogue mosaic scheme over
// GF(q)^v with column count b: per-design integrality of b_i and r_i,
// b_i == b, sum of k_i == v, b*(q^{k_i}-1) == (q^v-1)*r_i, and the product
// identity q^v == prod((q^v-1)/b * r_i + 1).
NecessaryCheck check_q_necessary(const std::vector<DesignParams>& params,
                                 int v, int q);

// Column-aligned mosaic property: designs all have b blocks; in every column
// the blocks must intersect trivially (direct sum), and for a full mosaic the
// column dimensions must sum to v.
struct QMosaicCheck {
  bool ok = false;
  std::string message;
  std::optional<long long> failing_column;
};

QMosaicCheck verify_qmosaic(const std::vector<QDesign>& designs, int v,
                            bool partial);

// --- the 2-(13,3,1;2) design over GF(2^13) and its partial 4-mosaic ---

// The field GF(2^13) with modulus x^13+x^12+x^10+x^9+1 together with the
// 15 orbit representatives (as exponent lists: block = span of alpha^e) and
// the per-orbit multiplier exponents used to align four disjoint copies.
struct OrbitSpec {
  FieldSpec field;
  std::array<std::array<int, 7>, 15> rep_exponents;
  std::array<std::array<int, 4>, 15> copy_offsets;
};

const OrbitSpec& braun_orbit_spec();

// The 2-(13,3,1;2) design: 15 orbits of 3-dimensional subspaces under the
// group generated by the Frobenius map and multiplication by a primitive
// element, 106483 blocks each, 1597245 blocks in total.  Blocks are emitted
// orbit by orbit in a deterministic enumeration order.
QDesign braun_design();

// Four aligned disjoint copies of the 2-(13,3,1;2) design forming a partial
// 4-mosaic, plus the completion column lines: per column (= orbit element)
// the four blocks span a fixed 12-dimensional subspace and the completion
// line is a 1-dimensional complement, transported along the group action.
// The completion lines form a 1-(13,1,195;2) design in which each orbit
// contributes every line exactly 13 times.
struct PartialQMosaic13 {
  std::vector<QDesign> copies;  // 4 designs, column-aligned
  QDesign completion;           // 1597245 lines, one per column
  std::vector<long long> orbit_sizes;              // 15 entries, each 106483
  std::vector<long long> orbit_line_multiplicity;  // per-orbit line count (13)
  std::vector<std::array<uint64_t, 4>> column0_keys;  // keys of the orbit reps
};

PartialQMosaic13 partial_qmosaic_13();

}  // namespace mosaics
