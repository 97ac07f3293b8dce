#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mosaics/design.hpp"

namespace mosaics {

// The parameter scheme of a c-mosaic on v points with b columns: an ordered
// list of colour parameter tuples (t_i, k_i, lambda_i).  Colours are labelled
// 1..c to match matrix cell values; accessors take 1-based colour numbers.
//
// The constructor validates only structural sanity (ranges and sizes), not
// the arithmetic necessary conditions; use check_necessary for those, so that
// infeasible schemes can still be represented and reported on.
class MosaicScheme {
 public:
  MosaicScheme(int v, long long b, std::vector<DesignParams> colours,
               std::vector<int> labels = {});

  int v() const { return v_; }
  long long b() const { return b_; }
  int colours() const { return static_cast<int>(colours_.size()); }

  // Raw (t, k, lambda) of a colour; b/r fields are as supplied.
  const DesignParams& colour(int colour) const;
  // Colour parameters with b fixed to the scheme's b and r resolved: derived
  // for t >= 1 and lambda > 0, defaulted to b*k/v otherwise (when exact).
  DesignParams resolved_colour(int colour) const;

  // Display label of a colour (defaults to the colour number itself).
  int label(int colour) const { return labels_.at(check(colour) - 1); }
  const std::vector<int>& labels() const { return labels_; }

  bool operator==(const MosaicScheme& o) const {
    return v_ == o.v_ && b_ == o.b_ && colours_ == o.colours_ &&
           labels_ == o.labels_;
  }

 private:
  int check(int colour) const {
    if (colour < 1 || colour > colours()) throw UnknownColour(colour);
    return colour;
  }

  int v_ = 0;
  long long b_ = 0;
  std::vector<DesignParams> colours_;
  std::vector<int> labels_;
};

// A c-mosaic: a v x b matrix whose cell (p, j) holds the colour (1..c) of
// point p in column j.  Cell value 0 marks an uncoloured cell and is only
// meaningful for partial mosaics; verify_mosaic rejects it.
class Mosaic {
 public:
  Mosaic(MosaicScheme scheme, std::vector<std::vector<int>> cells);

  const MosaicScheme& scheme() const { return scheme_; }
  int v() const { return scheme_.v(); }
  long long b() const { return scheme_.b(); }
  int colours() const { return scheme_.colours(); }

  int cell(int point, long long column) const {
    return cells_[static_cast<size_t>(point)][static_cast<size_t>(column)];
  }
  const std::vector<std::vector<int>>& cells() const { return cells_; }

  // The indicator design of one colour (1-based); its declared parameters are
  // the scheme's resolved colour parameters.
  Design colour_class(int colour) const;

  bool has_uncoloured() const;

 private:
  MosaicScheme scheme_;
  std::vector<std::vector<int>> cells_;
};

// Arithmetic necessary conditions for a scheme to admit a mosaic:
//  - each colour with lambda > 0 has integral b_i, r_i and b_i == b;
//  - sum of k_i == v;  sum of r_i == b (r defaulted to b*k/v for lambda == 0).
struct NecessaryCheck {
  bool ok = false;
  std::vector<std::string> failures;
};

NecessaryCheck check_necessary(const MosaicScheme& s);

// Full verification: every cell coloured with a known colour and every colour
// class verifies as its declared t_i-(v, k_i, lambda_i) design.
struct MosaicCheck {
  bool ok = false;
  std::string message;
  std::optional<int> failing_colour;   // 1-based when a colour class fails
  std::vector<DesignCheck> per_colour; // index i-1 for colour i
};

MosaicCheck verify_mosaic(const Mosaic& m);

// Overlays pairwise disjoint designs into one mosaic (colour i+1 is the
// (i+1)-th design).  All designs must share v and block count and carry
// declared parameters.  Throws OverlappingBlocks if two designs collide.
// With allow_partial == false, any uncovered cell throws UncoveredCell.
// With allow_partial == true, uncovered cells stay 0 and the leftover
// column-complements are returned as a design plus its regularity check
// (every point should be left uncovered equally often).
struct MosaicAssembly {
  Mosaic mosaic;
  std::optional<Design> remainder;
  std::optional<DesignCheck> remainder_check;
};

MosaicAssembly from_designs(const std::vector<Design>& designs,
                            bool allow_partial = false);

}  // namespace mosaics
