#pragma once

#include <utility>
#include <vector>

#include "mosaics/design.hpp"
#include "mosaics/finite_field.hpp"
#include "mosaics/mosaic.hpp"

namespace mosaics {

// A Latin square of order n with symbols 1..n.
struct LatinSquare {
  int n = 0;
  std::vector<std::vector<int>> grid;
};

// L(i, j) = ((i - j) mod n) + 1; every cyclic shift appears as a row.
LatinSquare cyclic_latin_square(int n);
bool is_latin_square(const LatinSquare& l);

// Paley 3-mosaic on q points for a prime power q = 3 (mod 4): cell (p, x) is
// colour 1 when p - x is a nonzero square, colour 2 when p = x, colour 3
// otherwise.  Scheme: 2-(q,(q-1)/2,(q-3)/4) + 2-(q,1,0) + mirror.
Mosaic paley_mosaic(int q);

// Affine-plane mosaic on q^2 points with q^2 + q columns, q colours labelled
// by the field elements 0..q-1.  Colour classes are resolvable 2-(q^2, q, 1)
// designs (the line classes of AG(2, q), shifted by addition).  Columns come
// out grouped by parallel class: for each of the q slope classes one
// projective column followed by the q affine columns of that class.
Mosaic affine_plane_mosaic(int q);

// Mosaic from a resolvable design plus a Latin square (colour of point p in
// class ci, local column j, is L(i, j) where i is the class-local index of
// the block of ci containing p).  The design's declared parameters become
// every colour's parameters.  Throws OrderMismatch when L's order differs
// from v/k and NotAResolution when res is not a resolution of d.
Mosaic resolvable_mosaic(const Design& d, const Resolution& res,
                         const LatinSquare& l);

// v x v cyclic mosaic of v trivial 2-(v,1,0) designs: cell (p, j) has colour
// ((p - j) mod v) + 1.
Mosaic trivial_cyclic_mosaic(int v);

// A resolvable 2-(15,3,1) design (a Kirkman triple system) with its seven
// parallel classes, blocks ordered class by class.
std::pair<Design, Resolution> kirkman_15_fixture();

}  // namespace mosaics
