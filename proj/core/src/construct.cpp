#include "mosaics/construct.hpp"

#include <algorithm>

namespace mosaics {

LatinSquare cyclic_latin_square(int n) {
  if (n < 1) throw Error("Latin square order must be positive");
  LatinSquare l;
  l.n = n;
  l.grid.assign(static_cast<size_t>(n), std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      l.grid[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          ((i - j) % n + n) % n + 1;
  return l;
}

bool is_latin_square(const LatinSquare& l) {
  if (l.n < 1 || static_cast<int>(l.grid.size()) != l.n) return false;
  for (const auto& row : l.grid)
    if (static_cast<int>(row.size()) != l.n) return false;
  for (int i = 0; i < l.n; ++i) {
    std::vector<bool> row_seen(static_cast<size_t>(l.n) + 1, false);
    std::vector<bool> col_seen(static_cast<size_t>(l.n) + 1, false);
    for (int j = 0; j < l.n; ++j) {
      int a = l.grid[static_cast<size_t>(i)][static_cast<size_t>(j)];
      int bsym = l.grid[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (a < 1 || a > l.n || row_seen[static_cast<size_t>(a)]) return false;
      if (bsym < 1 || bsym > l.n || col_seen[static_cast<size_t>(bsym)])
        return false;
      row_seen[static_cast<size_t>(a)] = true;
      col_seen[static_cast<size_t>(bsym)] = true;
    }
  }
  return true;
}

Mosaic paley_mosaic(int q) {
  int p = 0, n = 0;
  factor_prime_power(q, p, n);
  if (q % 4 != 3)
    throw BadCongruence("q = " + std::to_string(q) +
                        " is not congruent to 3 mod 4");
  FieldSpec f(p, n);

  std::vector<bool> residue(static_cast<size_t>(q), false);
  for (int r : f.quadratic_residues()) residue[static_cast<size_t>(r)] = true;

  std::vector<std::vector<int>> cells(static_cast<size_t>(q),
                                      std::vector<int>(static_cast<size_t>(q)));
  for (int pt = 0; pt < q; ++pt) {
    for (int x = 0; x < q; ++x) {
      int diff = f.sub(pt, x);
      int colour;
      if (diff == 0)
        colour = 2;
      else if (residue[static_cast<size_t>(diff)])
        colour = 1;
      else
        colour = 3;
      cells[static_cast<size_t>(pt)][static_cast<size_t>(x)] = colour;
    }
  }

  int k_half = (q - 1) / 2;
  long long lam = (q - 3) / 4;
  std::vector<DesignParams> colours(3);
  colours[0] = DesignParams{2, q, k_half, lam, q, k_half};
  colours[1] = DesignParams{2, q, 1, 0, q, 1};
  colours[2] = DesignParams{2, q, k_half, lam, q, k_half};
  return Mosaic(MosaicScheme(q, q, std::move(colours)), std::move(cells));
}

Mosaic affine_plane_mosaic(int q) {
  int p = 0, n = 0;
  factor_prime_power(q, p, n);
  FieldSpec f(p, n);

  int v = q * q;
  long long b = static_cast<long long>(q) * q + q;
  std::vector<std::vector<int>> cells(
      static_cast<size_t>(v), std::vector<int>(static_cast<size_t>(b)));

  // Point (i, i2) (row q*i + i2) and parallel class g (field element):
  //  - first column of the class: the line-at-infinity column, colour i + g;
  //  - then q columns j: colour (i * g) + i2 + j.
  // Colours are the field elements, stored as index + 1.
  for (int i = 0; i < q; ++i) {
    for (int i2 = 0; i2 < q; ++i2) {
      size_t row = static_cast<size_t>(q) * static_cast<size_t>(i) +
                   static_cast<size_t>(i2);
      for (int g = 0; g < q; ++g) {
        size_t base = static_cast<size_t>(g) * (static_cast<size_t>(q) + 1);
        cells[row][base] = f.add(i, g) + 1;
        int ig = f.mul(i, g);
        for (int j = 0; j < q; ++j)
          cells[row][base + 1 + static_cast<size_t>(j)] =
              f.add(ig, f.add(i2, j)) + 1;
      }
    }
  }

  std::vector<DesignParams> colours(
      static_cast<size_t>(q), DesignParams{2, v, q, 1, b, q + 1});
  std::vector<int> labels(static_cast<size_t>(q));
  for (int i = 0; i < q; ++i) labels[static_cast<size_t>(i)] = i;
  return Mosaic(MosaicScheme(v, b, std::move(colours), std::move(labels)),
                std::move(cells));
}

Mosaic resolvable_mosaic(const Design& d, const Resolution& res,
                         const LatinSquare& l) {
  if (!d.declared())
    throw Error("resolvable_mosaic requires declared design parameters");
  if (d.blocks().empty()) throw Error("design has no blocks");
  int k = d.blocks().front().count();
  if (k == 0 || d.v() % k != 0)
    throw OrderMismatch("block size does not divide the point count");
  int per_class = d.v() / k;
  if (!is_latin_square(l))
    throw Error("colouring square is not a Latin square");
  if (l.n != per_class)
    throw OrderMismatch("Latin square order " + std::to_string(l.n) +
                        " differs from v/k = " + std::to_string(per_class));
  if (!is_resolution(d, res))
    throw NotAResolution("the given classes are not a resolution");

  long long b = d.b();
  std::vector<std::vector<int>> cells(
      static_cast<size_t>(d.v()),
      std::vector<int>(static_cast<size_t>(b), 0));
  for (size_t ci = 0; ci < res.classes.size(); ++ci) {
    const std::vector<int>& cls = res.classes[ci];
    for (size_t bi = 0; bi < cls.size(); ++bi) {
      const BitVec& blk = d.blocks()[static_cast<size_t>(cls[bi])];
      for (int j = 0; j < per_class; ++j) {
        size_t col = ci * static_cast<size_t>(per_class) +
                     static_cast<size_t>(j);
        int colour = l.grid[bi][static_cast<size_t>(j)];
        for (int pt : blk.points())
          cells[static_cast<size_t>(pt)][col] = colour;
      }
    }
  }

  std::vector<DesignParams> colours(static_cast<size_t>(per_class),
                                    *d.declared());
  return Mosaic(MosaicScheme(d.v(), b, std::move(colours)), std::move(cells));
}

Mosaic trivial_cyclic_mosaic(int v) {
  if (v < 1) throw Error("need at least one point");
  std::vector<std::vector<int>> cells(static_cast<size_t>(v),
                                      std::vector<int>(static_cast<size_t>(v)));
  for (int pt = 0; pt < v; ++pt)
    for (int j = 0; j < v; ++j)
      cells[static_cast<size_t>(pt)][static_cast<size_t>(j)] =
          ((pt - j) % v + v) % v + 1;
  std::vector<DesignParams> colours(static_cast<size_t>(v),
                                    DesignParams{2, v, 1, 0, v, 1});
  return Mosaic(MosaicScheme(v, v, std::move(colours)), std::move(cells));
}

std::pair<Design, Resolution> kirkman_15_fixture() {
  static const int kBlocks[35][3] = {
      {0, 5, 10},  {1, 6, 11},  {2, 7, 12},  {3, 8, 13},  {4, 9, 14},
      {0, 1, 4},   {2, 3, 6},   {7, 8, 11},  {9, 10, 13}, {5, 12, 14},
      {1, 2, 5},   {3, 4, 7},   {8, 9, 12},  {10, 11, 14}, {0, 6, 13},
      {4, 5, 8},   {6, 7, 10},  {0, 11, 12}, {2, 13, 14}, {1, 3, 9},
      {2, 4, 10},  {3, 5, 11},  {6, 8, 14},  {0, 7, 9},   {1, 12, 13},
      {4, 6, 12},  {5, 7, 13},  {1, 8, 10},  {2, 9, 11},  {0, 3, 14},
      {3, 10, 12}, {4, 11, 13}, {1, 7, 14},  {0, 2, 8},   {5, 6, 9}};
  std::vector<std::vector<int>> lists;
  lists.reserve(35);
  for (const auto& row : kBlocks) lists.push_back({row[0], row[1], row[2]});
  DesignParams params = derive_params(2, 15, 3, 1);
  Design d = Design::from_point_lists(15, lists, params);
  Resolution res;
  for (int c = 0; c < 7; ++c) {
    std::vector<int> cls(5);
    for (int i = 0; i < 5; ++i) cls[static_cast<size_t>(i)] = 5 * c + i;
    res.classes.push_back(std::move(cls));
  }
  return {std::move(d), std::move(res)};
}

}  // namespace mosaics
