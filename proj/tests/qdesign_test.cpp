#include "mosaics/qdesign.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "fixtures.hpp"

using mosaics::gaussian_binomial;
using mosaics::gaussian_binomial_ll;
using mosaics::QDesign;
using mosaics::Subspace;

namespace {

// Heavy shared fixtures, built once per process.
const QDesign& cached_braun() {
  static const QDesign d = mosaics::braun_design();
  return d;
}

const mosaics::PartialQMosaic13& cached_partial() {
  static const mosaics::PartialQMosaic13 p = mosaics::partial_qmosaic_13();
  return p;
}

// All 2-dimensional subspaces of GF(2)^4 (the complete 2-(4,2,1;2) design).
std::vector<Subspace> all_planes_gf2_4() {
  std::vector<Subspace> out;
  std::set<uint64_t> seen;
  for (uint64_t x = 1; x < 16; ++x) {
    for (uint64_t y = x + 1; y < 16; ++y) {
      uint64_t vecs[2] = {x, y};
      Subspace s = Subspace::span(4, vecs);
      if (s.dim() == 2 && seen.insert(s.canonical_key()).second)
        out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

TEST(GaussianBinomial, Values) {
  EXPECT_EQ(gaussian_binomial_ll(0, 0, 2), 1);
  EXPECT_EQ(gaussian_binomial_ll(5, 0, 2), 1);
  EXPECT_EQ(gaussian_binomial_ll(5, 5, 2), 1);
  EXPECT_EQ(gaussian_binomial_ll(3, 1, 2), 7);
  EXPECT_EQ(gaussian_binomial_ll(3, 2, 2), 7);
  EXPECT_EQ(gaussian_binomial_ll(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial_ll(13, 1, 2), 8191);
  EXPECT_EQ(gaussian_binomial_ll(13, 2, 2), 11180715);
  EXPECT_EQ(gaussian_binomial_ll(13, 3, 2), 3269560515LL);
  EXPECT_EQ(gaussian_binomial_ll(5, 2, 3), 1210);
  EXPECT_EQ(gaussian_binomial_ll(4, 2, 3), 130);
  EXPECT_EQ(gaussian_binomial_ll(2, 1, 4), 5);
  // Out-of-range k gives 0 by convention.
  EXPECT_EQ(gaussian_binomial_ll(4, -1, 2), 0);
  EXPECT_EQ(gaussian_binomial_ll(4, 5, 2), 0);
  // The block count of the 2-(13,3,1;2) design.
  EXPECT_EQ(gaussian_binomial_ll(13, 2, 2) / gaussian_binomial_ll(3, 2, 2),
            1597245);
}

TEST(GaussianBinomial, SymmetryAndPascal) {
  for (int q : {2, 3, 4}) {
    for (int n = 1; n <= 10; ++n) {
      for (int k = 0; k <= n; ++k) {
        EXPECT_EQ(gaussian_binomial(n, k, q), gaussian_binomial(n, n - k, q));
        if (k >= 1) {
          unsigned __int128 qk = 1;
          for (int i = 0; i < k; ++i) qk *= static_cast<unsigned>(q);
          EXPECT_TRUE(gaussian_binomial(n, k, q) ==
                      gaussian_binomial(n - 1, k - 1, q) +
                          qk * gaussian_binomial(n - 1, k, q))
              << "q=" << q << " n=" << n << " k=" << k;
        }
      }
    }
  }
}

TEST(GaussianBinomial, Overflow) {
  // [63 2]_2 fits in 128 bits but not in long long.
  EXPECT_NO_THROW(gaussian_binomial(63, 2, 2));
  EXPECT_TRUE(gaussian_binomial(63, 2, 2) >
              static_cast<unsigned __int128>(__INT64_MAX__));
  EXPECT_THROW(gaussian_binomial_ll(63, 2, 2), mosaics::Error);
  EXPECT_THROW(gaussian_binomial(200, 2, 2), mosaics::Error);
  EXPECT_THROW(gaussian_binomial(4, 2, 1), mosaics::Error);
}

TEST(Subspace, SpanReducedEchelon) {
  uint64_t gens[3] = {0b0110, 0b0011, 0b0101};
  Subspace s = Subspace::span(4, gens);
  EXPECT_EQ(s.ambient(), 4);
  EXPECT_EQ(s.dim(), 2);
  // RREF rows in decreasing leading-bit order: {101, 011}.
  ASSERT_EQ(s.basis().size(), 2u);
  EXPECT_EQ(s.basis()[0], 0b101u);
  EXPECT_EQ(s.basis()[1], 0b011u);

  EXPECT_TRUE(s.contains_vector(0));
  EXPECT_TRUE(s.contains_vector(0b011));
  EXPECT_TRUE(s.contains_vector(0b101));
  EXPECT_TRUE(s.contains_vector(0b110));
  EXPECT_FALSE(s.contains_vector(0b001));
  EXPECT_FALSE(s.contains_vector(0b111));

  Subspace empty = Subspace::span(4, std::vector<uint64_t>{});
  EXPECT_EQ(empty.dim(), 0);
  EXPECT_TRUE(empty.contains_vector(0));
  EXPECT_FALSE(empty.contains_vector(1));

  uint64_t bad[1] = {0b1000};
  EXPECT_THROW(Subspace::span(3, bad), mosaics::Error);
  EXPECT_THROW(Subspace::span(0, gens), mosaics::Error);
  EXPECT_THROW(Subspace::span(65, gens), mosaics::Error);
}

TEST(Subspace, CanonicalKey) {
  uint64_t a[2] = {0b110, 0b011};
  uint64_t b[2] = {0b101, 0b011};
  uint64_t c[2] = {0b101, 0b110};
  Subspace sa = Subspace::span(4, a);
  Subspace sb = Subspace::span(4, b);
  Subspace sc = Subspace::span(4, c);
  EXPECT_EQ(sa, sb);
  EXPECT_EQ(sb, sc);
  EXPECT_EQ(sa.canonical_key(), sb.canonical_key());
  EXPECT_EQ(sa.canonical_key(), sc.canonical_key());
  // Packed row-major, first row in the most significant group.
  EXPECT_EQ(sa.canonical_key(), (uint64_t{0b101} << 4) | 0b011);

  uint64_t d[2] = {0b001, 0b010};
  Subspace sd = Subspace::span(4, d);
  EXPECT_NE(sd, sa);
  EXPECT_NE(sd.canonical_key(), sa.canonical_key());

  // dim * ambient > 64 is rejected.
  std::vector<uint64_t> unit(40);
  for (int i = 0; i < 40; ++i) unit[static_cast<size_t>(i)] = uint64_t{1} << i;
  Subspace big = Subspace::span(40, unit);
  EXPECT_EQ(big.dim(), 40);
  EXPECT_THROW(big.canonical_key(), mosaics::Error);
}

TEST(Subspace, NonzeroVectorsAndContains) {
  uint64_t gens[2] = {0b101, 0b011};
  Subspace s = Subspace::span(4, gens);
  std::vector<uint64_t> nz = s.nonzero_vectors();
  ASSERT_EQ(nz.size(), 3u);
  EXPECT_EQ(nz, (std::vector<uint64_t>{0b011, 0b101, 0b110}));

  uint64_t sub[1] = {0b110};
  Subspace line = Subspace::span(4, sub);
  EXPECT_TRUE(s.contains(line));
  EXPECT_FALSE(line.contains(s));
  uint64_t other[1] = {0b100};
  EXPECT_FALSE(s.contains(Subspace::span(4, other)));
  EXPECT_THROW(s.contains(Subspace::span(5, sub)),
               mosaics::DimensionMismatch);
}

TEST(Subspace, SumAndDirectSum) {
  uint64_t g1[1] = {0b0001};
  uint64_t g2[1] = {0b0010};
  uint64_t g3[1] = {0b0011};
  Subspace a = Subspace::span(4, g1);
  Subspace b = Subspace::span(4, g2);
  Subspace c = Subspace::span(4, g3);
  std::vector<Subspace> ab{a, b};
  std::vector<Subspace> abc{a, b, c};
  EXPECT_EQ(mosaics::subspace_sum(ab).dim(), 2);
  EXPECT_TRUE(mosaics::is_direct_sum(ab));
  EXPECT_EQ(mosaics::subspace_sum(abc).dim(), 2);  // c = a + b
  EXPECT_FALSE(mosaics::is_direct_sum(abc));
  EXPECT_THROW(mosaics::subspace_sum(std::vector<Subspace>{}), mosaics::Error);
  std::vector<Subspace> mixed{a, Subspace::span(5, g2)};
  EXPECT_THROW(mosaics::subspace_sum(mixed), mosaics::DimensionMismatch);
  EXPECT_THROW(mosaics::is_direct_sum(mixed), mosaics::DimensionMismatch);
}

TEST(QDesign, CompletePlaneDesign) {
  std::vector<Subspace> planes = all_planes_gf2_4();
  ASSERT_EQ(planes.size(), 35u);  // [4 2]_2

  QDesign d(4, planes);
  mosaics::QDesignCheck c2 = mosaics::verify_qdesign(d, 2, 1);
  EXPECT_TRUE(c2.ok) << c2.message;
  mosaics::QDesignCheck c1 = mosaics::verify_qdesign(d, 1, 7);
  EXPECT_TRUE(c1.ok) << c1.message;  // [3 1]_2 planes through each line
  mosaics::QDesignCheck c0 = mosaics::verify_qdesign(d, 0, 35);
  EXPECT_TRUE(c0.ok) << c0.message;

  // Remove one block: a 2-subspace loses its cover.
  std::vector<Subspace> missing(planes.begin() + 1, planes.end());
  mosaics::QDesignCheck cm = mosaics::verify_qdesign(QDesign(4, missing), 2, 1);
  EXPECT_FALSE(cm.ok);
  EXPECT_NE(cm.message.find("34 of 35"), std::string::npos) << cm.message;

  // Duplicate a block: its 2-subspace is covered twice.
  std::vector<Subspace> doubled = planes;
  doubled.push_back(planes.front());
  mosaics::QDesignCheck cd = mosaics::verify_qdesign(QDesign(4, doubled), 2, 1);
  EXPECT_FALSE(cd.ok);
  ASSERT_TRUE(cd.witness_count.has_value());
  EXPECT_EQ(*cd.witness_count, 2);
  ASSERT_TRUE(cd.witness_basis.has_value());
  EXPECT_EQ(Subspace::span(4, *cd.witness_basis), planes.front());
}

TEST(QDesign, TinyLineMosaic) {
  // GF(2)^2 has three lines; two colours, each running through all three,
  // tile the space column by column.
  auto line = [](uint64_t m) {
    uint64_t g[1] = {m};
    return Subspace::span(2, g);
  };
  QDesign first(2, {line(1), line(2), line(3)},
                mosaics::DesignParams{1, 2, 1, 1, 3, 1});
  QDesign second(2, {line(2), line(3), line(1)},
                 mosaics::DesignParams{1, 2, 1, 1, 3, 1});
  EXPECT_TRUE(mosaics::verify_qdesign(first, 1, 1).ok);
  EXPECT_TRUE(mosaics::verify_qdesign(second, 1, 1).ok);

  mosaics::QMosaicCheck full =
      mosaics::verify_qmosaic({first, second}, 2, false);
  EXPECT_TRUE(full.ok) << full.message;

  // A colliding column is flagged with its index.
  QDesign clash(2, {line(1), line(2), line(3)});
  mosaics::QMosaicCheck bad = mosaics::verify_qmosaic({first, clash}, 2, true);
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.failing_column.has_value());
  EXPECT_EQ(*bad.failing_column, 0);

  // A single colour is fine as a partial mosaic but not as a full one.
  EXPECT_TRUE(mosaics::verify_qmosaic({first}, 2, true).ok);
  EXPECT_FALSE(mosaics::verify_qmosaic({first}, 2, false).ok);
}

TEST(QDesign, VerifyEdgeCases) {
  std::vector<Subspace> planes = all_planes_gf2_4();
  QDesign d(4, planes);
  EXPECT_FALSE(mosaics::verify_qdesign(d, 5, 1).ok);   // t > v
  EXPECT_FALSE(mosaics::verify_qdesign(d, -1, 1).ok);  // bad t
  EXPECT_FALSE(mosaics::verify_qdesign(d, 0, 34).ok);  // wrong b
  EXPECT_FALSE(mosaics::verify_qdesign(d, 3, 1).ok);   // k < t
  // Mixed block dimensions are reported.
  uint64_t g[1] = {1};
  std::vector<Subspace> mixed = planes;
  mixed.push_back(Subspace::span(4, g));
  mosaics::QDesignCheck cm = mosaics::verify_qdesign(QDesign(4, mixed), 2, 1);
  EXPECT_FALSE(cm.ok);
  EXPECT_NE(cm.message.find("dimension"), std::string::npos);
  // Block ambient must match the design ambient.
  EXPECT_THROW(QDesign(5, planes), mosaics::DimensionMismatch);
}

TEST(QDesign, NecessaryConditions) {
  using mosaics::DesignParams;
  long long b = 1597245;
  std::vector<DesignParams> scheme(4, DesignParams{2, 13, 3, 1, b, 1365});
  scheme.push_back(DesignParams{1, 13, 1, 195, b, 195});
  mosaics::NecessaryCheck ok = mosaics::check_q_necessary(scheme, 13, 2);
  EXPECT_TRUE(ok.ok) << (ok.failures.empty() ? "" : ok.failures.front());

  // Dimension sum off by one.
  std::vector<DesignParams> short_sum(scheme.begin(), scheme.end() - 1);
  mosaics::NecessaryCheck bad1 = mosaics::check_q_necessary(short_sum, 13, 2);
  EXPECT_FALSE(bad1.ok);

  // Inconsistent block counts between colours.
  std::vector<DesignParams> clash = scheme;
  clash[4].lambda = 194;
  mosaics::NecessaryCheck bad2 = mosaics::check_q_necessary(clash, 13, 2);
  EXPECT_FALSE(bad2.ok);

  // Non-integral replication: a 2-(4,3,1;2) analogue has b = 5 but
  // r = [3 1]_2/[2 1]_2 = 7/3.
  std::vector<DesignParams> nonint{DesignParams{2, 4, 3, 1}};
  mosaics::NecessaryCheck c = mosaics::check_q_necessary(nonint, 4, 2);
  EXPECT_FALSE(c.ok);
  bool saw_r = false;
  for (const std::string& f : c.failures)
    if (f.find("r_i is not an integer") != std::string::npos) saw_r = true;
  EXPECT_TRUE(saw_r);

  // Two complete plane designs pass every arithmetic test (the obstruction to
  // such a mosaic is geometric, not arithmetic).
  std::vector<DesignParams> planes{DesignParams{2, 4, 2, 1},
                                   DesignParams{2, 4, 2, 1}};
  EXPECT_TRUE(mosaics::check_q_necessary(planes, 4, 2).ok);
}

TEST(QDesign, BraunOrbitSpec) {
  const mosaics::OrbitSpec& spec = mosaics::braun_orbit_spec();
  EXPECT_EQ(spec.field.to_string(), "GF(2^13; x^13+x^12+x^10+x^9+1)");
  EXPECT_EQ(spec.rep_exponents[0],
            (std::array<int, 7>{0, 1, 1249, 5040, 7258, 7978, 8105}));
  EXPECT_EQ(spec.rep_exponents[14],
            (std::array<int, 7>{0, 119, 490, 5941, 6670, 6812, 7312}));
  EXPECT_EQ(spec.copy_offsets[0], (std::array<int, 4>{0, 2, 4, 8}));
  EXPECT_EQ(spec.copy_offsets[2], (std::array<int, 4>{0, 1, 2, 3}));

  std::vector<int> expt = spec.field.exp_table();
  for (int oi = 0; oi < 15; ++oi) {
    EXPECT_EQ(spec.rep_exponents[static_cast<size_t>(oi)][0], 0);
    std::vector<uint64_t> vecs;
    for (int e : spec.rep_exponents[static_cast<size_t>(oi)])
      vecs.push_back(static_cast<uint64_t>(expt[static_cast<size_t>(e)]));
    Subspace s = Subspace::span(13, vecs);
    EXPECT_EQ(s.dim(), 3) << "orbit " << oi;
    // The block's nonzero vectors are exactly the seven listed powers.
    std::vector<uint64_t> expect = vecs;
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(s.nonzero_vectors(), expect) << "orbit " << oi;
  }
}

TEST(QDesign, BraunDesign) {
  const QDesign& d = cached_braun();
  EXPECT_EQ(d.v(), 13);
  EXPECT_EQ(d.b(), 1597245);
  ASSERT_TRUE(d.declared().has_value());
  EXPECT_EQ(d.declared()->t, 2);
  EXPECT_EQ(d.declared()->k, 3);
  EXPECT_EQ(d.declared()->lambda, 1);
  EXPECT_EQ(d.declared()->r, 1365);

  // First block is the first orbit representative.
  const mosaics::OrbitSpec& spec = mosaics::braun_orbit_spec();
  std::vector<int> expt = spec.field.exp_table();
  std::vector<uint64_t> vecs;
  for (int e : spec.rep_exponents[0])
    vecs.push_back(static_cast<uint64_t>(expt[static_cast<size_t>(e)]));
  EXPECT_EQ(d.blocks().front(), Subspace::span(13, vecs));

  mosaics::QDesignCheck c = mosaics::verify_qdesign(d, 2, 1);
  EXPECT_TRUE(c.ok) << c.message;
  EXPECT_NE(c.message.find("2-(13,3,1)"), std::string::npos) << c.message;
}

TEST(QDesign, PartialMosaic13) {
  const mosaics::PartialQMosaic13& p = cached_partial();
  ASSERT_EQ(p.copies.size(), 4u);
  for (const QDesign& d : p.copies) EXPECT_EQ(d.b(), 1597245);
  EXPECT_EQ(p.completion.b(), 1597245);
  ASSERT_EQ(p.orbit_sizes.size(), 15u);
  for (long long s : p.orbit_sizes) EXPECT_EQ(s, 106483);
  ASSERT_EQ(p.orbit_line_multiplicity.size(), 15u);
  for (long long m : p.orbit_line_multiplicity) EXPECT_EQ(m, 13);

  // Column 0 of each orbit holds the four aligned representatives.
  ASSERT_EQ(p.column0_keys.size(), 15u);
  for (int oi = 0; oi < 15; ++oi) {
    size_t col = static_cast<size_t>(oi) * 106483;
    for (int m = 0; m < 4; ++m)
      EXPECT_EQ(p.copies[static_cast<size_t>(m)].blocks()[col].canonical_key(),
                p.column0_keys[static_cast<size_t>(oi)][static_cast<size_t>(m)]);
  }

  // The four copies plus the completion line tile column 0 exactly.
  std::vector<Subspace> column;
  for (const QDesign& d : p.copies) column.push_back(d.blocks().front());
  column.push_back(p.completion.blocks().front());
  EXPECT_TRUE(mosaics::is_direct_sum(column));
  EXPECT_EQ(mosaics::subspace_sum(column).dim(), 13);

  for (const Subspace& s : p.completion.blocks())
    if (s.dim() != 1) FAIL() << "completion block of dimension " << s.dim();

  mosaics::QMosaicCheck qm = mosaics::verify_qmosaic(p.copies, 13, true);
  EXPECT_TRUE(qm.ok) << qm.message;

  mosaics::QDesignCheck cc = mosaics::verify_qdesign(p.completion, 1, 195);
  EXPECT_TRUE(cc.ok) << cc.message;

  mosaics::QDesignCheck c0 = mosaics::verify_qdesign(p.copies[0], 2, 1);
  EXPECT_TRUE(c0.ok) << c0.message;
}
