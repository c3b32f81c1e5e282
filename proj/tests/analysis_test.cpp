#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "permstego/analysis.hpp"

namespace permstego {
namespace {

TEST(Capacity, KnownValues) {
  EXPECT_EQ(channel_capacity_bits(1), 0.0);
  EXPECT_NEAR(channel_capacity_bits(10), 21.79, 0.01);
  EXPECT_NEAR(channel_capacity_bits(100), std::log2(9.33e157), 0.1);
}

TEST(Capacity, StirlingWithinLogTerm) {
  for (std::size_t n = 2; n <= 200; ++n) {
    const double dn = static_cast<double>(n);
    const double stirling = dn * std::log2(dn) - dn * std::log2(std::exp(1.0));
    EXPECT_LE(std::abs(channel_capacity_bits(n) - stirling), 2.0 * std::log2(dn) + 4.0) << n;
  }
}

TEST(Entropy, Histograms) {
  EXPECT_EQ(entropy_bits(std::vector<std::uint64_t>{0, 0}), 0.0);
  EXPECT_EQ(entropy_bits(std::vector<std::uint64_t>{7, 0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(entropy_bits(std::vector<std::uint64_t>{5, 5}), 1.0);
  EXPECT_DOUBLE_EQ(entropy_bits(std::vector<std::uint64_t>{1, 1, 2}), 1.5);
}

TEST(UniformNatural, StaysInRangeAndCoversIt) {
  std::mt19937_64 rng(1);
  std::vector<int> hits(7, 0);
  for (int k = 0; k < 7000; ++k) {
    const Natural x = uniform_natural_below(rng, 7);
    ASSERT_LT(x, 7);
    ++hits[x.convert_to<std::size_t>()];
  }
  for (const int h : hits) {
    EXPECT_GT(h, 850);
    EXPECT_LT(h, 1150);
  }
  const Natural big = factorial(40) - factorial(39);
  for (int k = 0; k < 200; ++k) EXPECT_LT(uniform_natural_below(rng, big), big);
  EXPECT_EQ(uniform_natural_below(rng, 1), 0);
}

TEST(PositionEntropy, DegenerateLengthsAreZero) {
  const auto one = estimate_position_entropy(1, 1000, {.seed = 3});
  EXPECT_EQ(one.entropy, std::vector<double>{0.0});
  const auto two = estimate_position_entropy(2, 1000, {.seed = 3});
  EXPECT_EQ(two.entropy, (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(two.count(0, 1), 1000u);
}

TEST(PositionEntropy, ThreeItemsMatchesEnumeration) {
  // s in [2, 6) gives [1,0,2] [1,2,0] [2,0,1] [2,1,0].
  const auto t = estimate_position_entropy(3, 100000, {.seed = 9});
  EXPECT_NEAR(t.entropy[0], 1.0, 0.01);
  EXPECT_NEAR(t.entropy[1], 1.5, 0.01);
  EXPECT_NEAR(t.entropy[2], 1.5, 0.01);
  EXPECT_EQ(t.count(0, 0), 0u);
}

TEST(PositionEntropy, IndependentOfThreadCount) {
  const auto serial = estimate_position_entropy(9, 20000, {.seed = 5, .threads = 1});
  const auto parallel = estimate_position_entropy(9, 20000, {.seed = 5, .threads = 4});
  EXPECT_EQ(serial.counts, parallel.counts);
  EXPECT_EQ(serial.entropy, parallel.entropy);
}

TEST(PositionEntropy, BoundsAndFirstPositionSupport) {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto t = estimate_position_entropy(n, 5000, {.seed = n});
    const double cap = std::log2(static_cast<double>(n));
    for (const double h : t.entropy) {
      EXPECT_GE(h, 0.0);
      EXPECT_LE(h, cap + 1e-12);
    }
    EXPECT_EQ(t.count(0, 0), 0u);
    EXPECT_LE(t.entropy[0], std::log2(static_cast<double>(n - 1)) + 1e-12);
    EXPECT_LE(t.total(), static_cast<double>(n) * cap + 1e-9);
  }
}

TEST(TotalEntropy, SmallRange) {
  const auto rows = total_entropy_report(1, 4, 2000, {.seed = 1});
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].total_bits, 0.0);
  EXPECT_EQ(rows[0].max_bits, 0.0);
  EXPECT_EQ(rows[1].total_bits, 0.0);
  EXPECT_EQ(rows[1].max_bits, 2.0);
}

TEST(Scaling, EmptyMessagesNeedOneItem) {
  const auto recs = message_length_scaling(0, 0, default_alphabet(), 100, {.seed = 1});
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].mean_items, 1.0);
  EXPECT_EQ(recs[0].ci95_halfwidth, 0.0);
}

TEST(Scaling, NeverExceedsDeterministicBound) {
  const auto recs = message_length_scaling(1, 12, default_alphabet(), 500, {.seed = 2});
  for (const auto& r : recs) {
    const Natural top = boost::multiprecision::pow(Natural(27), static_cast<unsigned>(r.length)) - 1;
    EXPECT_LE(r.max_items, min_factorial_length(top));
    EXPECT_GE(r.mean_items, 1.0);
    EXPECT_GE(r.ci95_halfwidth, 0.0);
  }
}

TEST(Csv, HeadersAndFixedDecimals) {
  std::ostringstream fig1;
  const std::vector<PositionEntropyTable> tables{estimate_position_entropy(2, 10, {.seed = 1})};
  write_fig1_csv(fig1, tables);
  EXPECT_EQ(fig1.str(), "n,position,entropy_bits\n2,0,0.000000\n2,1,0.000000\n");

  std::ostringstream fig2;
  const std::vector<TotalEntropyRow> rows{{3, 2.5, 4.754887502163468}};
  write_fig2_csv(fig2, rows);
  EXPECT_EQ(fig2.str(), "n,total_bits,max_bits\n3,2.500000,4.754888\n");

  std::ostringstream fig3;
  const std::vector<ScalingRecord> recs{{4, 7.25, 0.0125, 10, 8}};
  write_fig3_csv(fig3, recs);
  EXPECT_EQ(fig3.str(), "L,mean_items,ci95_halfwidth\n4,7.250000,0.012500\n");
}

}  // namespace
}  // namespace permstego
