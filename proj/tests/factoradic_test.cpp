#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "permstego/factoradic.hpp"

namespace permstego {
namespace {

TEST(MinFactorialLength, SmallValues) {
  EXPECT_EQ(min_factorial_length(0), 1u);
  EXPECT_EQ(min_factorial_length(1), 2u);
  EXPECT_EQ(min_factorial_length(5), 3u);
  EXPECT_EQ(min_factorial_length(6), 4u);
  EXPECT_EQ(min_factorial_length(7664821), 11u);
  EXPECT_EQ(min_factorial_length(Natural("128738347489")), 15u);
}

TEST(MinFactorialLength, BracketsByFactorials) {
  for (std::size_t n = 2; n < 40; ++n) {
    EXPECT_EQ(min_factorial_length(factorial(n - 1)), n);
    EXPECT_EQ(min_factorial_length(factorial(n) - 1), n);
  }
}

TEST(FactorialTable, Values) {
  EXPECT_EQ(factorial_table(1), std::vector<Natural>{1});
  EXPECT_EQ(factorial_table(5), (std::vector<Natural>{1, 1, 2, 6, 24}));
  EXPECT_EQ(factorial_table(15).back(), Natural("87178291200"));
}

TEST(Encode, HandTracedExamples) {
  EXPECT_EQ(encode_permutation(0, 1), PermutationCode{0});
  EXPECT_EQ(encode_permutation(1, 2), (PermutationCode{1, 0}));
  EXPECT_EQ(encode_permutation(223, 6), (PermutationCode{1, 5, 2, 0, 4, 3}));
}

TEST(Encode, PaddedLengthStartsWithBaselinePrefix) {
  // d8 = d7 = 0 pick 0 and 1; d6 = floor(223 / 5!) = 1 picks 3 out of [2..7].
  const PermutationCode q = encode_permutation(223, 8);
  EXPECT_EQ(q, (PermutationCode{0, 1, 3, 7, 4, 2, 6, 5}));
  EXPECT_EQ(oracle::brute_force_rank(q), 223u);
}

TEST(Encode, CapacityExceeded) {
  try {
    encode_permutation(6, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapacityExceeded);
  }
  EXPECT_THROW(encode_permutation(0, 0), Error);
}

TEST(Encode, ObserverSeesEveryStep) {
  std::vector<std::size_t> digits;
  encode_permutation(223, 6, [&](const EncodeStep& step) {
    EXPECT_EQ(step.i, 6 - digits.size());
    digits.push_back(step.digit);
  });
  EXPECT_EQ(digits, (std::vector<std::size_t>{1, 4, 1, 0, 1, 0}));
}

TEST(Encode, CustomInitialOrder) {
  const PermutationCode initial{2, 0, 1};
  EXPECT_EQ(encode_permutation(0, std::span<const std::size_t>(initial)), initial);
  const PermutationCode q = encode_permutation(3, std::span<const std::size_t>(initial));
  EXPECT_EQ(q, (PermutationCode{0, 1, 2}));
  EXPECT_EQ(decode_permutation(q, initial), 3);
}

TEST(Decode, Examples) {
  EXPECT_EQ(decode_permutation(PermutationCode{0}), 0);
  EXPECT_EQ(decode_permutation(PermutationCode{1, 5, 2, 0, 4, 3}), 223);
  EXPECT_EQ(decode_permutation(PermutationCode{1, 7, 10, 12, 2, 13, 5, 4, 14, 6, 8, 0, 3, 11, 9}),
            Natural("128738347489"));
}

TEST(Decode, RejectsNonPermutations) {
  for (const PermutationCode& bad : {PermutationCode{0, 0}, PermutationCode{0, 2}, PermutationCode{}}) {
    try {
      decode_permutation(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotAPermutation);
    }
  }
  EXPECT_THROW(decode_permutation(PermutationCode{0, 1}, PermutationCode{0, 1, 2}), Error);
}

TEST(Oracle, BruteForceRankExamples) {
  EXPECT_EQ(oracle::brute_force_rank({0, 1, 2}), 0u);
  EXPECT_EQ(oracle::brute_force_rank({1, 0}), 1u);
  const auto perms = oracle::all_permutations(5);
  ASSERT_EQ(perms.size(), 120u);
  for (std::size_t k = 0; k < perms.size(); ++k) EXPECT_EQ(oracle::brute_force_rank(perms[k]), k);
}

TEST(FactoradicProperty, DecodeMatchesOracleUpToSeven) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto perms = oracle::all_permutations(n);
    for (std::size_t k = 0; k < perms.size(); ++k) {
      ASSERT_EQ(decode_permutation(perms[k]), k);
      ASSERT_EQ(encode_permutation(k, n), perms[k]);
    }
  }
}

TEST(FactoradicProperty, ProofInvariantsHoldAtEveryStep) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const Natural limit = factorial(n);
    for (Natural s = 0; s < limit; ++s) {
      Natural sum = 0;
      Natural last = -1;
      encode_permutation(s, n, [&](const EncodeStep& step) {
        EXPECT_GE(step.residual, 0);
        EXPECT_LE(step.digit, step.i - 1);
        EXPECT_GE(step.next_residual, 0);
        EXPECT_LT(step.next_residual, step.place_value);
        sum += step.place_value * step.digit;
        last = step.next_residual;
      });
      EXPECT_EQ(last, 0);
      EXPECT_EQ(sum, s);
    }
  }
}

TEST(FactoradicProperty, FirstPositionBiasAtMinimalLength) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const Natural s = Natural(rng() % 100000000) + 1;
    const std::size_t n = min_factorial_length(s);
    ASSERT_GE(n, 2u);
    EXPECT_NE(encode_permutation(s, n).front(), 0u);
  }
}

TEST(FactoradicProperty, PaddingNeverChangesValue) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    Natural s = rng();
    s = (s << 64) | rng();
    const std::size_t n = min_factorial_length(s) + rng() % 10;
    EXPECT_EQ(decode_permutation(encode_permutation(s, n)), s);
  }
}

TEST(FactoradicProperty, RandomKeyedRoundtrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    PermutationCode initial = identity_code(n);
    std::shuffle(initial.begin(), initial.end(), rng);
    const Natural s = Natural(rng()) % factorial(n);
    const auto q = encode_permutation(s, std::span<const std::size_t>(initial));
    EXPECT_TRUE(is_permutation_code(q));
    EXPECT_EQ(decode_permutation(q, initial), s);
  }
}

}  // namespace
}  // namespace permstego
