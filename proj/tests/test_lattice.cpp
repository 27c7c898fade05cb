#include <gtest/gtest.h>

#include <random>

#include "campana/lattice.hpp"
#include "support.hpp"

using namespace campana;

namespace {

std::vector<std::vector<oracle::Int>> to_oracle(const IntMatrix<BigInt>& m) {
  std::vector<std::vector<oracle::Int>> out;
  for (const auto& row : m) {
    std::vector<oracle::Int> r;
    for (const auto& v : row) r.push_back(test::to_oracle(v));
    out.push_back(r);
  }
  return out;
}

bool is_hermite(const IntMatrix<BigInt>& m) {
  std::size_t last_pivot = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::size_t c = 0;
    while (c < m[i].size() && m[i][c] == 0) ++c;
    if (c == m[i].size()) return false;
    if (i > 0 && c <= last_pivot) return false;
    if (m[i][c] <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (m[k][c] < 0 || m[k][c] >= m[i][c]) return false;
    last_pivot = c;
  }
  return true;
}

}  // namespace

TEST(ExtendedGcd, Bezout) {
  for (long a = -30; a <= 30; ++a) {
    for (long b = -30; b <= 30; ++b) {
      const auto e = extended_gcd<std::int64_t>(a, b);
      ASSERT_EQ(e.gcd, std::gcd(a, b));
      ASSERT_EQ(e.s * a + e.t * b, e.gcd);
    }
  }
}

TEST(FloorDiv, RoundsDown) {
  EXPECT_EQ(floor_div(std::int64_t{-7}, std::int64_t{2}), -4);
  EXPECT_EQ(floor_div(std::int64_t{7}, std::int64_t{-2}), -4);
  EXPECT_EQ(floor_div(std::int64_t{6}, std::int64_t{3}), 2);
  EXPECT_EQ(floor_div(BigInt(-7), BigInt(2)), -4);
}

TEST(Kernel, TwoThree) {
  const std::vector<BigInt> a{2, 3};
  const auto k = weight_kernel_basis<BigInt>(a);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (std::vector<BigInt>{3, -2}));
  EXPECT_EQ(weight_splitting<BigInt>(a), (std::vector<BigInt>{-1, 1}));
}

TEST(Kernel, SingleWeight) {
  const std::vector<BigInt> a{1};
  EXPECT_TRUE(weight_kernel_basis<BigInt>(a).empty());
  EXPECT_EQ(weight_splitting<BigInt>(a), (std::vector<BigInt>{1}));
}

TEST(Kernel, HermiteIsCanonical) {
  // Two bases of the same lattice reduce to the same form.
  const IntMatrix<BigInt> b1{{1, 1, -1}, {2, -1, 0}};
  const IntMatrix<BigInt> b2{{3, 0, -1}, {1, 1, -1}};
  EXPECT_EQ(hermite_normal_form(b1), hermite_normal_form(b2));
  EXPECT_TRUE(is_hermite(hermite_normal_form(b1)));
}

TEST(Kernel, RandomTuplesSatisfyLatticeInvariants) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> len(1, 6);
  std::uniform_int_distribution<long> val(1, 50);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<BigInt> a(len(rng));
    for (auto& v : a) v = val(rng);
    const auto k = weight_kernel_basis<BigInt>(a);
    ASSERT_EQ(k.size(), a.size() - 1);
    for (const auto& row : k) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < a.size(); ++i) dot += row[i] * a[i];
      ASSERT_EQ(dot, 0);
    }
    ASSERT_TRUE(is_hermite(k));
    ASSERT_EQ(oracle::rank(to_oracle(k)), k.size());
    if (!k.empty()) {
      ASSERT_EQ(oracle::maximal_minor_gcd(to_oracle(k), a.size()), 1);  // saturated
    }
    BigInt g = 0, dot = 0;
    const auto sigma = weight_splitting<BigInt>(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
      g = gcd(g, a[i]);
      dot += sigma[i] * a[i];
    }
    ASSERT_EQ(dot, g);

    std::vector<std::int64_t> small(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) small[i] = to_int64(a[i]);
    const auto k64 = weight_kernel_basis<std::int64_t>(small);
    for (std::size_t r = 0; r < k.size(); ++r)
      for (std::size_t c = 0; c < a.size(); ++c) ASSERT_EQ(BigInt(from_int64(k64[r][c])), k[r][c]);
  }
}
