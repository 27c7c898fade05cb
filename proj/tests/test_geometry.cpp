#include <gtest/gtest.h>

#include <random>

#include "campana/geometry.hpp"

using namespace campana;

namespace {

FibreDecomposition fib(std::vector<long> m, bool exceptional = false) { return {std::move(m), exceptional}; }

Multiplicity fin(long v) { return Multiplicity::finite(v); }

}  // namespace

TEST(Fibre, Multiplicities) {
  EXPECT_EQ(multiplicities(fib({2, 3})), (FibreMultiplicities{fin(2), fin(1)}));
  EXPECT_EQ(multiplicities(fib({})), (FibreMultiplicities{Multiplicity::infinite(), Multiplicity::infinite()}));
  EXPECT_EQ(multiplicities(fib({4, 6})), (FibreMultiplicities{fin(4), fin(2)}));
  EXPECT_EQ(multiplicities(fib({4, 6}, true)), multiplicities(fib({4, 6})));
  EXPECT_TRUE(fib({}).empty());
  EXPECT_FALSE(fib({}, true).empty());
  EXPECT_THROW(multiplicities(fib({0, 2})), InvalidArgument);
}

TEST(Fibre, Classification) {
  EXPECT_EQ(classify_fibre(fib({2, 3})), (FibreClass{true, false}));
  EXPECT_EQ(classify_fibre(fib({1, 5})), (FibreClass{false, false}));
  EXPECT_EQ(classify_fibre(fib({2, 2})), (FibreClass{true, true}));
  EXPECT_EQ(classify_fibre(fib({})), (FibreClass{true, true}));
}

TEST(Fibre, GcdDividesInf) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> len(1, 6), val(1, 60);
  for (int i = 0; i < 5000; ++i) {
    std::vector<long> m(len(rng));
    for (auto& v : m) v = val(rng);
    const auto r = multiplicities(fib(m));
    ASSERT_EQ(r.inf.value() % r.gcd.value(), 0);
    const auto c = classify_fibre(fib(m));
    ASSERT_EQ(c.inf_multiple, r.inf.value() >= 2);
    ASSERT_EQ(c.divisible, r.gcd.value() >= 2);
    ASSERT_TRUE(!c.divisible || c.inf_multiple);
  }
}

TEST(OrbifoldBase, XSquaredYCubed) {
  const auto r = orbifold_base({{"0", fib({2, 3})}, {"1", fib({})}, {"inf", fib({})}});
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_EQ(r.entries[0].coefficient, Rational::parse("1/2"));
  EXPECT_EQ(r.entries[1].coefficient, Rational(1));
  EXPECT_EQ(r.entries[2].coefficient, Rational(1));
  EXPECT_TRUE(r.entries[0].inf_multiple);
  EXPECT_FALSE(r.entries[0].divisible);
  EXPECT_TRUE(r.entries[1].m_s.is_infinite());
}

TEST(OrbifoldBase, ReducedAndDarmonFibres) {
  const auto reduced = orbifold_base({{"a", fib({1, 4})}, {"b", fib({1})}});
  for (const auto& e : reduced.entries) EXPECT_EQ(e.coefficient, Rational(0));
  const auto darmon = orbifold_base({{"d", fib({2, 2})}});
  EXPECT_EQ(darmon.entries[0].coefficient, Rational::parse("1/2"));
  EXPECT_TRUE(darmon.entries[0].divisible);
  EXPECT_THROW(orbifold_base({{"a", fib({1})}, {"a", fib({2})}}), InvalidArgument);
}

TEST(Checklist, Conditions) {
  const std::vector<FibreDecomposition> xy{fib({2, 3}), fib({}), fib({})};
  // The empty fibres over 1 and infinity are removed from the total space; only
  // fibres over points of the base that remain are checked.
  const std::vector<FibreDecomposition> remaining{fib({2, 3})};
  EXPECT_EQ(weakly_special_checklist(true, true, remaining), (ChecklistVerdict{true, {}, {}}));
  const std::vector<FibreDecomposition> divisible{fib({1}), fib({2, 2})};
  EXPECT_EQ(weakly_special_checklist(true, true, divisible), (ChecklistVerdict{false, 3, 1}));
  EXPECT_EQ(weakly_special_checklist(false, true, remaining), (ChecklistVerdict{false, 1, {}}));
  EXPECT_EQ(weakly_special_checklist(true, false, remaining), (ChecklistVerdict{false, 2, {}}));
  EXPECT_FALSE(weakly_special_checklist(true, true, xy).certified);
}

TEST(XaFamily, Classification) {
  const std::vector<long> a23{2, 3}, a15{1, 5}, a235{2, 3, 5}, a1{1}, bad{2, 4}, unsorted{3, 2};
  EXPECT_EQ(classify_xa_family(a23), (XaClassification{true, false}));
  EXPECT_EQ(classify_xa_family(a15), (XaClassification{true, true}));
  EXPECT_EQ(classify_xa_family(a235), (XaClassification{true, false}));
  EXPECT_EQ(classify_xa_family(a1), (XaClassification{true, true}));
  EXPECT_THROW(classify_xa_family(bad), InvalidArgument);
  EXPECT_THROW(classify_xa_family(unsorted), InvalidArgument);
  EXPECT_THROW(classify_xa_family(std::vector<long>{}), InvalidArgument);
}

TEST(Kodaira, ReducedRemoval) {
  const auto ii = kodaira_reduced_removal(KodairaStarredType::II);
  EXPECT_EQ(ii.fibre.multiplicities, (std::vector<long>{2, 3, 4, 5, 6, 4, 3, 2}));
  const auto iii = kodaira_reduced_removal(KodairaStarredType::III);
  EXPECT_EQ(iii.fibre.multiplicities, (std::vector<long>{2, 3, 4, 3, 2, 2}));
  const auto iv = kodaira_reduced_removal(KodairaStarredType::IV);
  EXPECT_EQ(iv.fibre.multiplicities, (std::vector<long>{2, 2, 2, 3}));
  for (const auto& r : {ii, iii, iv}) {
    EXPECT_EQ(r.mults, (FibreMultiplicities{fin(2), fin(1)}));
    EXPECT_EQ(r.classification, (FibreClass{true, false}));
  }
  EXPECT_EQ(parse_kodaira_type("III*"), KodairaStarredType::III);
  EXPECT_THROW(parse_kodaira_type("I0*"), InvalidArgument);
  EXPECT_THROW(parse_kodaira_type("mI_n"), InvalidArgument);
}

TEST(Kodaira, RepeatedMultiplicityIsDivisible) {
  for (long m = 2; m <= 12; ++m)
    for (std::size_t n = 1; n <= 6; ++n)
      EXPECT_TRUE(classify_fibre(fib(std::vector<long>(n, m))).divisible);
}

TEST(Weights, Examples) {
  const std::vector<long> a23{2, 3}, a1{1};
  const auto w = campana_weights(a23);
  EXPECT_EQ(w.kernel_basis, (IntMatrix<BigInt>{{3, -2}}));
  EXPECT_EQ(w.splitting, (std::vector<BigInt>{-1, 1}));
  EXPECT_TRUE(w.strata.empty());
  EXPECT_EQ(w.inf, 2);
  EXPECT_EQ(w.gcd, 1);
  const auto one = campana_weights(a1);
  EXPECT_TRUE(one.kernel_basis.empty());
  EXPECT_EQ(one.splitting, (std::vector<BigInt>{1}));
  const auto blocks = campana_weights(a23, std::vector<std::vector<std::size_t>>{{0}, {1}});
  EXPECT_EQ(blocks.strata, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
}

TEST(Weights, NoSplittingWithoutCoprimality) {
  const std::vector<long> a{4, 6};
  const auto w = campana_weights(a);
  EXPECT_FALSE(w.splitting);
  EXPECT_EQ(w.gcd, 2);
  EXPECT_EQ(w.kernel_basis, (IntMatrix<BigInt>{{3, -2}}));
}

TEST(Weights, BlockValidation) {
  const std::vector<long> a{2, 3, 5};
  using Blocks = std::vector<std::vector<std::size_t>>;
  EXPECT_THROW(campana_weights(a, Blocks{{0, 1}}), InvalidArgument);
  EXPECT_THROW(campana_weights(a, Blocks{{0, 1}, {1, 2}}), InvalidArgument);
  EXPECT_THROW(campana_weights(a, Blocks{{0, 1, 3}}), InvalidArgument);
  EXPECT_THROW(campana_weights(std::vector<long>{0, 1}), InvalidArgument);
  const auto w = campana_weights(a, Blocks{{0, 2}, {1}});
  EXPECT_EQ(w.strata, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
}

TEST(CampanaSpace, Reports) {
  const auto two = campana_space_report(AtLeast{2});
  EXPECT_EQ(two.atoms, (std::vector<long>{2, 3}));
  EXPECT_EQ(two.torus_rank, 2u);
  EXPECT_EQ(two.coefficient, Rational::parse("1/2"));
  EXPECT_FALSE(two.divisible);
  const auto one = campana_space_report(AtLeast{1});
  EXPECT_EQ(one.atoms, (std::vector<long>{1}));
  EXPECT_EQ(one.coefficient, Rational(0));
  const auto root = campana_space_report(DivisibleBy{2});
  EXPECT_EQ(root.atoms, (std::vector<long>{2}));
  EXPECT_TRUE(root.divisible);
  EXPECT_THROW(campana_space_report(Log{}), InvalidArgument);
  const auto u = campana_space_report(SemigroupUnion{NumericalSemigroup({2, 7}), NumericalSemigroup({3})});
  EXPECT_EQ(u.atoms, (std::vector<long>{2, 7, 3}));
  EXPECT_EQ(u.weights.strata, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}}));
}

TEST(CampanaSpace, LowerBoundsAreNeverDivisible) {
  for (long m = 1; m <= 40; ++m) {
    const auto r = campana_space_report(AtLeast{m});
    ASSERT_FALSE(r.divisible) << m;
    ASSERT_EQ(r.atoms.size(), static_cast<std::size_t>(m));
    ASSERT_EQ(NumericalSemigroup(r.atoms).is_cofinite(), !r.divisible);
    ASSERT_EQ(r.coefficient, Rational(1) - Rational(BigInt(1), BigInt(m)));
  }
}
