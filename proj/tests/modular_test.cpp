#include <gtest/gtest.h>

#include <random>

#include "seaweed/modular.hpp"

using namespace seaweed;

TEST(PrimeField, Arithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.neg(3), 4u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_THROW(f.inv(0), std::domain_error);
}

TEST(PrimeField, InverseOverLargePrime) {
  const PrimeField f(2147483647);
  for (Fp a : {Fp{1}, Fp{2}, Fp{12345}, Fp{2147483646}}) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(PrimeField, PrimalityTest) {
  EXPECT_TRUE(PrimeField::is_prime(2147483647));
  EXPECT_TRUE(PrimeField::is_prime(2147483629));
  EXPECT_FALSE(PrimeField::is_prime(2147483649ull));
  EXPECT_FALSE(PrimeField::is_prime(561));  // Carmichael
  EXPECT_THROW(PrimeField(15), std::invalid_argument);
}

TEST(MatrixRank, SmallCases) {
  const PrimeField f(101);
  EXPECT_EQ(matrix_rank({{1, 2}, {2, 4}}, f), 1u);
  EXPECT_EQ(matrix_rank({{1, 2}, {3, 4}}, f), 2u);
  EXPECT_EQ(matrix_rank({{0, 0}, {0, 0}}, f), 0u);
  EXPECT_EQ(matrix_rank({}, f), 0u);
}

TEST(EchelonSpan, MembershipAndCoordinates) {
  const PrimeField f(101);
  EchelonSpan span(3, f);
  EXPECT_TRUE(span.insert({1, 1, 0}));
  EXPECT_TRUE(span.insert({0, 1, 1}));
  EXPECT_FALSE(span.insert({1, 2, 1}));
  EXPECT_EQ(span.rank(), 2u);
  EXPECT_EQ(span.generator_count(), 3u);
  EXPECT_TRUE(span.contains({2, 3, 1}));
  EXPECT_FALSE(span.contains({1, 0, 0}));
}

TEST(EchelonSpan, CoordinatesReconstructTheVector) {
  const PrimeField f(2147483647);
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<Fp> d(0, 2147483646);
  const std::size_t dim = 6;
  std::vector<FpVector> gens;
  EchelonSpan span(dim, f);
  for (int g = 0; g < 4; ++g) {
    FpVector v(dim);
    for (auto& x : v) x = d(gen);
    gens.push_back(v);
    ASSERT_TRUE(span.insert(v));
  }
  FpVector target(dim, 0);
  const FpVector coeffs{3, 0, 5, 9};
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < dim; ++i) target[i] = f.add(target[i], f.mul(coeffs[g], gens[g][i]));
  EXPECT_EQ(span.coordinates(target), coeffs);

  std::vector<std::pair<std::size_t, Fp>> sparse;
  for (std::size_t i = 0; i < dim; ++i)
    if (target[i]) sparse.emplace_back(i, target[i]);
  const auto sc = span.sparse_coordinates(sparse);
  ASSERT_TRUE(sc.has_value());
  FpVector dense(gens.size(), 0);
  for (auto [g, c] : *sc) dense[g] = c;
  EXPECT_EQ(dense, coeffs);
}

TEST(EchelonSpan, UntrackedSpanRefusesCoordinates) {
  const PrimeField f(101);
  EchelonSpan span(2, f, false);
  span.insert({1, 0});
  EXPECT_THROW(span.coordinates({1, 0}), std::logic_error);
  EXPECT_THROW(span.insert({1}), std::invalid_argument);
}
