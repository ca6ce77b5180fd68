#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "freegroup/stallings.hpp"
#include "oracles.hpp"

using namespace fg;

namespace {

AlphabetPtr f2() { return Alphabet::parse("a0,b0"); }

std::vector<Word> words(const AlphabetPtr& alphabet, std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (auto t : texts) out.push_back(Word::parse(alphabet, t));
  return out;
}

}  // namespace

TEST(Stallings, FoldExamples) {
  auto g = fold_subgroup(f2(), words(f2(), {"a0^2", "b0"}));
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
  auto rose = fold_subgroup(f2(), words(f2(), {"a0", "b0"}));
  EXPECT_EQ(rose.vertex_count(), 1u);
  EXPECT_EQ(rose.edge_count(), 2u);
  EXPECT_EQ(rank(rose), 2u);
  auto trivial = fold_subgroup(f2(), std::vector<Word>{});
  EXPECT_EQ(trivial.vertex_count(), 1u);
  EXPECT_EQ(trivial.edge_count(), 0u);
  EXPECT_EQ(rank(trivial), 0u);
  EXPECT_EQ(rank(fold_subgroup(f2(), words(f2(), {"a0^2", "b0", "a0 b0 a0^-1"}))), 3u);
}

TEST(Stallings, Contains) {
  auto g = fold_subgroup(f2(), words(f2(), {"a0^2", "b0"}));
  EXPECT_TRUE(contains(g, Word::parse(f2(), "a0^2")));
  EXPECT_FALSE(contains(g, Word::parse(f2(), "a0")));
  EXPECT_TRUE(contains(g, Word::parse(f2(), "b0 a0^2 b0^-1")));
  EXPECT_TRUE(contains(g, Word(f2())));
}

TEST(Stallings, BasisOf) {
  auto b = basis_of(fold_subgroup(f2(), words(f2(), {"a0^2", "b0"})));
  EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(basis_of(fold_subgroup(f2(), words(f2(), {"a0", "b0"}))), words(f2(), {"a0", "b0"}));
  EXPECT_EQ(basis_of(fold_subgroup(f2(), words(f2(), {"a0 b0 a0^-1"}))), words(f2(), {"a0 b0 a0^-1"}));
}

TEST(Stallings, IsBasisOfAmbient) {
  EXPECT_TRUE(is_basis_of_ambient(f2(), words(f2(), {"a0", "b0"})));
  EXPECT_FALSE(is_basis_of_ambient(f2(), words(f2(), {"a0^2", "b0"})));
  EXPECT_TRUE(is_basis_of_ambient(f2(), words(f2(), {"a0 b0", "b0"})));
  EXPECT_FALSE(is_basis_of_ambient(f2(), words(f2(), {"a0", "b0", "a0 b0"})));
}

TEST(Stallings, FreeProductParts) {
  std::vector<std::vector<Word>> one{words(f2(), {"a0", "b0"})};
  EXPECT_TRUE(membership_in_free_product_part(one, Word::parse(f2(), "a0 b0^-1")));
  std::vector<std::vector<Word>> two{words(f2(), {"a0"}), words(f2(), {"b0"})};
  EXPECT_TRUE(membership_in_free_product_part(two, Word::parse(f2(), "a0 b0 a0")));
  std::vector<std::vector<Word>> sq{words(f2(), {"a0^2"}), words(f2(), {"b0"})};
  EXPECT_FALSE(membership_in_free_product_part(sq, Word::parse(f2(), "a0")));
}

TEST(StallingsProperty, BasisRoundTripAndInvariance) {
  std::mt19937_64 rng(11);
  auto f3 = Alphabet::parse("a,b,c");
  std::uniform_int_distribution<int> count(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> gens;
    for (int k = count(rng); k > 0; --k) gens.push_back(oracle::word(f3, oracle::random_word_up_to(rng, 3, 1, 4)));
    auto g = fold_subgroup(f3, gens);
    auto basis = basis_of(g);
    auto g2 = fold_subgroup(f3, basis);
    EXPECT_EQ(rank(g2), basis.size());
    EXPECT_EQ(rank(g2), rank(g));
    EXPECT_EQ(g2.debug_string(), g.debug_string());
    for (int probe = 0; probe < 20; ++probe) {
      Word p = oracle::word(f3, oracle::random_word_up_to(rng, 3, 0, 8));
      EXPECT_EQ(contains(g, p), contains(g2, p));
    }
    for (const auto& gen : gens) EXPECT_TRUE(contains(g2, gen));
  }
}

TEST(StallingsProperty, AmbientBasisInvariantUnderPermutationAndInversion) {
  std::mt19937_64 rng(12);
  auto f3 = Alphabet::parse("a,b,c");
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::word(f3, oracle::random_word_up_to(rng, 3, 1, 3)));
    if (trial % 2 == 0) {
      gens = {Word::parse(f3, "a"), Word::parse(f3, "b"), Word::parse(f3, "c")};
      gens[1] = gens[1] * power(gens[0], trial % 5 - 2);
      gens[2] = gens[2] * gens[1];
    }
    const bool base = is_basis_of_ambient(f3, gens);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(is_basis_of_ambient(f3, shuffled), base);
    shuffled[static_cast<std::size_t>(trial % 3)] = invert(shuffled[static_cast<std::size_t>(trial % 3)]);
    EXPECT_EQ(is_basis_of_ambient(f3, shuffled), base);
  }
}

TEST(StallingsOracle, AgreesWithNielsenEnumeration) {
  std::mt19937_64 rng(13);
  auto f3 = Alphabet::parse("a,b,c");
  const auto probes = oracle::all_words(3, 5);
  std::uniform_int_distribution<int> count(1, 3);
  int instances = 0;
  while (instances < 30) {
    std::vector<oracle::Raw> gens;
    for (int k = count(rng); k > 0; --k) gens.push_back(oracle::random_word_up_to(rng, 3, 1, 4));
    auto reduced = gens;
    if (!oracle::nielsen_reduce(reduced)) continue;
    ++instances;
    const auto ball = oracle::subgroup_ball(reduced, 8);
    std::vector<Word> fg_gens;
    for (const auto& g : gens) fg_gens.push_back(oracle::word(f3, g));
    auto graph = fold_subgroup(f3, fg_gens);
    EXPECT_EQ(rank(graph), reduced.size());
    for (const auto& p : probes) EXPECT_EQ(contains(graph, oracle::word(f3, p)), ball.count(p) > 0);
    for (const auto& m : ball) EXPECT_TRUE(contains(graph, oracle::word(f3, m)));
    for (const auto& m : oracle::short_products(gens, 4)) EXPECT_TRUE(contains(graph, oracle::word(f3, m)));
  }
}
