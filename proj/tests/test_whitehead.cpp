#include <gtest/gtest.h>

#include <boost/integer/common_factor.hpp>
#include <random>

#include "freegroup/abelianize.hpp"
#include "freegroup/error.hpp"
#include "freegroup/whitehead.hpp"
#include "oracles.hpp"

using namespace fg;

namespace {

AlphabetPtr f2() { return Alphabet::parse("a0,b0"); }
Word w(const std::string& text) { return Word::parse(f2(), text); }

}  // namespace

TEST(Whitehead, GeneratorCounts) {
  EXPECT_EQ(type_one_automorphisms(f2()).size(), 8u);
  EXPECT_EQ(type_two_automorphisms(f2()).size(), 12u);
  auto f3 = Alphabet::parse("a,b,c");
  EXPECT_EQ(type_one_automorphisms(f3).size(), 48u);
  EXPECT_EQ(type_two_automorphisms(f3).size(), 90u);
}

TEST(Whitehead, ApplyAndIdentity) {
  Automorphism f(f2(), {w("a0 b0"), w("b0")}, {w("a0 b0^-1"), w("b0")});
  EXPECT_EQ(f(w("a0")).str(), "a0 b0");
  EXPECT_EQ(apply_automorphism(f.inverse(), f(w("a0 b0^2 a0^-1"))), w("a0 b0^2 a0^-1"));
  EXPECT_EQ(Automorphism::identity(f2())(w("a0 b0^-3")), w("a0 b0^-3"));
  EXPECT_THROW(Automorphism(f2(), {w("a0^2"), w("b0")}, {w("a0"), w("b0")}), PreconditionError);
}

TEST(Whitehead, RecordedInversesCompose) {
  std::mt19937_64 rng(21);
  auto f3 = Alphabet::parse("a,b,c");
  for (const auto& f : whitehead_generators(f3)) {
    EXPECT_TRUE(compose(f, f.inverse()).is_identity());
    EXPECT_TRUE(compose(f.inverse(), f).is_identity());
    Word x = oracle::word(f3, oracle::random_word_up_to(rng, 3, 0, 8));
    EXPECT_EQ(f.inverse()(f(x)), x);
  }
}

TEST(Whitehead, MinimizeExamples) {
  const Word t1[] = {w("a0 b0 a0^-1")};
  auto m = minimize_tuple(t1);
  ASSERT_EQ(m.tuple.size(), 1u);
  EXPECT_EQ(m.tuple[0].str(), "b0");
  const Word t2[] = {w("a0 b0 a0^-1 b0^-1")};
  EXPECT_EQ(total_cyclic_length(minimize_tuple(t2).tuple), 4u);
  const Word t3[] = {w("a0 a0 b0")};
  auto m3 = minimize_tuple(t3);
  EXPECT_EQ(total_cyclic_length(m3.tuple), 1u);
  Word replay = w("a0 a0 b0");
  for (const auto& step : m3.steps) replay = step(replay);
  EXPECT_EQ(cyclic_length(replay), 1u);
}

TEST(Whitehead, Primitivity) {
  EXPECT_TRUE(is_primitive(w("a0")));
  EXPECT_FALSE(is_primitive(w("a0 b0 a0^-1 b0^-1")));
  EXPECT_TRUE(is_primitive(w("a0 a0 b0")));
  EXPECT_FALSE(is_primitive(w("a0^2")));
  EXPECT_THROW(is_primitive(w("")), DegenerateInput);
}

TEST(Whitehead, ExtendsToBasis) {
  const Word basis[] = {w("a0"), w("b0")};
  EXPECT_TRUE(extends_to_basis(basis));
  const Word square[] = {w("a0^2")};
  EXPECT_FALSE(extends_to_basis(square));
  auto x3 = Alphabet::parse("a0,b0,c0");
  const Word cd[] = {Word::parse(x3, "c0"), Word::parse(x3, "c0^-1 b0 a0 b0^-1 a0^-1")};
  EXPECT_FALSE(extends_to_basis(cd));
  const Word nielsen[] = {w("a0 b0"), w("b0")};
  EXPECT_TRUE(extends_to_basis(nielsen));
  const Word too_many[] = {w("a0"), w("b0"), w("a0 b0")};
  EXPECT_FALSE(extends_to_basis(too_many));
}

TEST(Whitehead, BudgetIsReported) {
  std::vector<std::string> names;
  for (int k = 0; k < 17; ++k) names.push_back("x" + std::to_string(k));
  auto big = Alphabet::make(names);
  EXPECT_THROW(is_primitive(Word::parse(big, "x0 x1")), BudgetExhausted);
}

TEST(WhiteheadOracle, PrimitivityAgreesWithOrbitClosure) {
  auto alphabet = f2();
  const auto primitive = oracle::primitive_classes(2, 6);
  int disagreements = 0;
  for (const auto& raw : oracle::all_words(2, 6)) {
    if (raw.empty()) continue;
    const bool expect = primitive.count(oracle::cyclic_canonical(raw)) > 0;
    if (is_primitive(oracle::word(alphabet, raw)) != expect) ++disagreements;
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(WhiteheadProperty, PrimitivityInvariances) {
  std::mt19937_64 rng(22);
  auto alphabet = f2();
  const auto gens = whitehead_generators(alphabet);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    Word x = oracle::word(alphabet, oracle::random_word_up_to(rng, 2, 1, 7));
    const bool p = is_primitive(x);
    Word g = oracle::word(alphabet, oracle::random_word_up_to(rng, 2, 0, 4));
    EXPECT_EQ(is_primitive(conjugate(x, g)), p);
    EXPECT_EQ(is_primitive(invert(x)), p);
    EXPECT_EQ(is_primitive(gens[pick(rng)](x)), p);
    const Word single[] = {x};
    EXPECT_EQ(extends_to_basis(single), p);
    if (p) {
      auto v = exponent_vector(x);
      BigInt content = 0;
      for (const auto& e : v) content = boost::integer::gcd(content, abs(e));
      EXPECT_EQ(content, 1);
    }
  }
}

TEST(WhiteheadProperty, ExtendsImpliesAbelianExtendable) {
  std::mt19937_64 rng(23);
  auto f3 = Alphabet::parse("a,b,c");
  const auto gens = whitehead_generators(f3);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> size(1, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> tuple;
    if (trial % 2 == 0) {
      Automorphism f = Automorphism::identity(f3);
      for (int k = 0; k < 3; ++k) f = compose(gens[pick(rng)], f);
      for (int k = 0; k < size(rng); ++k) tuple.push_back(f(Word::generator(f3, static_cast<std::size_t>(k))));
    } else {
      for (int k = size(rng); k > 0; --k) tuple.push_back(oracle::word(f3, oracle::random_word_up_to(rng, 3, 1, 4)));
    }
    if (!extends_to_basis(tuple)) continue;
    std::vector<IntVector> vectors;
    for (const auto& x : tuple) vectors.push_back(exponent_vector(x));
    EXPECT_TRUE(is_basis_extendable_abelian(vectors));
  }
}
