#include <gtest/gtest.h>

#include <algorithm>

#include "freegroup/abelianize.hpp"
#include "freegroup/error.hpp"
#include "freegroup/gn_construction.hpp"
#include "freegroup/stallings.hpp"

using namespace fg;

namespace {

bool has_witness_containing(const VerificationReport& r, const std::string& needle) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(),
                     [&](const std::string& w) { return w.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Gn, AlphabetLayout) {
  auto g = build_gn(2);
  EXPECT_EQ(g.alphabet->names(), (std::vector<std::string>{"a0", "b0", "c0", "t0", "a1", "b1", "t1", "a2", "b2"}));
  EXPECT_EQ(g.sub_alphabet(1)->rank(), 6u);
}

TEST(Gn, DerivedElements) {
  auto g0 = build_gn(0);
  EXPECT_EQ(g0.d[0].str(), "c0^-1 b0 a0 b0^-1 a0^-1");
  auto g1 = build_gn(1);
  EXPECT_EQ(g1.c[1].str(), "t0^-1 c0^-1 b0 a0 b0^-1 a0^-1 t0");
  auto g2 = build_gn(2);
  EXPECT_EQ(g2.s[0].str(), "t0^-1");
  EXPECT_EQ(g2.s[1].str(), "t1^-1 t0^-1");
  for (int i = 0; i <= 2; ++i) EXPECT_TRUE((g2.c[i] * g2.d[i] * commutator(g2.a(i), g2.b(i))).empty());
}

TEST(Gn, RelationChain) {
  for (int n = 0; n <= 6; ++n) EXPECT_TRUE(verify_relation_chain(build_gn(n)).passed()) << n;
}

TEST(Gn, RelationChainCatchesMutation) {
  auto g = build_gn(3);
  g.c[1] = g.c[1] * g.a(0);
  auto r = verify_relation_chain(g);
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_TRUE(has_witness_containing(r, "i=1"));
}

TEST(Gn, FreeFactorChain) {
  auto g2 = build_gn(2);
  EXPECT_TRUE(verify_free_factor_chain(g2).passed());
  EXPECT_EQ(rank(fold_subgroup(g2.alphabet, named_generating_set(g2))), 9u);
  EXPECT_TRUE(verify_free_factor_chain(build_gn(4)).passed());
  EXPECT_THROW(verify_free_factor_chain(build_gn(0)), PreconditionError);
}

TEST(Gn, FreeFactorCatchesDroppedTwistLetter) {
  auto g = build_gn(2);
  auto n1 = complement_basis(g, 1);
  EXPECT_TRUE(verify_free_factor_step(g, 1, n1).passed());
  n1.erase(std::find(n1.begin(), n1.end(), g.t(0)));
  EXPECT_FALSE(verify_free_factor_step(g, 1, n1).passed());
}

TEST(Gn, SurfaceRewrite) {
  for (int n : {2, 4}) {
    auto g = build_gn(n);
    auto r = surface_rewrite(g);
    EXPECT_TRUE(r.identity_residue.empty());
    EXPECT_TRUE(r.dblprime_residue.empty());
    EXPECT_EQ(r.new_basis.size(), static_cast<std::size_t>(3 * (n + 1)));
    EXPECT_TRUE(is_basis_of_ambient(g.alphabet, r.new_basis));
    auto report = verify_surface_rewrite(g);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.params.at("closing_convention"), 0);
  }
  EXPECT_THROW(surface_rewrite(build_gn(3)), PreconditionError);
  EXPECT_THROW(surface_rewrite(build_gn(0)), PreconditionError);
}

TEST(Gn, SurfaceFailsUnderFlippedConvention) {
  auto g = build_gn(4, TwistConvention::kLeft);
  EXPECT_FALSE(g.rewrite->identity_residue.empty());
  auto report = verify_surface_rewrite(g);
  EXPECT_FALSE(report.passed());
  EXPECT_TRUE(has_witness_containing(report, "identity residue"));
  EXPECT_TRUE(verify_relation_chain(g).passed());
}

TEST(Gn, FlagDecomposition) {
  for (int n = 4; n <= 6; ++n)
    for (int i = 1; 2 * i + 2 <= n; ++i) EXPECT_TRUE(explicit_flag_decomposition(build_gn(n), i).passed()) << n << "," << i;
  EXPECT_THROW(explicit_flag_decomposition(build_gn(4), 2), PreconditionError);
  EXPECT_THROW(explicit_flag_decomposition(build_gn(4), 0), PreconditionError);
}

TEST(Gn, FlagNegativeControl) {
  auto g = build_gn(4);
  auto parts = flag_parts(g, 1);
  std::vector<std::vector<Word>> kh{parts.k_part, parts.h_part};
  EXPECT_FALSE(membership_in_free_product_part(kh, g.c[4]));
  std::vector<std::vector<Word>> hl{parts.h_part, parts.l_part};
  EXPECT_TRUE(membership_in_free_product_part(hl, g.c[4]));
}

TEST(Gn, NotDecomposable) {
  for (int n = 1; n <= 8; ++n) {
    auto g = build_gn(n);
    EXPECT_TRUE(verify_not_decomposable(g).passed()) << n;
    auto vc = exponent_vector(g.c[0]);
    auto vd = exponent_vector(g.d[n]);
    for (auto& e : vc) e *= (n % 2 == 1) ? 1 : -1;
    EXPECT_EQ(vd, vc);
  }
  auto g = build_gn(2);
  std::vector<IntVector> control{exponent_vector(g.c[0]), exponent_vector(g.a(0))};
  EXPECT_TRUE(is_basis_extendable_abelian(control));
  EXPECT_THROW(verify_not_decomposable(build_gn(0)), PreconditionError);
}

TEST(Gn, DehnTwists) {
  auto f = Alphabet::parse("x,y,z");
  const std::size_t h[] = {0, 1}, k[] = {2};
  auto tw = dehn_twist_family(f, h, k, {}, Word::parse(f, "x"), 2);
  EXPECT_EQ(tw(Word::parse(f, "z")).str(), "x^2 z x^-2");
  EXPECT_TRUE(dehn_twist_family(f, h, k, {}, Word::parse(f, "x"), 0).is_identity());
  auto ft = Alphabet::parse("x,y,t");
  const std::size_t hnn[] = {2};
  auto tt = dehn_twist_family(ft, h, {}, hnn, Word::parse(ft, "x"), 1);
  EXPECT_EQ(tt(Word::parse(ft, "t")).str(), "x t");
  EXPECT_THROW(dehn_twist_family(f, h, k, {}, Word::parse(f, "z"), 1), PreconditionError);
  const std::size_t overlap[] = {1, 2};
  EXPECT_THROW(dehn_twist_family(f, h, overlap, {}, Word::parse(f, "x"), 1), PreconditionError);
}

TEST(Gn, OrbitChecks) {
  for (const auto& r : documented_orbit_checks()) EXPECT_TRUE(r.passed());
  auto f = Alphabet::parse("x,y,z");
  const std::size_t h[] = {0, 1}, k[] = {2};
  const Word c = Word::parse(f, "x");
  AutomorphismFamily family = [&](long long n) { return dehn_twist_family(f, h, k, {}, c, n); };
  auto fixed = orbit_distinct_check(family, Word::parse(f, "x"), 10);
  EXPECT_FALSE(fixed.passed());
  EXPECT_TRUE(has_witness_containing(fixed, "(0,1)"));
  EXPECT_FALSE(orbit_distinct_check(family, Word::parse(f, "z"), 10).passed());
  EXPECT_THROW(orbit_distinct_check(family, Word(f), 10), DegenerateInput);
}

TEST(Gn, CrossConjugacyScan) {
  auto g = build_gn(2);
  std::vector<Word> h0(g.h_bar[0].begin(), g.h_bar[0].end()), h2(g.h_bar[2].begin(), g.h_bar[2].end());
  auto r = cross_conjugacy_scan(h0, h2, 6);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.witnesses.empty());
  auto f2 = Alphabet::parse("a0,b0");
  const Word a[] = {Word::parse(f2, "a0")}, b[] = {Word::parse(f2, "b0")};
  auto same = cross_conjugacy_scan(a, a, 3);
  EXPECT_FALSE(same.passed());
  EXPECT_EQ(same.witnesses, (std::vector<std::string>{"a0", "a0"}));
  EXPECT_TRUE(cross_conjugacy_scan(a, b, 4).passed());
  EXPECT_EQ(cross_conjugacy_scan(h0, h2, 6, 100).status, Status::kBudgetExhausted);
}
