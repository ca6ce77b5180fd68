#include "freegroup/gn_construction.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "freegroup/abelianize.hpp"
#include "freegroup/stallings.hpp"

namespace fg {
namespace {

std::vector<std::string> gn_names(int n) {
  std::vector<std::string> names{"a0", "b0", "c0"};
  for (int i = 1; i <= n; ++i) {
    names.push_back("t" + std::to_string(i - 1));
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  return names;
}

std::vector<Word> translate_all(std::span<const Word> words, const AlphabetPtr& target) {
  std::vector<Word> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(translate(w, target));
  return out;
}

std::string bigint_vector_string(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

void append(std::vector<Word>& out, std::initializer_list<Word> words) { out.insert(out.end(), words); }

}  // namespace

Word GnConstruction::a(int i) const { return Word::generator(alphabet, "a" + std::to_string(i)); }
Word GnConstruction::b(int i) const { return Word::generator(alphabet, "b" + std::to_string(i)); }
Word GnConstruction::t(int i) const { return Word::generator(alphabet, "t" + std::to_string(i)); }

AlphabetPtr GnConstruction::sub_alphabet(int k) const {
  if (k < 0 || k > n) throw PreconditionError("sub-alphabet index out of range");
  return alphabet->prefix(static_cast<std::size_t>(3 * (k + 1)));
}

GnConstruction build_gn(int n, TwistConvention convention) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  GnConstruction g;
  g.n = n;
  g.convention = convention;
  g.alphabet = Alphabet::make(gn_names(n));

  g.c.push_back(Word::generator(g.alphabet, "c0"));
  for (int i = 0; i <= n; ++i) {
    g.d.push_back(invert(g.c[i]) * invert(commutator(g.a(i), g.b(i))));
    g.h_bar.push_back({g.a(i), g.b(i), g.c[i]});
    if (i == n) break;
    const Word ti = g.t(i);
    g.c.push_back(convention == TwistConvention::kRight ? conjugate(g.d[i], ti) : conjugate(g.d[i], invert(ti)));
  }

  Word prefix(g.alphabet);
  for (int i = 0; i < n; ++i) {
    prefix = prefix * g.t(i);
    g.s.push_back(invert(prefix));
  }

  if (n >= 2 && n % 2 == 0) g.rewrite = surface_rewrite(g);
  return g;
}

VerificationReport verify_relation_chain(const GnConstruction& g) {
  Stopwatch clock;
  VerificationReport report = new_report("relation", {{"n", g.n}});
  for (int i = 0; i <= g.n; ++i) {
    Word residue = g.c[i] * g.d[i] * commutator(g.a(i), g.b(i));
    if (!residue.empty()) report.fail("relation i=" + std::to_string(i) + ": c_i d_i [a_i,b_i] = " + residue.str());
  }
  for (int i = 0; i < g.n; ++i) {
    const Word ti = g.t(i);
    Word expected = g.convention == TwistConvention::kRight ? conjugate(g.d[i], ti) : conjugate(g.d[i], invert(ti));
    if (g.c[i + 1] != expected)
      report.fail("twist i=" + std::to_string(i) + ": c_{i+1} = " + g.c[i + 1].str() + " but d_i^t_i = " + expected.str());
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

std::vector<Word> complement_basis(const GnConstruction& g, int k) {
  if (k < 0 || k > g.n) throw PreconditionError("complement index out of range");
  std::vector<Word> basis{g.a(0), g.b(0)};
  for (int j = 1; j <= k; ++j) append(basis, {g.t(j - 1), g.a(j), g.b(j)});
  return basis;
}

std::vector<Word> named_generating_set(const GnConstruction& g) {
  std::vector<Word> gens;
  for (int i = 0; i <= g.n; ++i) append(gens, {g.a(i), g.b(i), g.c[i], g.d[i]});
  for (int i = 0; i < g.n; ++i) gens.push_back(g.t(i));
  return gens;
}

VerificationReport verify_free_factor_step(const GnConstruction& g, int k, std::span<const Word> complement) {
  if (k < 0 || k >= g.n) throw PreconditionError("free-factor step needs 0 <= k < n");
  Stopwatch clock;
  VerificationReport report = new_report("freefactor-step", {{"n", g.n}, {"k", k}});
  const AlphabetPtr sub = g.sub_alphabet(k + 1);

  // G_k * <t_k, a_{k+1}, b_{k+1}> = G_{k+1}
  std::vector<Word> chain;
  for (std::size_t x = 0; x < static_cast<std::size_t>(3 * (k + 1)); ++x) chain.push_back(Word::generator(sub, x));
  append(chain, {translate(g.t(k), sub), translate(g.a(k + 1), sub), translate(g.b(k + 1), sub)});
  if (!is_basis_of_ambient(sub, chain)) report.fail("k=" + std::to_string(k) + ": X_k + {t_k, a_k+1, b_k+1} is not a basis");

  // N_k * <t_k> * H_{k+1} = G_{k+1}
  std::vector<Word> split = translate_all(complement, sub);
  append(split, {translate(g.t(k), sub), translate(g.a(k + 1), sub), translate(g.b(k + 1), sub),
                 translate(g.c[k + 1], sub)});
  if (!is_basis_of_ambient(sub, split)) {
    report.fail("k=" + std::to_string(k) + ": complement + t_k + H_" + std::to_string(k + 1) +
                " is not a basis (rank of fold " + std::to_string(rank(fold_subgroup(sub, split))) + ", " +
                std::to_string(split.size()) + " elements)");
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_free_factor_chain(const GnConstruction& g) {
  if (g.n < 1) throw PreconditionError("free-factor chain needs n >= 1");
  Stopwatch clock;
  VerificationReport report = new_report("freefactor", {{"n", g.n}});
  for (int k = 0; k < g.n; ++k) {
    auto step = verify_free_factor_step(g, k, complement_basis(g, k));
    for (auto& w : step.witnesses) report.fail(std::move(w));
  }
  const auto gens = named_generating_set(g);
  const auto graph = fold_subgroup(g.alphabet, gens);
  const std::size_t expected = static_cast<std::size_t>(3 * (g.n + 1));
  if (rank(graph) != expected)
    report.fail("rank of the named generating set is " + std::to_string(rank(graph)) + ", expected " + std::to_string(expected));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

SurfaceRewrite surface_rewrite(const GnConstruction& g) {
  if (g.n < 2 || g.n % 2 != 0) throw PreconditionError("surface rewrite needs even n >= 2");
  const int n = g.n;
  SurfaceRewrite r{{}, {}, {}, {}, Word(g.alphabet), {}, Word(g.alphabet), Word(g.alphabet)};
  for (int i = 1; i <= n; ++i) {
    r.a_prime.emplace(i, conjugate(g.a(i), g.s[i - 1]));
    r.b_prime.emplace(i, conjugate(g.b(i), g.s[i - 1]));
  }
  r.d_n_prime = conjugate(g.d[n], g.s[n - 1]);
  for (int j = 1; j < n; j += 2) {
    r.a_dblprime.emplace(j, conjugate(r.a_prime.at(j), r.d_n_prime));
    r.b_dblprime.emplace(j, conjugate(r.b_prime.at(j), r.d_n_prime));
  }

  Word even_part = commutator(g.b(0), g.a(0));
  for (int j = 2; j <= n; j += 2) even_part = even_part * commutator(r.b_prime.at(j), r.a_prime.at(j));
  Word odd_primed(g.alphabet), odd_dblprimed(g.alphabet);
  for (int j = n - 1; j >= 1; j -= 2) {
    odd_primed = odd_primed * commutator(r.a_prime.at(j), r.b_prime.at(j));
    odd_dblprimed = odd_dblprimed * commutator(r.a_dblprime.at(j), r.b_dblprime.at(j));
  }
  const Word c0_inv = invert(g.c[0]);
  r.identity_residue = c0_inv * even_part * invert(r.d_n_prime) * odd_primed;
  r.dblprime_residue = c0_inv * even_part * odd_dblprimed * invert(r.d_n_prime);

  append(r.new_basis, {g.a(0), g.b(0)});
  for (int j = 1; j <= n; ++j) {
    if (j % 2 == 1) {
      append(r.new_basis, {r.a_dblprime.at(j), r.b_dblprime.at(j)});
    } else {
      append(r.new_basis, {r.a_prime.at(j), r.b_prime.at(j)});
    }
  }
  r.new_basis.push_back(r.d_n_prime);
  for (int i = 0; i < n; ++i) r.new_basis.push_back(g.t(i));
  return r;
}

VerificationReport verify_surface_rewrite(const GnConstruction& g) {
  Stopwatch clock;
  const SurfaceRewrite r = g.rewrite ? *g.rewrite : surface_rewrite(g);
  const TwistConvention other =
      g.convention == TwistConvention::kRight ? TwistConvention::kLeft : TwistConvention::kRight;
  const GnConstruction flipped = build_gn(g.n, other);
  const SurfaceRewrite rf = *flipped.rewrite;

  const bool own_closes = r.identity_residue.empty() && r.dblprime_residue.empty();
  const bool other_closes = rf.identity_residue.empty() && rf.dblprime_residue.empty();
  auto code = [](TwistConvention c) { return c == TwistConvention::kRight ? 0 : 1; };
  std::int64_t closing = -1;
  if (own_closes && !other_closes) closing = code(g.convention);
  if (!own_closes && other_closes) closing = code(other);

  VerificationReport report = new_report("surface", {{"n", g.n}, {"closing_convention", closing}});
  if (!r.identity_residue.empty()) report.fail("identity residue: " + r.identity_residue.str());
  if (!r.dblprime_residue.empty()) report.fail("double-primed residue: " + r.dblprime_residue.str());
  if (other_closes) report.fail("opposite twist convention closes the identity");
  if (r.new_basis.size() != static_cast<std::size_t>(3 * (g.n + 1)) || !is_basis_of_ambient(g.alphabet, r.new_basis))
    report.fail("new basis is not a basis of G_" + std::to_string(g.n));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

FlagParts flag_parts(const GnConstruction& g, int i) {
  if (i < 1 || 2 * i + 2 > g.n) throw PreconditionError("flag index needs 1 <= i <= n/2 - 1");
  FlagParts parts;
  parts.k_part = complement_basis(g, 2 * i - 1);
  parts.k_part.push_back(g.t(2 * i - 1));
  parts.h_part = {g.a(2 * i), g.b(2 * i), g.c[2 * i]};
  parts.l_part.push_back(g.t(2 * i));
  for (int j = 2 * i + 1; j <= g.n; ++j) append(parts.l_part, {g.a(j), g.b(j)});
  for (int j = 2 * i + 1; j < g.n; ++j) parts.l_part.push_back(g.t(j));
  return parts;
}

VerificationReport explicit_flag_decomposition(const GnConstruction& g, int i) {
  const FlagParts parts = flag_parts(g, i);
  Stopwatch clock;
  VerificationReport report = new_report("flag", {{"n", g.n}, {"i", i}});

  std::vector<Word> all = parts.k_part;
  all.insert(all.end(), parts.h_part.begin(), parts.h_part.end());
  all.insert(all.end(), parts.l_part.begin(), parts.l_part.end());
  if (!is_basis_of_ambient(g.alphabet, all)) report.fail("K + H + L is not a basis of G_" + std::to_string(g.n));

  static constexpr const char* kEntry[] = {"a", "b", "c"};
  auto check_members = [&](const std::vector<Word>& lhs, const std::vector<Word>& rhs, int index, const char* label) {
    const std::vector<Word> bases[] = {lhs, rhs};
    for (int e = 0; e < 3; ++e) {
      const Word& w = g.h_bar[static_cast<std::size_t>(index)][static_cast<std::size_t>(e)];
      if (!membership_in_free_product_part(bases, w))
        report.fail(std::string(kEntry[e]) + std::to_string(index) + " = " + w.str() + " not in " + label);
    }
  };
  for (int j = 0; j <= 2 * (i - 1); j += 2) check_members(parts.k_part, parts.h_part, j, "K*H");
  check_members(parts.h_part, parts.l_part, 2 * (i + 1), "H*L");
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_not_decomposable(const GnConstruction& g) {
  if (g.n < 1) throw PreconditionError("decomposition obstruction needs n >= 1");
  Stopwatch clock;
  VerificationReport report = new_report("abelian", {{"n", g.n}});
  const IntVector c0 = exponent_vector(g.c[0]);
  const IntVector dn = exponent_vector(g.d[static_cast<std::size_t>(g.n)]);
  const int sign = g.n % 2 == 1 ? 1 : -1;
  IntVector expected = c0;
  for (auto& x : expected) x *= sign;
  if (dn != expected)
    report.fail("vec(d_n) = " + bigint_vector_string(dn) + ", expected " + bigint_vector_string(expected));
  const IntVector pair[] = {c0, dn};
  if (is_basis_extendable_abelian(pair)) report.fail("{c0, d_n} extends to a basis of the abelianization");
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

Automorphism dehn_twist_family(const AlphabetPtr& alphabet, std::span<const std::size_t> h_part,
                               std::span<const std::size_t> k_part, std::span<const std::size_t> hnn_letters,
                               const Word& c, long long n) {
  require_same_alphabet(alphabet, c.alphabet());
  const std::size_t r = alphabet->rank();
  enum class Role { kNone, kVertex, kConjugated, kStable };
  std::vector<Role> role(r, Role::kNone);
  auto assign = [&](std::span<const std::size_t> part, Role value) {
    for (std::size_t g : part) {
      if (g >= r || role[g] != Role::kNone) throw PreconditionError("parts do not partition the alphabet");
      role[g] = value;
    }
  };
  assign(h_part, Role::kVertex);
  assign(k_part, Role::kConjugated);
  assign(hnn_letters, Role::kStable);
  if (std::find(role.begin(), role.end(), Role::kNone) != role.end())
    throw PreconditionError("parts do not cover the alphabet");
  for (Letter l : c.letters())
    if (role[l.generator] != Role::kVertex) throw PreconditionError("twisting element must lie in the vertex group");

  const Word cn = power(c, n);
  const Word cn_inv = invert(cn);
  std::vector<Word> images, inverse_images;
  for (std::size_t g = 0; g < r; ++g) {
    const Word x = Word::generator(alphabet, g);
    switch (role[g]) {
      case Role::kConjugated:
        images.push_back(cn * x * cn_inv);
        inverse_images.push_back(cn_inv * x * cn);
        break;
      case Role::kStable:
        images.push_back(cn * x);
        inverse_images.push_back(cn_inv * x);
        break;
      default:
        images.push_back(x);
        inverse_images.push_back(x);
    }
  }
  return Automorphism(alphabet, std::move(images), std::move(inverse_images));
}

VerificationReport orbit_distinct_check(const AutomorphismFamily& family, const Word& g, long long max_index) {
  if (g.empty()) throw DegenerateInput("orbit of the identity");
  if (max_index < 1) throw PreconditionError("orbit check needs max_index >= 1");
  Stopwatch clock;
  VerificationReport report = new_report("orbit", {{"N", max_index}});
  std::vector<Word> images;
  for (long long p = 0; p <= max_index; ++p) {
    const Automorphism f = family(p);
    require_same_alphabet(f.alphabet(), g.alphabet());
    images.push_back(f(g));
  }
  for (long long p = 0; p <= max_index && report.passed(); ++p) {
    for (long long q = p + 1; q <= max_index; ++q) {
      const Word& fp = images[static_cast<std::size_t>(p)];
      const Word& fq = images[static_cast<std::size_t>(q)];
      const bool conj = is_conjugate(fp, fq);
      const bool cent = centralizer_equal(fp, fq);
      if (conj || cent) {
        report.fail("pair (" + std::to_string(p) + "," + std::to_string(q) + "): " + fp.str() + " | " + fq.str() +
                    (conj ? " conjugate" : "") + (cent ? " same centralizer" : ""));
        break;
      }
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

std::vector<VerificationReport> documented_orbit_checks() {
  std::vector<VerificationReport> reports;
  {
    // Amalgam F(x,y) *_<x> ...: identity on <x,y>, conjugation by x^n on <z>.
    auto alphabet = Alphabet::make({"x", "y", "z"});
    const std::size_t h[] = {0, 1}, k[] = {2};
    const Word c = Word::parse(alphabet, "x");
    auto family = [=](long long p) { return dehn_twist_family(alphabet, h, k, {}, c, p); };
    auto report = orbit_distinct_check(family, Word::parse(alphabet, "y z"), 10);
    report.params["instance"] = 0;
    reports.push_back(std::move(report));
  }
  {
    // HNN over <x,y>: t -> x^n t.
    auto alphabet = Alphabet::make({"x", "y", "t"});
    const std::size_t h[] = {0, 1}, stable[] = {2};
    const Word c = Word::parse(alphabet, "x");
    auto family = [=](long long p) { return dehn_twist_family(alphabet, h, {}, stable, c, p); };
    auto report = orbit_distinct_check(family, Word::parse(alphabet, "y t"), 10);
    report.params["instance"] = 1;
    reports.push_back(std::move(report));
  }
  return reports;
}

VerificationReport cross_conjugacy_scan(std::span<const Word> part1, std::span<const Word> part2, int max_len,
                                        std::size_t element_cap) {
  if (max_len < 1) throw PreconditionError("max_len must be positive");
  Stopwatch clock;
  VerificationReport report = new_report("separation", {{"max_len", max_len}});

  // Distinct conjugacy classes of nontrivial products, first representative kept.
  struct Enumeration {
    std::vector<std::pair<Word, Word>> classes;  // (canonical, representative)
    bool exhausted = false;
  };
  auto enumerate = [&](std::span<const Word> basis) {
    Enumeration out;
    if (basis.empty()) return out;
    for (const Word& w : basis) require_same_alphabet(basis.front().alphabet(), w.alphabet());
    std::vector<Word> letters;
    for (const Word& w : basis) {
      letters.push_back(w);
      letters.push_back(invert(w));
    }
    std::unordered_set<Word, WordHash> seen;
    std::vector<std::pair<std::size_t, Word>> level{{letters.size(), Word(basis.front().alphabet())}};
    std::size_t produced = 0;
    for (int len = 1; len <= max_len; ++len) {
      std::vector<std::pair<std::size_t, Word>> next;
      for (const auto& [last, word] : level) {
        for (std::size_t k = 0; k < letters.size(); ++k) {
          if (last < letters.size() && (k ^ 1) == last) continue;
          if (++produced > element_cap) {
            out.exhausted = true;
            return out;
          }
          Word product = word * letters[k];
          if (!product.empty()) {
            Word canonical = cyclic_normal_form(product).canonical;
            if (seen.insert(canonical).second) out.classes.emplace_back(std::move(canonical), product);
          }
          next.emplace_back(k, std::move(product));
        }
      }
      level = std::move(next);
    }
    return out;
  };

  const Enumeration first = enumerate(part1);
  const Enumeration second = enumerate(part2);
  if (first.exhausted || second.exhausted) {
    report.status = Status::kBudgetExhausted;
    report.witnesses.push_back("element cap " + std::to_string(element_cap) + " reached");
    report.elapsed_ms = clock.elapsed_ms();
    return report;
  }
  if (!part1.empty() && !part2.empty()) require_same_alphabet(part1.front().alphabet(), part2.front().alphabet());

  std::unordered_map<Word, const Word*, WordHash> index;
  for (const auto& [canonical, rep] : second.classes) index.emplace(canonical, &rep);
  for (const auto& [canonical, rep] : first.classes) {
    if (auto it = index.find(canonical); it != index.end()) {
      report.fail(rep.str());
      report.witnesses.push_back(it->second->str());
      break;
    }
  }
  report.params["classes1"] = static_cast<std::int64_t>(first.classes.size());
  report.params["classes2"] = static_cast<std::int64_t>(second.classes.size());
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace fg
