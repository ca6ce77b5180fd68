#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "freegroup/report.hpp"
#include "freegroup/whitehead.hpp"
#include "freegroup/word.hpp"

namespace fg {

/// How the HNN letter t_i glues d_i to c_{i+1}.
///   kRight: c_{i+1} = t_i^-1 d_i t_i, i.e. d_i^{t_i} = c_{i+1} with x^g = g^-1 x g.
///   kLeft:  c_{i+1} = t_i d_i t_i^-1.
/// Both give isomorphic groups (t_i -> t_i^-1); only kRight makes the surface
/// rewriting close as written, and it is the default.
enum class TwistConvention { kRight, kLeft };

/// Words of the surface rewriting of G_n (n even). Primed maps are keyed by
/// the surface index i.
struct SurfaceRewrite {
  std::map<int, Word> a_prime;      // a'_i = a_i^{s_{i-1}}, 0 < i <= n
  std::map<int, Word> b_prime;
  std::map<int, Word> a_dblprime;   // a''_j = (a'_j)^{d'_n}, j odd
  std::map<int, Word> b_dblprime;
  Word d_n_prime;                   // d_n^{s_{n-1}}
  std::vector<Word> new_basis;      // a0 b0, a''/b'' odd, a'/b' even, d'_n, t_0..t_{n-1}
  Word identity_residue;            // c0^-1 times the primed product; empty when the identity holds
  Word dblprime_residue;            // same with the double-primed product
};

/// G_n realised inside the free group on
///   X_n = a0 b0 c0 | t0 a1 b1 | t1 a2 b2 | ... | t_{n-1} a_n b_n.
/// X_k is the prefix of length 3(k+1), so G_k is a visible free factor.
struct GnConstruction {
  int n = 0;
  TwistConvention convention = TwistConvention::kRight;
  AlphabetPtr alphabet;
  std::vector<Word> c;                    // c_0..c_n
  std::vector<Word> d;                    // d_i = c_i^-1 [a_i,b_i]^-1
  std::vector<Word> s;                    // s_i = (t_0 ... t_i)^-1, i < n
  std::vector<std::array<Word, 3>> h_bar; // (a_i, b_i, c_i)
  std::optional<SurfaceRewrite> rewrite;  // present for even n >= 2

  Word a(int i) const;
  Word b(int i) const;
  Word t(int i) const;
  /// Alphabet of X_k.
  AlphabetPtr sub_alphabet(int k) const;
};

GnConstruction build_gn(int n, TwistConvention convention = TwistConvention::kRight);

/// c_i d_i [a_i,b_i] = 1 for i <= n and c_{i+1} = d_i^{t_i} for i < n.
VerificationReport verify_relation_chain(const GnConstruction& g);

/// Basis of N_k: N_0 = <a0,b0>, N_j = N_{j-1} * <t_{j-1}> * <a_j,b_j>.
std::vector<Word> complement_basis(const GnConstruction& g, int k);

/// Every a_i, b_i, c_i, d_i, t_i of the construction.
std::vector<Word> named_generating_set(const GnConstruction& g);

/// One step k -> k+1 of the free-factor chain, with the complement of H_{k+1}
/// supplied by the caller (normally complement_basis(g, k)).
VerificationReport verify_free_factor_step(const GnConstruction& g, int k, std::span<const Word> complement);

/// All steps k < n, plus the Stallings rank of the named generating set.
VerificationReport verify_free_factor_chain(const GnConstruction& g);

/// Throws PreconditionError unless n is even and at least 2.
SurfaceRewrite surface_rewrite(const GnConstruction& g);

/// Residues empty, new basis certified, and the opposite twist convention
/// fails to close the identity.
VerificationReport verify_surface_rewrite(const GnConstruction& g);

/// Bases of the three factors of G_n = K * H_{2i} * L.
struct FlagParts {
  std::vector<Word> k_part;
  std::vector<Word> h_part;
  std::vector<Word> l_part;
};

/// Throws PreconditionError unless 1 <= i and 2i + 2 <= n.
FlagParts flag_parts(const GnConstruction& g, int i);
VerificationReport explicit_flag_decomposition(const GnConstruction& g, int i);

/// exponent_vector(d_n) = (-1)^{n+1} exponent_vector(c_0), so {c_0, d_n}
/// cannot be part of a basis of the abelianization.
VerificationReport verify_not_decomposable(const GnConstruction& g);

/// Identity on h_part; x -> c^n x c^-n on k_part; t -> c^n t on hnn_letters.
Automorphism dehn_twist_family(const AlphabetPtr& alphabet, std::span<const std::size_t> h_part,
                               std::span<const std::size_t> k_part, std::span<const std::size_t> hnn_letters,
                               const Word& c, long long n);

using AutomorphismFamily = std::function<Automorphism(long long)>;

/// f_p(g), f_q(g) pairwise non-conjugate with distinct centralizers for 0 <= p < q <= max_index.
VerificationReport orbit_distinct_check(const AutomorphismFamily& family, const Word& g, long long max_index);

/// The two Dehn-twist instances (amalgam and HNN) checked with max_index 10.
std::vector<VerificationReport> documented_orbit_checks();

/// No nontrivial product of at most max_len basis letters of part1 is
/// conjugate to one of part2.
VerificationReport cross_conjugacy_scan(std::span<const Word> part1, std::span<const Word> part2, int max_len,
                                        std::size_t element_cap = 100'000);

}  // namespace fg
