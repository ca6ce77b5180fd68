#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freegroup/error.hpp"

namespace fg {

/// Ordered list of distinct generator names. Words hold a shared pointer to
/// their alphabet; two alphabets are interchangeable when their names agree.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names);
  /// Comma-separated list, e.g. "a,b,c". Whitespace around names is ignored.
  static std::shared_ptr<const Alphabet> parse(std::string_view csv);

  std::size_t rank() const { return names_.size(); }
  const std::string& name(std::size_t generator) const { return names_.at(generator); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Alphabet made of the first `count` generators.
  std::shared_ptr<const Alphabet> prefix(std::size_t count) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& lhs, const AlphabetPtr& rhs);
void require_same_alphabet(const AlphabetPtr& lhs, const AlphabetPtr& rhs);

/// A generator or its inverse. Letters order by generator index, and the
/// positive letter precedes the negative one.
struct Letter {
  std::uint32_t generator = 0;
  std::int8_t sign = 1;

  constexpr Letter inverse() const { return {generator, static_cast<std::int8_t>(-sign)}; }
  constexpr bool cancels(Letter other) const { return generator == other.generator && sign == -other.sign; }
  /// Dense index in [0, 2*rank): 2g for g, 2g+1 for g^-1.
  constexpr std::size_t slot() const { return 2 * std::size_t{generator} + (sign < 0 ? 1 : 0); }
  static constexpr Letter from_slot(std::size_t slot) {
    return {static_cast<std::uint32_t>(slot / 2), static_cast<std::int8_t>(slot % 2 == 0 ? 1 : -1)};
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter lhs, Letter rhs) { return lhs.slot() <=> rhs.slot(); }
};

/// Freely reduced word. Every constructor reduces, so a Word is always in
/// normal form and equality of Words is equality of group elements.
class Word {
 public:
  /// The identity element over `alphabet`.
  explicit Word(AlphabetPtr alphabet);
  /// Reduces `letters`; throws AlphabetMismatch on an out-of-range generator.
  Word(AlphabetPtr alphabet, std::span<const Letter> letters);

  static Word generator(AlphabetPtr alphabet, std::size_t index, int exponent = 1);
  static Word generator(AlphabetPtr alphabet, std::string_view name, int exponent = 1);
  /// Parses whitespace-separated tokens `gen` / `gen^k`; the token `1` is the identity.
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Text form with runs collapsed to powers, e.g. "a0^2 b0^-1"; the identity prints as "1".
  std::string str() const;

  /// Appends one letter, cancelling against the last letter when possible.
  void push_back(Letter letter);

  friend bool operator==(const Word& lhs, const Word& rhs);
  /// Lexicographic order on letters; only meaningful within one alphabet.
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

 private:
  struct Trusted {};
  Word(AlphabetPtr alphabet, std::vector<Letter> reduced, Trusted);

  friend Word invert(const Word& w);
  friend Word multiply(const Word& u, const Word& v);

  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word reduce(std::span<const Letter> raw, const AlphabetPtr& alphabet);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
/// x^g := g^-1 x g.
Word conjugate(const Word& x, const Word& g);
/// [x,y] := x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);
Word power(const Word& w, long long exponent);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

/// Length of the cyclically reduced core of w.
std::size_t cyclic_length(const Word& w);

/// Canonical conjugacy representative: the least rotation of the cyclically
/// reduced core. conjugate(original, conjugator) == canonical.
struct CyclicWord {
  Word canonical;
  Word conjugator;
};

CyclicWord cyclic_normal_form(const Word& w);
bool is_conjugate(const Word& u, const Word& v);

/// w = base^exponent with base not a proper power.
struct Root {
  Word base;
  long long exponent;
};

Root root(const Word& w);
/// True iff C(x) = C(y), i.e. the roots agree up to inversion.
bool centralizer_equal(const Word& x, const Word& y);

/// Re-expresses w over `target`, whose names must contain every letter of w.
Word translate(const Word& w, const AlphabetPtr& target);

}  // namespace fg
