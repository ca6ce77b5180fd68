#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "freegroup/word.hpp"

namespace fg {

/// Automorphism of a free group given by generator images, carrying its
/// inverse. Construction checks that the two maps compose to the identity.
class Automorphism {
 public:
  Automorphism(AlphabetPtr alphabet, std::vector<Word> images, std::vector<Word> inverse_images);

  static Automorphism identity(const AlphabetPtr& alphabet);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Word& image(std::size_t generator) const { return images_.at(generator); }
  const Word& inverse_image(std::size_t generator) const { return inverse_images_.at(generator); }
  const std::vector<Word>& images() const { return images_; }

  Automorphism inverse() const;
  Word operator()(const Word& w) const;

  bool is_identity() const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

Word apply_automorphism(const Automorphism& f, const Word& w);
/// x |-> outer(inner(x)).
Automorphism compose(const Automorphism& outer, const Automorphism& inner);

/// Signed permutations of the basis, identity included.
std::vector<Automorphism> type_one_automorphisms(const AlphabetPtr& alphabet);
/// Multiplier moves: a letter m is fixed and every other generator x goes to
/// one of x, m x, x m^-1, m x m^-1. The identity is left out.
std::vector<Automorphism> type_two_automorphisms(const AlphabetPtr& alphabet);
/// Type I followed by type II.
std::vector<Automorphism> whitehead_generators(const AlphabetPtr& alphabet);

/// Caps the number of tuples visited by the minimal-level search.
struct SearchBudget {
  std::size_t max_nodes = 1'000'000;
};

struct MinimizedTuple {
  /// Entries as canonical conjugacy representatives.
  std::vector<Word> tuple;
  /// Moves applied in order; tuple[i] is conjugate to steps[k-1](...steps[0](t[i])).
  std::vector<Automorphism> steps;
};

/// Sum of cyclic lengths of the entries.
std::size_t total_cyclic_length(std::span<const Word> tuple);

/// Greedy Whitehead descent on the total cyclic length, applying the same
/// move to every entry.
MinimizedTuple minimize_tuple(std::span<const Word> tuple);

bool is_primitive(const Word& w);

/// True iff some automorphism sends the entries to conjugates of pairwise
/// distinct basis letters (up to inversion). For a single word this is
/// primitivity; for longer tuples the entries are treated as conjugacy
/// classes, so this is the necessary Whitehead condition for extending to a basis.
bool extends_to_basis(std::span<const Word> tuple, SearchBudget budget = {});

}  // namespace fg
