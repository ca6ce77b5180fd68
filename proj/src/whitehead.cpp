#include "freegroup/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

namespace fg {
namespace {

// Type II move in compact form. action[g] bit 0: left-multiply by m,
// bit 1: right-multiply by m^-1. action[m.generator] is unused.
struct MultiplierMove {
  Letter multiplier;
  std::vector<std::uint8_t> action;

  void apply(std::span<const Letter> in, std::vector<Letter>& out) const {
    out.clear();
    auto put = [&out](Letter l) {
      if (!out.empty() && out.back().cancels(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    };
    const Letter m = multiplier;
    for (Letter x : in) {
      if (x.generator == m.generator) {
        put(x);
        continue;
      }
      const std::uint8_t a = action[x.generator];
      const bool left = x.sign > 0 ? (a & 1) : (a & 2);
      const bool right = x.sign > 0 ? (a & 2) : (a & 1);
      if (left) put(m);
      put(x);
      if (right) put(m.inverse());
    }
  }

  Automorphism to_automorphism(const AlphabetPtr& alphabet) const {
    MultiplierMove inv{multiplier.inverse(), action};
    std::vector<Word> images, inverse_images;
    std::vector<Letter> buffer;
    for (std::size_t g = 0; g < alphabet->rank(); ++g) {
      Letter x{static_cast<std::uint32_t>(g), 1};
      apply(std::span<const Letter>(&x, 1), buffer);
      images.emplace_back(alphabet, buffer);
      inv.apply(std::span<const Letter>(&x, 1), buffer);
      inverse_images.emplace_back(alphabet, buffer);
    }
    return Automorphism(alphabet, std::move(images), std::move(inverse_images));
  }
};

// Calls visit(move) for every nontrivial type II move; stops early when visit returns true.
template <typename Visit>
bool for_each_multiplier_move(std::size_t rank, Visit&& visit) {
  if (rank < 2) return false;
  if (rank > 16) throw BudgetExhausted("rank too large for exhaustive Whitehead moves");
  const std::uint64_t combos = std::uint64_t{1} << (2 * (rank - 1));
  MultiplierMove move{{}, std::vector<std::uint8_t>(rank, 0)};
  for (std::size_t slot = 0; slot < 2 * rank; ++slot) {
    move.multiplier = Letter::from_slot(slot);
    for (std::uint64_t code = 1; code < combos; ++code) {
      std::uint64_t rest = code;
      for (std::size_t g = 0; g < rank; ++g) {
        if (g == move.multiplier.generator) {
          move.action[g] = 0;
          continue;
        }
        move.action[g] = static_cast<std::uint8_t>(rest & 3);
        rest >>= 2;
      }
      if (visit(static_cast<const MultiplierMove&>(move))) return true;
    }
  }
  return false;
}

std::vector<Word> canonical_tuple(std::span<const Word> tuple) {
  std::vector<Word> out;
  out.reserve(tuple.size());
  for (const Word& w : tuple) out.push_back(cyclic_normal_form(w).canonical);
  return out;
}

std::size_t cyclic_length_of(std::span<const Letter> w) {
  std::size_t p = 0;
  while (2 * p + 1 < w.size() && w[p].cancels(w[w.size() - 1 - p])) ++p;
  return w.size() - 2 * p;
}

// Applies the move to every entry; returns the new total cyclic length and,
// when requested, the transformed tuple in canonical form.
std::size_t apply_move(const MultiplierMove& move, std::span<const Word> tuple, std::vector<Word>* out,
                       std::size_t stop_above) {
  std::vector<Letter> buffer;
  std::size_t total = 0;
  if (out) out->clear();
  for (const Word& w : tuple) {
    move.apply(w.letters(), buffer);
    total += cyclic_length_of(buffer);
    if (!out && total > stop_above) return total;
    if (out) out->push_back(cyclic_normal_form(Word(w.alphabet(), buffer)).canonical);
  }
  return total;
}

void require_tuple(std::span<const Word> tuple) {
  if (tuple.empty()) throw DegenerateInput("empty tuple");
  for (const Word& w : tuple) require_same_alphabet(tuple.front().alphabet(), w.alphabet());
}

}  // namespace

Automorphism::Automorphism(AlphabetPtr alphabet, std::vector<Word> images, std::vector<Word> inverse_images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  const std::size_t r = alphabet_->rank();
  if (images_.size() != r || inverse_images_.size() != r) throw PreconditionError("automorphism needs one image per generator");
  for (const Word& w : images_) require_same_alphabet(alphabet_, w.alphabet());
  for (const Word& w : inverse_images_) require_same_alphabet(alphabet_, w.alphabet());
  for (std::size_t g = 0; g < r; ++g) {
    Word x = Word::generator(alphabet_, g);
    Word there(alphabet_), back_again(alphabet_);
    for (Letter l : images_[g].letters()) {
      const Word& piece = inverse_images_[l.generator];
      there = there * (l.sign > 0 ? piece : invert(piece));
    }
    for (Letter l : inverse_images_[g].letters()) {
      const Word& piece = images_[l.generator];
      back_again = back_again * (l.sign > 0 ? piece : invert(piece));
    }
    if (there != x || back_again != x) throw PreconditionError("recorded inverse does not invert the automorphism");
  }
}

Automorphism Automorphism::identity(const AlphabetPtr& alphabet) {
  std::vector<Word> gens;
  for (std::size_t g = 0; g < alphabet->rank(); ++g) gens.push_back(Word::generator(alphabet, g));
  return Automorphism(alphabet, gens, gens);
}

Automorphism Automorphism::inverse() const { return Automorphism(alphabet_, inverse_images_, images_); }

Word Automorphism::operator()(const Word& w) const {
  require_same_alphabet(alphabet_, w.alphabet());
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& piece = images_[l.generator];
    if (l.sign > 0) {
      out.insert(out.end(), piece.letters().begin(), piece.letters().end());
    } else {
      for (auto it = piece.letters().rbegin(); it != piece.letters().rend(); ++it) out.push_back(it->inverse());
    }
  }
  return Word(alphabet_, out);
}

bool Automorphism::is_identity() const {
  for (std::size_t g = 0; g < images_.size(); ++g)
    if (images_[g] != Word::generator(alphabet_, g)) return false;
  return true;
}

Word apply_automorphism(const Automorphism& f, const Word& w) { return f(w); }

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  require_same_alphabet(outer.alphabet(), inner.alphabet());
  std::vector<Word> images, inverse_images;
  for (std::size_t g = 0; g < outer.alphabet()->rank(); ++g) {
    images.push_back(outer(inner.image(g)));
    inverse_images.push_back(inner.inverse()(outer.inverse_image(g)));
  }
  return Automorphism(outer.alphabet(), std::move(images), std::move(inverse_images));
}

std::vector<Automorphism> type_one_automorphisms(const AlphabetPtr& alphabet) {
  const std::size_t r = alphabet->rank();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Automorphism> result;
  do {
    for (std::size_t signs = 0; signs < (std::size_t{1} << r); ++signs) {
      std::vector<Word> images(r, Word(alphabet)), inverse_images(r, Word(alphabet));
      for (std::size_t g = 0; g < r; ++g) {
        const int e = (signs >> g) & 1 ? -1 : 1;
        images[g] = Word::generator(alphabet, perm[g], e);
        inverse_images[perm[g]] = Word::generator(alphabet, g, e);
      }
      result.emplace_back(alphabet, std::move(images), std::move(inverse_images));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

std::vector<Automorphism> type_two_automorphisms(const AlphabetPtr& alphabet) {
  std::vector<Automorphism> result;
  for_each_multiplier_move(alphabet->rank(), [&](const MultiplierMove& move) {
    result.push_back(move.to_automorphism(alphabet));
    return false;
  });
  return result;
}

std::vector<Automorphism> whitehead_generators(const AlphabetPtr& alphabet) {
  auto result = type_one_automorphisms(alphabet);
  auto two = type_two_automorphisms(alphabet);
  result.insert(result.end(), std::make_move_iterator(two.begin()), std::make_move_iterator(two.end()));
  return result;
}

std::size_t total_cyclic_length(std::span<const Word> tuple) {
  std::size_t total = 0;
  for (const Word& w : tuple) total += cyclic_length(w);
  return total;
}

MinimizedTuple minimize_tuple(std::span<const Word> tuple) {
  require_tuple(tuple);
  const AlphabetPtr& alphabet = tuple.front().alphabet();
  MinimizedTuple result{canonical_tuple(tuple), {}};
  std::size_t current = total_cyclic_length(result.tuple);
  for (;;) {
    std::optional<MultiplierMove> found;
    for_each_multiplier_move(alphabet->rank(), [&](const MultiplierMove& move) {
      if (apply_move(move, result.tuple, nullptr, current - 1) < current) {
        found = move;
        return true;
      }
      return false;
    });
    if (!found) break;
    std::vector<Word> next;
    current = apply_move(*found, result.tuple, &next, current);
    result.tuple = std::move(next);
    result.steps.push_back(found->to_automorphism(alphabet));
  }
  return result;
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw DegenerateInput("the identity is not primitive");
  const Word tuple[] = {w};
  return total_cyclic_length(minimize_tuple(tuple).tuple) == 1;
}

bool extends_to_basis(std::span<const Word> tuple, SearchBudget budget) {
  require_tuple(tuple);
  for (const Word& w : tuple)
    if (w.empty()) throw DegenerateInput("tuple entry is the identity");
  const AlphabetPtr& alphabet = tuple.front().alphabet();
  if (tuple.size() > alphabet->rank()) return false;

  auto is_goal = [](const std::vector<Word>& t) {
    std::vector<bool> used(t.front().alphabet()->rank(), false);
    for (const Word& w : t) {
      if (w.size() != 1 || used[w[0].generator]) return false;
      used[w[0].generator] = true;
    }
    return true;
  };

  std::vector<Word> start = minimize_tuple(tuple).tuple;
  // Moves within the minimal level keep the total fixed, and a goal tuple has total |t|.
  while (total_cyclic_length(start) == tuple.size()) {
    const std::size_t level = tuple.size();
    std::set<std::vector<Word>> visited{start};
    std::deque<std::vector<Word>> queue{start};
    std::optional<std::vector<Word>> lower;
    bool reached = false;
    while (!queue.empty() && !reached && !lower) {
      std::vector<Word> current = std::move(queue.front());
      queue.pop_front();
      if (is_goal(current)) {
        reached = true;
        break;
      }
      for_each_multiplier_move(alphabet->rank(), [&](const MultiplierMove& move) {
        std::vector<Word> next;
        std::size_t total = apply_move(move, current, &next, level);
        if (total < level) {
          lower = std::move(next);
          return true;
        }
        if (total == level && visited.insert(next).second) {
          if (visited.size() > budget.max_nodes) throw BudgetExhausted("minimal-level search exceeded node budget");
          queue.push_back(std::move(next));
        }
        return false;
      });
    }
    if (reached) return true;
    if (!lower) return false;
    start = minimize_tuple(*lower).tuple;
  }
  return false;
}

}  // namespace fg
