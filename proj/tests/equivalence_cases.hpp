#pragma once

// Randomised reflexivity / symmetry / transitivity checks for E0..E3, shared
// by the unit tests and the acceptance suite. Related tuples are produced by
// construction: common roots for the centralizer condition, explicit
// multipliers for the coset condition.

#include <random>

#include "freegroup/imaginaries.hpp"
#include "oracles.hpp"

namespace equivalence {

struct Outcome {
  int instances = 0;
  int violations = 0;
};

namespace detail {

inline fg::AlphabetPtr rank3() { return fg::Alphabet::parse("a,b,c"); }

inline fg::Word random_word(std::mt19937_64& rng, int min_len, int max_len) {
  return oracle::word(rank3(), oracle::random_word_up_to(rng, 3, min_len, max_len));
}

inline fg::Word random_root(std::mt19937_64& rng) { return fg::root(random_word(rng, 1, 6)).base; }

inline int nonzero(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(1, bound), sign(0, 1);
  return sign(rng) ? d(rng) : -d(rng);
}

inline int any(std::mt19937_64& rng, int bound) { return std::uniform_int_distribution<int>(-bound, bound)(rng); }

template <class Rel, class Tuple>
void check_laws(Outcome& out, const Rel& rel, const Tuple& x, const Tuple& y, const Tuple& z, const Tuple& other) {
  ++out.instances;
  bool ok = rel(x, x) && rel(y, y);
  ok = ok && rel(x, y) && rel(y, x) && rel(y, z) && rel(x, z) && rel(z, x);
  ok = ok && rel(x, other) == rel(other, x);
  if (rel(x, other) && rel(other, z)) ok = ok && rel(x, z);
  if (!ok) ++out.violations;
}

}  // namespace detail

inline Outcome check_e0(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  auto rel = [](const fg::Word& a, const fg::Word& b) { return fg::e0(a, b); };
  while (out.instances < count) {
    fg::Word x = detail::random_word(rng, 0, 6);
    fg::Word y = fg::conjugate(x, detail::random_word(rng, 0, 6));
    fg::Word z = fg::conjugate(y, detail::random_word(rng, 0, 6));
    detail::check_laws(out, rel, x, y, z, detail::random_word(rng, 0, 6));
  }
  return out;
}

struct Pair {
  fg::Word x, y;
};

template <bool Left>
Outcome check_coset(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  while (out.instances < count) {
    const long long m = std::uniform_int_distribution<int>(1, 3)(rng);
    auto rel = [m](const Pair& a, const Pair& b) {
      return Left ? fg::e2(m, a.x, a.y, b.x, b.y) : fg::e1(m, a.x, a.y, b.x, b.y);
    };
    const fg::Word r = detail::random_root(rng);
    auto shift = [&](const fg::Word& y) {
      const fg::Word t = fg::power(r, m * detail::any(rng, 2));
      return Left ? t * y : y * t;
    };
    Pair x{fg::power(r, detail::nonzero(rng, 3)), detail::random_word(rng, 0, 6)};
    Pair y{fg::power(r, detail::nonzero(rng, 3)), shift(x.y)};
    Pair z{fg::power(r, detail::nonzero(rng, 3)), shift(y.y)};
    Pair other{detail::random_word(rng, 1, 6), detail::random_word(rng, 0, 6)};
    if (detail::any(rng, 1) == 0) other.x = fg::power(r, detail::nonzero(rng, 2));
    detail::check_laws(out, rel, x, y, z, other);
  }
  return out;
}

inline Outcome check_e1(int count, unsigned seed) { return check_coset<false>(count, seed); }
inline Outcome check_e2(int count, unsigned seed) { return check_coset<true>(count, seed); }

struct Triple {
  fg::Word x, y, z;
};

inline Outcome check_e3(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  while (out.instances < count) {
    const long long p = std::uniform_int_distribution<int>(1, 3)(rng);
    const long long q = std::uniform_int_distribution<int>(1, 3)(rng);
    auto rel = [p, q](const Triple& a, const Triple& b) { return fg::e3(p, q, a.x, a.y, a.z, b.x, b.y, b.z); };
    const fg::Word rx = detail::random_root(rng), ry = detail::random_root(rng);
    auto move = [&](const fg::Word& z) {
      return fg::power(rx, p * detail::any(rng, 2)) * z * fg::power(ry, q * detail::any(rng, 2));
    };
    auto fresh_x = [&] { return fg::power(rx, detail::nonzero(rng, 3)); };
    auto fresh_y = [&] { return fg::power(ry, detail::nonzero(rng, 3)); };
    Triple x{fresh_x(), fresh_y(), detail::random_word(rng, 0, 6)};
    Triple y{fresh_x(), fresh_y(), move(x.z)};
    Triple z{fresh_x(), fresh_y(), move(y.z)};
    Triple other{fresh_x(), fresh_y(), detail::random_word(rng, 0, 6)};
    if (detail::any(rng, 1) == 0) other.z = move(x.z) * detail::random_word(rng, 0, 2);
    detail::check_laws(out, rel, x, y, z, other);
  }
  return out;
}

}  // namespace equivalence
