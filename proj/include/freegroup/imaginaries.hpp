#pragma once

#include <cstddef>
#include <vector>

#include "freegroup/word.hpp"

namespace fg {

/// Finite automaton over signed letters recognising the rational set
/// <u> z_mid <v>: a u-cycle and a u^-1-cycle at the initial state, a path
/// spelling z_mid, and v / v^-1 cycles at the accepting state. Saturation
/// adds an epsilon edge p -> q whenever some path p -> q spells a word that
/// freely reduces to the identity, so a reduced word is accepted iff it is
/// the reduced form of some word in the language.
class CosetAutomaton {
 public:
  struct Transition {
    std::size_t from;
    Letter label;
    std::size_t to;
  };

  static CosetAutomaton build(const Word& u, const Word& z_mid, const Word& v);

  std::size_t state_count() const { return state_count_; }
  std::size_t initial() const { return 0; }
  std::size_t accepting() const { return accepting_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  /// closure()[p][q]: q is reachable from p through epsilon edges only.
  const std::vector<std::vector<bool>>& closure() const { return closure_; }

  bool accepts(const Word& reduced) const;

 private:
  void add_cycle(std::size_t at, const Word& w);
  void add_path(std::size_t from, std::size_t to, const Word& w);
  void saturate();

  AlphabetPtr alphabet_;
  std::size_t state_count_ = 1;
  std::size_t accepting_ = 0;
  bool seed_epsilon_ = false;  // empty z_mid: epsilon edge initial -> accepting
  std::vector<Transition> transitions_;
  std::vector<std::vector<bool>> closure_;
};

/// E_0: x and y are conjugate.
bool e0(const Word& x, const Word& y);
/// E_{1,m}: C(x) = C(x2) and y^-1 y2 = root(x)^j with m | j.
bool e1(long long m, const Word& x, const Word& y, const Word& x2, const Word& y2);
/// E_{2,m}: C(x) = C(x2) and y2 y^-1 = root(x)^j with m | j.
bool e2(long long m, const Word& x, const Word& y, const Word& x2, const Word& y2);
/// z in <u> z_mid <v>.
bool double_coset_member(const Word& u, const Word& z_mid, const Word& v, const Word& z);
/// E_{3,p,q}: C(x) = C(x2), C(y) = C(y2) and z in <root(x)^p> z2 <root(y)^q>.
bool e3(long long p, long long q, const Word& x, const Word& y, const Word& z, const Word& x2, const Word& y2,
        const Word& z2);

}  // namespace fg
