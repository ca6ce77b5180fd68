#include "freegroup/imaginaries.hpp"

#include <algorithm>

namespace fg {
namespace {

void require_nontrivial(const Word& w, const char* what) {
  if (w.empty()) throw DegenerateInput(std::string(what) + " must be nontrivial");
}

void require_positive(long long m, const char* what) {
  if (m <= 0) throw PreconditionError(std::string(what) + " must be positive");
}

// delta = root^j for some j divisible by m (j = 0 allowed).
bool is_power_multiple(const Word& delta, const Word& root_base, long long m) {
  if (delta.empty()) return true;
  const Root r = root(delta);
  long long j = 0;
  if (r.base == root_base) {
    j = r.exponent;
  } else if (r.base == invert(root_base)) {
    j = -r.exponent;
  } else {
    return false;
  }
  return j % m == 0;
}

}  // namespace

CosetAutomaton CosetAutomaton::build(const Word& u, const Word& z_mid, const Word& v) {
  require_same_alphabet(u.alphabet(), z_mid.alphabet());
  require_same_alphabet(u.alphabet(), v.alphabet());
  require_nontrivial(u, "u");
  require_nontrivial(v, "v");

  CosetAutomaton a;
  a.alphabet_ = u.alphabet();
  a.add_cycle(0, u);
  a.add_cycle(0, invert(u));
  // The accepting state is always distinct from the initial one; otherwise the
  // u- and v-cycles would interleave and recognise <u, v> instead.
  a.accepting_ = a.state_count_++;
  if (z_mid.empty()) {
    a.seed_epsilon_ = true;
  } else {
    a.add_path(0, a.accepting_, z_mid);
  }
  a.add_cycle(a.accepting_, v);
  a.add_cycle(a.accepting_, invert(v));
  a.saturate();
  return a;
}

void CosetAutomaton::add_path(std::size_t from, std::size_t to, const Word& w) {
  std::size_t current = from;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t next = i + 1 == w.size() ? to : state_count_++;
    transitions_.push_back({current, w[i], next});
    current = next;
  }
}

void CosetAutomaton::add_cycle(std::size_t at, const Word& w) { add_path(at, at, w); }

void CosetAutomaton::saturate() {
  const std::size_t n = state_count_;
  closure_.assign(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p) closure_[p][p] = true;
  if (seed_epsilon_) closure_[0][accepting_] = true;

  // Epsilon edges are added until no path p -x-> r ~> r' -x^-1-> q yields a new pair.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Transition& in : transitions_) {
      for (const Transition& out : transitions_) {
        if (!in.label.cancels(out.label) || !closure_[in.to][out.from]) continue;
        const std::size_t p = in.from, q = out.to;
        if (closure_[p][q]) continue;
        // Add p -> q and close transitively.
        for (std::size_t x = 0; x < n; ++x) {
          if (!closure_[x][p]) continue;
          for (std::size_t y = 0; y < n; ++y)
            if (closure_[q][y]) closure_[x][y] = true;
        }
        changed = true;
      }
    }
  }
}

bool CosetAutomaton::accepts(const Word& reduced) const {
  require_same_alphabet(alphabet_, reduced.alphabet());
  const std::size_t n = state_count_;
  std::vector<bool> current = closure_[0];
  for (Letter l : reduced.letters()) {
    std::vector<bool> stepped(n, false);
    for (const Transition& t : transitions_)
      if (t.label == l && current[t.from]) stepped[t.to] = true;
    std::vector<bool> next(n, false);
    bool any = false;
    for (std::size_t s = 0; s < n; ++s) {
      if (!stepped[s]) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (closure_[s][y]) next[y] = true;
      any = true;
    }
    if (!any) return false;
    current = std::move(next);
  }
  return current[accepting_];
}

bool e0(const Word& x, const Word& y) { return is_conjugate(x, y); }

bool e1(long long m, const Word& x, const Word& y, const Word& x2, const Word& y2) {
  require_positive(m, "m");
  require_nontrivial(x, "x");
  require_nontrivial(x2, "x'");
  if (!centralizer_equal(x, x2)) return false;
  return is_power_multiple(invert(y) * y2, root(x).base, m);
}

bool e2(long long m, const Word& x, const Word& y, const Word& x2, const Word& y2) {
  require_positive(m, "m");
  require_nontrivial(x, "x");
  require_nontrivial(x2, "x'");
  if (!centralizer_equal(x, x2)) return false;
  return is_power_multiple(y2 * invert(y), root(x).base, m);
}

bool double_coset_member(const Word& u, const Word& z_mid, const Word& v, const Word& z) {
  return CosetAutomaton::build(u, z_mid, v).accepts(z);
}

bool e3(long long p, long long q, const Word& x, const Word& y, const Word& z, const Word& x2, const Word& y2,
        const Word& z2) {
  require_positive(p, "p");
  require_positive(q, "q");
  for (const Word* w : {&x, &y, &x2, &y2}) require_nontrivial(*w, "centralizer argument");
  if (!centralizer_equal(x, x2) || !centralizer_equal(y, y2)) return false;
  return double_coset_member(power(root(x).base, p), z2, power(root(y).base, q), z);
}

}  // namespace fg
