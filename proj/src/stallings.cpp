#include "freegroup/stallings.hpp"

#include <deque>
#include <numeric>
#include <sstream>
#include <utility>

namespace fg {
namespace {

// Mutable graph used while folding. Vertices are identified through a
// union-find; adjacency entries may point at stale ids and are resolved
// through find() on read.
class FoldingGraph {
 public:
  explicit FoldingGraph(std::size_t rank) : slots_(2 * rank) { new_vertex(); }

  int new_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    next_.resize(next_.size() + slots_, -1);
    return parent_.back();
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  int& at(int v, std::size_t slot) { return next_[static_cast<std::size_t>(v) * slots_ + slot]; }

  void add_edge(int from, Letter label, int to) {
    set_or_identify(find(from), label.slot(), find(to));
    set_or_identify(find(to), label.inverse().slot(), find(from));
  }

  void identify(int a, int b) {
    pending_.emplace_back(a, b);
    while (!pending_.empty()) {
      auto [x, y] = pending_.back();
      pending_.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      parent_[y] = x;
      for (std::size_t s = 0; s < slots_; ++s) {
        int t = at(y, s);
        if (t < 0) continue;
        int& mine = at(x, s);
        if (mine < 0) {
          mine = t;
        } else {
          pending_.emplace_back(mine, t);
        }
      }
    }
  }

  std::size_t vertex_ids() const { return parent_.size(); }
  std::size_t slots() const { return slots_; }

 private:
  void set_or_identify(int from, std::size_t slot, int to) {
    int& existing = at(from, slot);
    if (existing < 0) {
      existing = to;
    } else {
      identify(existing, to);
    }
  }

  std::size_t slots_;
  std::vector<int> parent_;
  std::vector<int> next_;
  std::vector<std::pair<int, int>> pending_;
};

}  // namespace

std::size_t SubgroupGraph::edge_count() const {
  const std::size_t slots = 2 * alphabet_->rank();
  std::size_t count = 0;
  for (std::size_t v = 0; v < vertex_count_; ++v)
    for (std::size_t s = 0; s < slots; s += 2)
      if (next_[v * slots + s] >= 0) ++count;
  return count;
}

std::optional<std::size_t> SubgroupGraph::target(std::size_t vertex, Letter letter) const {
  int t = next_[vertex * 2 * alphabet_->rank() + letter.slot()];
  if (t < 0) return std::nullopt;
  return static_cast<std::size_t>(t);
}

std::size_t SubgroupGraph::degree(std::size_t vertex) const {
  const std::size_t slots = 2 * alphabet_->rank();
  std::size_t d = 0;
  for (std::size_t s = 0; s < slots; ++s)
    if (next_[vertex * slots + s] >= 0) ++d;
  return d;
}

std::optional<std::size_t> SubgroupGraph::read(const Word& w) const {
  require_same_alphabet(alphabet_, w.alphabet());
  std::size_t v = 0;
  for (Letter l : w.letters()) {
    auto t = target(v, l);
    if (!t) return std::nullopt;
    v = *t;
  }
  return v;
}

std::string SubgroupGraph::debug_string() const {
  std::ostringstream out;
  out << "vertices " << vertex_count_ << '\n';
  for (std::size_t v = 0; v < vertex_count_; ++v)
    for (std::size_t g = 0; g < alphabet_->rank(); ++g)
      if (auto t = target(v, Letter{static_cast<std::uint32_t>(g), 1}))
        out << v << ' ' << alphabet_->name(g) << ' ' << *t << '\n';
  return out.str();
}

SubgroupGraph fold_subgroup(const AlphabetPtr& alphabet, std::span<const Word> gens) {
  FoldingGraph graph(alphabet->rank());
  for (const Word& w : gens) {
    require_same_alphabet(alphabet, w.alphabet());
    if (w.empty()) continue;
    int current = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Letter l = w[i];
      int from = graph.find(current);
      int existing = graph.at(from, l.slot());
      if (i + 1 == w.size()) {
        graph.add_edge(from, l, 0);
      } else if (existing >= 0) {
        current = graph.find(existing);
      } else {
        int fresh = graph.new_vertex();
        graph.add_edge(from, l, fresh);
        current = fresh;
      }
    }
  }

  // Resolve representatives and adjacency.
  const std::size_t slots = graph.slots();
  const std::size_t ids = graph.vertex_ids();
  std::vector<std::vector<int>> adj(ids);
  std::vector<bool> alive(ids, false);
  for (std::size_t v = 0; v < ids; ++v) {
    int rep = graph.find(static_cast<int>(v));
    if (rep != static_cast<int>(v)) continue;
    alive[v] = true;
    adj[v].resize(slots, -1);
    for (std::size_t s = 0; s < slots; ++s) {
      int t = graph.at(rep, s);
      if (t >= 0) adj[v][s] = graph.find(t);
    }
  }

  // Trim hanging trees away from the base.
  auto degree = [&](std::size_t v) {
    std::size_t d = 0;
    for (int t : adj[v]) d += t >= 0;
    return d;
  };
  std::vector<std::size_t> stack;
  for (std::size_t v = 1; v < ids; ++v)
    if (alive[v] && degree(v) <= 1) stack.push_back(v);
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (!alive[v] || degree(v) > 1) continue;
    alive[v] = false;
    for (std::size_t s = 0; s < slots; ++s) {
      int t = adj[v][s];
      if (t < 0) continue;
      adj[v][s] = -1;
      adj[static_cast<std::size_t>(t)][Letter::from_slot(s).inverse().slot()] = -1;
      if (t != 0 && degree(static_cast<std::size_t>(t)) <= 1) stack.push_back(static_cast<std::size_t>(t));
    }
  }

  // Renumber in BFS order from the base so output is reproducible.
  std::vector<int> order(ids, -1);
  std::vector<std::size_t> queue{0};
  order[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int t : adj[queue[head]]) {
      if (t >= 0 && order[static_cast<std::size_t>(t)] < 0) {
        order[static_cast<std::size_t>(t)] = static_cast<int>(queue.size());
        queue.push_back(static_cast<std::size_t>(t));
      }
    }
  }

  SubgroupGraph result;
  result.alphabet_ = alphabet;
  result.generators_.assign(gens.begin(), gens.end());
  result.vertex_count_ = queue.size();
  result.next_.assign(queue.size() * slots, -1);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t s = 0; s < slots; ++s)
      if (int t = adj[queue[i]][s]; t >= 0) result.next_[i * slots + s] = order[static_cast<std::size_t>(t)];
  return result;
}

bool contains(const SubgroupGraph& graph, const Word& w) {
  auto end = graph.read(w);
  return end && *end == 0;
}

std::size_t rank(const SubgroupGraph& graph) { return graph.edge_count() + 1 - graph.vertex_count(); }

std::vector<Word> basis_of(const SubgroupGraph& graph) {
  const AlphabetPtr& alphabet = graph.alphabet();
  const std::size_t n = graph.vertex_count();
  // Tree path from the base to each vertex, and the tree edge (vertex, slot) used.
  std::vector<std::optional<Word>> path(n);
  std::vector<std::vector<bool>> tree_edge(n, std::vector<bool>(2 * alphabet->rank(), false));
  path[0] = Word(alphabet);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < 2 * alphabet->rank(); ++s) {
      Letter l = Letter::from_slot(s);
      auto t = graph.target(v, l);
      if (!t || path[*t]) continue;
      Word next = *path[v];
      next.push_back(l);
      path[*t] = std::move(next);
      tree_edge[v][s] = true;
      tree_edge[*t][l.inverse().slot()] = true;
      queue.push_back(*t);
    }
  }

  std::vector<Word> basis;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t g = 0; g < alphabet->rank(); ++g) {
      Letter l{static_cast<std::uint32_t>(g), 1};
      auto t = graph.target(v, l);
      if (!t || tree_edge[v][l.slot()]) continue;
      Word w = *path[v];
      w.push_back(l);
      basis.push_back(w * invert(*path[*t]));
    }
  }
  return basis;
}

bool is_basis_of_ambient(const AlphabetPtr& alphabet, std::span<const Word> gens) {
  for (const Word& w : gens) require_same_alphabet(alphabet, w.alphabet());
  if (gens.size() != alphabet->rank()) return false;
  SubgroupGraph graph = fold_subgroup(alphabet, gens);
  for (std::size_t g = 0; g < alphabet->rank(); ++g)
    if (!contains(graph, Word::generator(alphabet, g))) return false;
  return true;
}

bool membership_in_free_product_part(std::span<const std::vector<Word>> part_bases, const Word& w) {
  std::vector<Word> all;
  for (const auto& part : part_bases) all.insert(all.end(), part.begin(), part.end());
  return contains(fold_subgroup(w.alphabet(), all), w);
}

}  // namespace fg
