#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freegroup/word.hpp"

namespace fg {

/// Folded core graph of a finitely generated subgroup. Vertex 0 is the base.
/// Edges are stored in both directions: an x-edge u -> v is also an
/// x^-1-edge v -> u.
class SubgroupGraph {
 public:
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Word>& generators() const { return generators_; }

  std::size_t vertex_count() const { return vertex_count_; }
  /// Positively labelled edges.
  std::size_t edge_count() const;
  std::optional<std::size_t> target(std::size_t vertex, Letter letter) const;
  std::size_t degree(std::size_t vertex) const;

  /// Vertex reached from the base by reading w, if the path exists.
  std::optional<std::size_t> read(const Word& w) const;

  /// Debug dump: "vertices V" then one "u label v" line per positive edge.
  std::string debug_string() const;

 private:
  friend SubgroupGraph fold_subgroup(const AlphabetPtr&, std::span<const Word>);

  AlphabetPtr alphabet_;
  std::vector<Word> generators_;
  std::size_t vertex_count_ = 0;
  std::vector<int> next_;  // vertex * 2*rank + letter slot, -1 when absent
};

SubgroupGraph fold_subgroup(const AlphabetPtr& alphabet, std::span<const Word> gens);
inline SubgroupGraph fold_subgroup(const AlphabetPtr& alphabet, const std::vector<Word>& gens) {
  return fold_subgroup(alphabet, std::span<const Word>(gens));
}

bool contains(const SubgroupGraph& graph, const Word& w);
/// edges - vertices + 1 of the core graph.
std::size_t rank(const SubgroupGraph& graph);
/// Free basis read off a BFS spanning tree, one word per non-tree edge.
std::vector<Word> basis_of(const SubgroupGraph& graph);

/// |gens| equals the alphabet rank and every generator is a member. A
/// generating set of a free group with rank-many elements is a basis.
bool is_basis_of_ambient(const AlphabetPtr& alphabet, std::span<const Word> gens);

/// w lies in the subgroup generated by the union of the parts.
bool membership_in_free_product_part(std::span<const std::vector<Word>> part_bases, const Word& w);

}  // namespace fg
