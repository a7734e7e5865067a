#pragma once

#include <random>
#include <string>

#include "sgraph/laws.hpp"
#include "sgraph/tree.hpp"

namespace test {

template <sgraph::Semiring S>
using STree = sgraph::Tree<S, std::string>;

/// Random tree with at most `max_leaves` leaves over `alphabet` names.
template <sgraph::Semiring S>
STree<S> random_tree(std::mt19937_64& rng, std::size_t max_leaves, std::size_t alphabet = 4) {
  sgraph::laws::TreeGen gen;
  gen.max_leaves = max_leaves;
  gen.alphabet = alphabet;
  return sgraph::laws::random_tree<S>(rng, gen);
}

}  // namespace test

namespace test {

/// Leaves of a tree in order, each with the root-to-leaf path of
/// (ancestor, went-right) steps. Independent of the library folds.
template <sgraph::Semiring S>
struct LeafPaths {
  struct Step {
    const STree<S>* node;
    bool right;
  };
  std::vector<std::string> names;
  std::vector<std::vector<Step>> paths;

  explicit LeafPaths(const STree<S>& t) { walk(t, {}); }

  /// Label of the lowest common ancestor of leaves i != j.
  const sgraph::label_t<S>& lca_label(std::size_t i, std::size_t j) const {
    const auto& p = paths[i];
    const auto& q = paths[j];
    std::size_t k = 0;
    while (p[k].right == q[k].right) ++k;
    return p[k].node->label();
  }

private:
  void walk(const STree<S>& t, std::vector<Step> path) {
    if (t.is_leaf()) {
      names.push_back(t.leaf_value());
      paths.push_back(std::move(path));
      return;
    }
    auto l = path;
    l.push_back({&t, false});
    walk(t.left(), std::move(l));
    path.push_back({&t, true});
    walk(t.right(), std::move(path));
  }
};

}  // namespace test
