#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "sgraph/tree.hpp"

namespace sgraph {

/// Vertices of a simplex in connection order. Never empty.
template <typename A>
using Simplex = std::vector<A>;

/// Naive simplicial set: every simplex is stored explicitly, including all
/// of its faces. Raw values are not required to be valid; see `is_valid`.
template <typename A>
using SimplicialSet = std::set<Simplex<A>>;

template <typename A>
SimplicialSet<A> ss_vertex(const A& a) {
  return {Simplex<A>{a}};
}

template <typename A>
SimplicialSet<A> ss_overlay(SimplicialSet<A> x, const SimplicialSet<A>& y) {
  x.insert(y.begin(), y.end());
  return x;
}

/// x ∪ y ∪ { p ++ q | p ∈ x, q ∈ y }.
template <typename A>
SimplicialSet<A> ss_connect(const SimplicialSet<A>& x, const SimplicialSet<A>& y) {
  SimplicialSet<A> out = x;
  out.insert(y.begin(), y.end());
  for (const auto& p : x) {
    for (const auto& q : y) {
      Simplex<A> pq;
      pq.reserve(p.size() + q.size());
      pq.insert(pq.end(), p.begin(), p.end());
      pq.insert(pq.end(), q.begin(), q.end());
      out.insert(std::move(pq));
    }
  }
  return out;
}

/// Fold over the Boolean semiring: false-nodes overlay, true-nodes connect.
template <typename A>
SimplicialSet<A> to_simplicial_set(const Tree<BoolSemiring, A>& t) {
  return fold([](const A& a) { return ss_vertex(a); },
              [](bool s, SimplicialSet<A> x, SimplicialSet<A> y) {
                return s ? ss_connect(x, y) : ss_overlay(std::move(x), y);
              },
              t);
}

/// Right-nested connection of the vertices: [x, y, z] -> x -> (y -> z).
template <typename A>
Tree<BoolSemiring, A> simplex(std::span<const A> xs) {
  if (xs.empty()) throw std::invalid_argument("simplex: empty sequence");
  auto t = Tree<BoolSemiring, A>::leaf(xs.back());
  for (auto i = xs.size() - 1; i-- > 0;) t = connect<BoolSemiring, A>(Tree<BoolSemiring, A>::leaf(xs[i]), std::move(t));
  return t;
}

template <typename A>
Tree<BoolSemiring, A> simplex(const std::vector<A>& xs) {
  return simplex<A>(std::span<const A>(xs));
}

/// Face closure: deleting any one vertex of a simplex with two or more
/// vertices yields a simplex that is also present. Simplices with repeated
/// vertices are checked the same way.
template <typename A>
bool is_valid(const SimplicialSet<A>& ss) {
  for (const auto& s : ss) {
    if (s.empty()) return false;
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex<A> face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      if (!ss.contains(face)) return false;
    }
  }
  return true;
}

/// Order used for output: by dimension, then lexicographically.
template <typename A>
std::vector<Simplex<A>> sorted_simplices(const SimplicialSet<A>& ss) {
  std::vector<Simplex<A>> out(ss.begin(), ss.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Simplex<A>& a, const Simplex<A>& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace sgraph
