#pragma once

// Zero forcing, the distinct-eigenvalue lower bound built on it, and
// exhaustive checks of diameter bounds over small trees.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/scalar.hpp"

namespace distspec {

/// Bit v set means vertex v is blue.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kZeroForcingMaxOrder = 24;
inline constexpr int kTreeMaxOrder = 12;

/// Least fixed point of the color-change rule (a blue vertex with exactly
/// one white neighbour turns it blue). Needs order <= 64.
VertexMask forcing_closure(const Graph& g, VertexMask blue);

/// Minimum zero forcing set size, by ascending-size exhaustive search.
/// Throws BudgetExceeded above order 24.
std::size_t zero_forcing_number(const Graph& g);

/// (n-1)/(Z(complement)+1) + 1, a lower bound on the number of distinct
/// distance eigenvalues of a connected graph.
BigRational zf_eigenvalue_bound(const Graph& g);

/// Isomorphism-invariant encoding of a tree: nested parentheses rooted at
/// the center, taking the smaller encoding when there are two centers.
std::string tree_canonical_form(const Graph& tree);

/// One representative per isomorphism class of trees of order n, ordered by
/// canonical form. 2 <= n <= 12.
std::vector<Graph> enumerate_trees(int n);
void for_each_tree(int n, const std::function<void(const Graph&)>& visit);

struct TreeBoundCheck {
  std::size_t distinct_eigenvalues = 0;
  int diameter = 0;
  /// distinct >= diam + 1
  bool strong_holds = false;
  /// distinct >= floor(diam / 2)
  bool weak_holds = false;
  /// distinct >= ceil(diam / 2); reported, not asserted
  bool ceiling_holds = false;
};

/// Throws InvalidArgument when t is not a tree.
TreeBoundCheck check_tree_bounds(const Graph& t);

struct TreeOrderSummary {
  int order = 0;
  std::size_t trees = 0;
  std::size_t strong_violations = 0;
  std::size_t weak_violations = 0;
  std::size_t ceiling_violations = 0;
  /// Edge lists of trees violating the strong bound.
  std::vector<Graph> counterexamples;
};

/// Checks every tree of order 2..max_order; workers > 1 splits each order
/// across threads. Counts do not depend on the worker count.
std::vector<TreeOrderSummary> verify_trees(int max_order, unsigned workers = 1);

}  // namespace distspec
