#pragma once

// Generators for the graph families whose distance spectra are studied here.
//
// Subset-labelled families (hypercube, Johnson, Kneser, halved cube) list
// their vertices as bitmasks in increasing numeric order. Products use the
// row-major convention of cartesian_product. Every generator throws
// InvalidArgument naming the violated constraint.

#include <cstdint>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

using SubsetMask = std::uint64_t;

/// All r-element subsets of {0..n-1} as bitmasks, ascending.
std::vector<SubsetMask> subsets_of_size(int n, int r);

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph hypercube(int d);
Graph hamming(int d, int n);
Graph shrikhande();
/// m Shrikhande factors then H(d,4), built coordinate-wise.
Graph doob(int m, int d);
Graph johnson(int n, int r);
/// K(n,r) for any 1 <= r < n; it is disconnected when n < 2r + 1 unless
/// n = 2, and distance-core rejects it then.
Graph kneser(int n, int r);
Graph odd_graph(int r);
/// Vertices 0..N-1 are the r-subsets of {0..2r} (ascending); vertex N + i is
/// the complement of r-subset i. Adjacency is containment.
Graph double_odd(int r);
Graph halved_cube(int d);
/// Vertices 2t and 2t+1 form the t-th non-adjacent pair.
Graph cocktail_party(int m);
/// Clique on 0..k-1, path on k..k+l-1, bridge (k-1)~k.
Graph lollipop(int k, int l);
Graph barbell(int k, int l);
/// Cliques on 0..k-1 and k..k+m-1, path on k+m..k+m+l-1; the bridges are
/// (k-1)~(k+m) and (k+m-1)~(k+m+l-1), or (k-1)~(k+m-1) when l = 0.
Graph generalized_barbell(int k, int m, int l);
/// Q_d with vertex 2^d attached to vertex 0.
Graph hypercube_with_leaf(int d);
Graph petersen();
Graph icosahedron();
Graph dodecahedron();

}  // namespace distspec
