#include <doctest.h>

#include <random>

#include "distspec/distance.hpp"
#include "distspec/errors.hpp"
#include "distspec/exact_linalg.hpp"
#include "distspec/families.hpp"
#include "distspec/jacobi.hpp"
#include "support.hpp"

using namespace distspec;

namespace {

IntSymMatrix random_symmetric(std::size_t n, int bound, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntSymMatrix m = IntSymMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, entry(rng));
  return m;
}

Inertia numeric_inertia(const IntSymMatrix& m) {
  Inertia out;
  for (double v : sym_eigenvalues(m.to_double())) {
    if (v > 1e-8) {
      ++out.positive;
    } else if (v < -1e-8) {
      ++out.negative;
    } else {
      ++out.zero;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Bareiss determinant on known matrices") {
  CHECK(det_exact(distance_matrix(path(4))) == -12);
  CHECK(det_exact(distance_matrix(lollipop(4, 1))) == 10);
  CHECK(det_exact(distance_matrix(complete(5))) == 4);
  CHECK(det_exact(distance_matrix(hypercube(3))) == 0);
  // Tree distance determinant: (-1)^(n-1) (n-1) 2^(n-2), for any tree.
  CHECK(det_exact(distance_matrix(path(9))) == 8 * 128);
  IntMatrix singular(3, 3);
  singular << 1, 2, 3, 2, 4, 6, 3, 6, 10;
  CHECK(determinant_bareiss(singular) == 0);
  CHECK(rank_bareiss(singular) == 2);
}

TEST_CASE("Bareiss agrees with rational Gaussian elimination") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const IntSymMatrix m = random_symmetric(n, 4, rng);
    const RationalMatrix q = m.matrix().cast<BigRational>();
    const BigRational reference = q.fullPivLu().determinant();
    CHECK(BigRational(det_exact(m)) == reference);
  }
}

TEST_CASE("determinant sign matches inertia") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const IntSymMatrix m = random_symmetric(6, 3, rng);
    const Inertia in = inertia_exact(m);
    const BigInt det = det_exact(m);
    if (in.zero > 0) {
      CHECK(det == 0);
    } else {
      CHECK(det.sign() == (in.negative % 2 == 0 ? 1 : -1));
    }
    CHECK(in.dimension() == 6);
    CHECK(in.positive + in.negative == rank_exact(m));
  }
}

TEST_CASE("congruence inertia agrees with numeric eigenvalue signs") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = distspec::testing::random_connected_graph(10, 0.25, rng);
    const IntSymMatrix d = distance_matrix(g);
    CHECK(inertia_exact(d) == numeric_inertia(d));
  }
  // Zero diagonal forces 2x2 pivots throughout.
  CHECK(inertia_exact(distance_matrix(petersen())) == Inertia{1, 4, 5});
  CHECK(inertia_exact(distance_matrix(cocktail_party(5))) == Inertia{1, 4, 5});
  CHECK(inertia_exact(distance_matrix(hypercube_with_leaf(4))) == Inertia{1, 11, 5});
}

TEST_CASE("eigenvalue multiplicities by exact rank") {
  const IntSymMatrix leaf = distance_matrix(hypercube_with_leaf(4));
  CHECK(rank_exact(leaf) == 6);
  CHECK(eigenvalue_multiplicity_exact(leaf, 0) == 11);
  CHECK(eigenvalue_multiplicity_exact(leaf, -8) == 3);
  CHECK(eigenvalue_multiplicity_exact(distance_matrix(shrikhande()), -4) == 6);
  CHECK(eigenvalue_multiplicity_exact(distance_matrix(shrikhande()), 5) == 0);
}

TEST_CASE("distinct eigenvalue count by minimal polynomial degree") {
  CHECK(distinct_eigenvalue_count(distance_matrix(hypercube(3))) == 3);
  CHECK(distinct_eigenvalue_count(distance_matrix(hypercube(4))) == 3);
  CHECK(distinct_eigenvalue_count(distance_matrix(petersen())) == 3);
  CHECK(distinct_eigenvalue_count(distance_matrix(path(4))) == 4);
  CHECK(distinct_eigenvalue_count(distance_matrix(cycle(5))) == 3);
  CHECK(distinct_eigenvalue_count(distance_matrix(cycle(6))) == 4);
  CHECK(distinct_eigenvalue_count(distance_matrix(hypercube_with_leaf(4))) == 5);
  CHECK(distinct_eigenvalue_count(distance_matrix(dodecahedron())) == 5);
  CHECK(distinct_eigenvalue_count(distance_matrix(complete(6))) == 2);
}

TEST_CASE("distinct count agrees with numeric clustering on random graphs") {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = distspec::testing::random_connected_graph(9, 0.3, rng);
    const IntSymMatrix d = distance_matrix(g);
    CHECK(distinct_eigenvalue_count(d) == numeric_spectrum(d).distinct_count());
  }
}

TEST_CASE("minimal polynomial budget") {
  CHECK_THROWS_AS(distinct_eigenvalue_count(IntSymMatrix::zero(kMinimalPolynomialMaxOrder + 1)), BudgetExceeded);
}

TEST_CASE("quotient matrices") {
  // Petersen: distance partition from vertex 0 is equitable.
  const Graph g = petersen();
  const auto dist = bfs_distances(g);
  std::vector<std::vector<std::size_t>> cells(3);
  for (std::size_t v = 0; v < 10; ++v) cells[static_cast<std::size_t>(dist[0][v])].push_back(v);
  const QuotientMatrix q = quotient_matrix(distance_matrix(g), Partition(10, cells));
  CHECK(q.equitable);
  CHECK(q.matrix(0, 2) == 12);
  CHECK(q.matrix(1, 0) == 1);

  // Lollipop: clique vs path is not equitable.
  const QuotientMatrix r = quotient_matrix(distance_matrix(lollipop(3, 2)), Partition(5, {{0, 1, 2}, {3, 4}}));
  CHECK_FALSE(r.equitable);

  const QuotientMatrix s = quotient_matrix(distance_matrix(path(3)), Partition::singletons(3));
  CHECK(s.equitable);
  CHECK(s.matrix(0, 2) == 2);

  CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Partition(3, {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), InvalidArgument);
}

TEST_CASE("equitable quotient eigenvalues are distance eigenvalues") {
  // Transmission-regular graphs: the trivial partition gives the Perron value.
  for (const Graph& g : {petersen(), shrikhande(), johnson(6, 3), hypercube(4)}) {
    const IntSymMatrix d = distance_matrix(g);
    std::vector<std::size_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const QuotientMatrix q = quotient_matrix(d, Partition(g.order(), {all}));
    CHECK(q.equitable);
    const Spectrum s = numeric_spectrum(d);
    CHECK(std::abs(s.largest().value - q.matrix(0, 0).convert_to<double>()) < 1e-9);
  }
}
