#include <doctest.h>

#include <random>
#include <sstream>

#include "distspec/distance.hpp"
#include "distspec/errors.hpp"
#include "distspec/families.hpp"
#include "support.hpp"

using namespace distspec;

TEST_CASE("distance matrix of small graphs") {
  const IntSymMatrix d = distance_matrix(path(4));
  CHECK(d(0, 3) == 3);
  CHECK(d(1, 3) == 2);
  CHECK(d(2, 2) == 0);
  CHECK(diameter(path(4)) == 3);
  CHECK(diameter(petersen()) == 2);
  CHECK(diameter(hypercube(5)) == 5);
  CHECK(diameter(odd_graph(3)) == 3);
  CHECK(diameter(double_odd(2)) == 5);

  const IntSymMatrix c5 = distance_matrix(cycle(5));
  for (std::size_t i = 0; i < 5; ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < 5; ++j) sum += c5(i, j);
    CHECK(sum == 6);
  }
}

TEST_CASE("disconnected graphs are rejected with a witness pair") {
  const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  try {
    distance_matrix(g);
    FAIL("expected DisconnectedGraph");
  } catch (const DisconnectedGraph& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 3);
  }
  CHECK(bfs_distances(g)[0][4] == -1);
}

TEST_CASE("transmission profiles") {
  const TransmissionProfile lolli = transmission_profile(lollipop(3, 2));
  CHECK_FALSE(lolli.regular);
  CHECK(lolli.row_sums == std::vector<BigInt>{7, 7, 5, 6, 9});
  CHECK(transmission_profile(shrikhande()).regular);
  CHECK(transmission_profile(johnson(6, 3)).regular);
  CHECK(transmission_profile(shrikhande()).row_sums.front() == 24);
}

TEST_CASE("distance matrices satisfy the metric axioms") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = distspec::testing::random_connected_graph(12, 0.15, rng);
    const IntSymMatrix d = distance_matrix(g);
    CHECK(satisfies_distance_axioms(d));
    for (const Edge& e : g.edges()) CHECK(d(e.u, e.v) == 1);
  }
  IntSymMatrix broken = distance_matrix(path(3));
  broken.set(0, 2, 5);
  CHECK_FALSE(satisfies_distance_axioms(broken));
}

TEST_CASE("cartesian product distances add") {
  const Graph g = cycle(5);
  const Graph h = path(3);
  const IntSymMatrix dg = distance_matrix(g);
  const IntSymMatrix dh = distance_matrix(h);
  const IntSymMatrix dp = distance_matrix(cartesian_product(g, h));
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 5; ++c)
        for (std::size_t e = 0; e < 3; ++e) CHECK(dp(a * 3 + b, c * 3 + e) == dg(a, c) + dh(b, e));
}

TEST_CASE("symmetric matrix wrapper") {
  IntMatrix m(2, 2);
  m << 0, 1, 2, 0;
  CHECK_THROWS_AS(IntSymMatrix{m}, InvalidArgument);
  CHECK_THROWS_AS(IntSymMatrix{IntMatrix(2, 3)}, InvalidArgument);
  const IntSymMatrix z = IntSymMatrix::zero(3);
  CHECK(z(1, 2) == 0);
  CHECK(distance_matrix(path(3)).shifted(2)(1, 1) == 2);
}

TEST_CASE("matrix text round trip") {
  const IntSymMatrix d = distance_matrix(petersen());
  std::stringstream buffer;
  write_matrix(buffer, d);
  CHECK(read_matrix(buffer) == d);
  std::istringstream bad("2\n0 1\n2 0\n");
  CHECK_THROWS(read_matrix(bad));
}
