#include <doctest.h>

#include <random>

#include "ptorus/oracle.hpp"

using namespace ptorus;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

BivarPoly plain_Z(int n, const EdgeList& edges) { return enumerate_Z(TorusGraph::plain(n, edges), 1); }

// Z(G) = Z(G - e) + v Z(G / e), computed recursively down to edgeless graphs.
BivarPoly deletion_contraction(int n, EdgeList edges) {
  if (edges.empty()) return BivarPoly::q(n);
  const auto [a, b] = edges.back();
  edges.pop_back();
  const BivarPoly deleted = deletion_contraction(n, edges);
  if (a == b) return deleted + BivarPoly::v() * deleted;
  // Merge b into a and renumber the last vertex into b's slot.
  EdgeList merged;
  for (auto [x, y] : edges) {
    auto fix = [&](int z) {
      const int t = z == b ? a : z;
      return t == n - 1 ? b : t;
    };
    merged.emplace_back(fix(x), fix(y));
  }
  return deleted + BivarPoly::v() * deletion_contraction(n - 1, merged);
}

BivarPoly one_plus_v_pow(int e) { return (BivarPoly(1) + BivarPoly::v()).pow(static_cast<unsigned>(e)); }

std::vector<bool> horizontal_ring(const TorusGraph& g, int y) {
  std::vector<bool> subset(g.edges.size(), false);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.u % g.width == y && e.w % g.width == y && e.shift_y == 0 && e.u != e.w) subset[i] = true;
  }
  return subset;
}

}  // namespace

TEST_CASE("deletion-contraction on random multigraphs") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> nd(2, 6), md(1, 11);
    const int n = nd(rng);
    const int m = md(rng);
    std::uniform_int_distribution<int> vd(0, n - 1);
    EdgeList edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(vd(rng), vd(rng));
    CAPTURE(trial);
    CHECK(plain_Z(n, edges) == deletion_contraction(n, edges));
  }
}

TEST_CASE("small graphs by hand") {
  // Single edge: q^2 + q v.
  CHECK(plain_Z(2, {{0, 1}}) == BivarPoly::q(2) + BivarPoly::q() * BivarPoly::v());
  // Triangle: q^3 + 3 q^2 v + 3 q v^2 + q v^3.
  const auto q = BivarPoly::q(), v = BivarPoly::v();
  CHECK(plain_Z(3, {{0, 1}, {1, 2}, {2, 0}}) == q.pow(3) + 3 * q.pow(2) * v + 3 * q * v.pow(2) + q * v.pow(3));
}

TEST_CASE("torus lattice sanity") {
  for (auto lat : {LatticeSpec{LatticeKind::Square, 3, 2}, LatticeSpec{LatticeKind::Triangular, 2, 3},
                   LatticeSpec{LatticeKind::Square, 2, 2}, LatticeSpec{LatticeKind::Triangular, 3, 2}}) {
    const auto g = TorusGraph::from_lattice(lat);
    CHECK(static_cast<int>(g.edges.size()) == lat.num_edges());
    const auto z = enumerate_Z(g, 1);
    CHECK(z.v_slice(0) == BivarPoly::q(lat.num_vertices()));
    CHECK(z.v_slice(lat.num_edges()) == BivarPoly::q());
    for (int k = 0; k <= lat.num_edges(); ++k) {
      // Z(1, v) = (1 + v)^|E|, read off term by term.
      BigRational sum = 0;
      const auto slice = z.v_slice(k);
      for (const auto& [e, c] : slice.terms()) sum += c;
      CHECK(sum == one_plus_v_pow(lat.num_edges()).coeff(0, k));
    }
    CHECK(enumerate_Z(g, 3) == z);
  }
}

TEST_CASE("restrictions partition Z") {
  for (auto lat : {LatticeSpec{LatticeKind::Square, 4, 2}, LatticeSpec{LatticeKind::Triangular, 3, 2},
                   LatticeSpec{LatticeKind::Triangular, 4, 2}}) {
    const auto r = restricted_Z(TorusGraph::from_lattice(lat), 1);
    BivarPoly sum = r.Z0;
    for (const auto& [key, z] : r.restricted) {
      sum += z;
      CHECK_NOTHROW(div_exact_q_power(z, key.first));
      BivarPoly by_perm;
      for (const auto& [k3, zp] : r.by_permutation)
        if (std::get<0>(k3) == key.first && std::get<1>(k3) == key.second) by_perm += zp;
      CHECK(by_perm == z);
    }
    CHECK(sum == r.Z);
    CHECK(r.Z == enumerate_Z(TorusGraph::from_lattice(lat), 1));
    BivarPoly by_j;
    for (int j = 0; j <= lat.width; ++j) by_j += r.z_j(j);
    CHECK(by_j == r.Z);
  }
}

TEST_CASE("square L = 4: no room for multi-branch clusters filling the width") {
  const auto r = restricted_Z(TorusGraph::from_lattice({LatticeKind::Square, 4, 2}), 1);
  CHECK(r.z(1, 4).is_zero());
  CHECK(r.z(2, 2).is_zero());
}

TEST_CASE("classification of special subsets") {
  const LatticeSpec lat{LatticeKind::Square, 3, 3};
  const auto g = TorusGraph::from_lattice(lat);
  auto c = classify_config(g, std::vector<bool>(g.edges.size(), false));
  CHECK(c.j == 0);
  CHECK(c.clusters == lat.num_vertices());
  CHECK(c.bonds == 0);

  c = classify_config(g, horizontal_ring(g, 1));
  CHECK(c.j == 1);
  CHECK(c.n1 == 1);
  CHECK(c.bonds == lat.length);

  c = classify_config(g, std::vector<bool>(g.edges.size(), true));
  CHECK(c.j == 1);
  CHECK(c.n1 == 1);
  CHECK(c.clusters == 1);
  CHECK(c.wraps_both);
}

TEST_CASE("two parallel rings are two percolating clusters") {
  const auto g = TorusGraph::from_lattice({LatticeKind::Square, 4, 2});
  auto a = horizontal_ring(g, 0), b = horizontal_ring(g, 2);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
  const auto c = classify_config(g, a);
  CHECK(c.j == 2);
  CHECK(c.n1 == 1);
}

TEST_CASE("enumeration refuses oversized lattices") {
  CHECK_THROWS_AS(enumerate_Z(TorusGraph::from_lattice({LatticeKind::Triangular, 4, 3})), TooLarge);
}
