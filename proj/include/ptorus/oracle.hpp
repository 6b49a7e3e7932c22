#ifndef PTORUS_ORACLE_HPP
#define PTORUS_ORACLE_HPP

#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "ptorus/bivar_poly.hpp"
#include "ptorus/lattice.hpp"

namespace ptorus {

/// Edge of a graph drawn on the torus. shift_x / shift_y record how many
/// times the edge crosses the x (seam) and y cuts going from u to w; summing
/// them around a cycle gives its winding numbers.
struct TorusEdge {
  int u = 0;
  int w = 0;
  int shift_x = 0;
  int shift_y = 0;
  bool seam() const { return shift_x != 0; }
};

struct TorusGraph {
  int width = 0;   // L, 0 for a plain graph
  int length = 0;  // N, 0 for a plain graph
  int num_vertices = 0;
  std::vector<TorusEdge> edges;

  /// Vertex (x, y) has index x * L + y.
  static TorusGraph from_lattice(const LatticeSpec& lat);
  /// Graph with no embedding data; every configuration classifies as Z0.
  static TorusGraph plain(int num_vertices, const std::vector<std::pair<int, int>>& edges);
};

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistentTopology : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Topology of one edge subset. A non-trivial cluster whose cycles wind
/// (n1, n2) times around (x, y) is cut by a vertical line into n1 branches
/// realising the cyclic shift by n2 mod n1 among them.
struct ClusterClassification {
  int bonds = 0;
  int clusters = 0;
  /// Number of horizontally percolating clusters.
  int j = 0;
  /// Common branch count of those clusters, 0 when j = 0.
  int n1 = 0;
  /// n2 mod n1 for the percolating clusters (0 when n1 <= 1).
  int shift = 0;
  /// Some cluster wraps both directions (only possible with j = 1, n1 = 1).
  bool wraps_both = false;
  /// Some cluster wraps only vertically (the configuration belongs to Z0).
  bool vertical_only = false;
  /// The branch permutation of every percolating cluster is one cycle,
  /// i.e. gcd(n1, n2) = 1.
  bool branch_cycle_ok = true;
};

ClusterClassification classify_config(const TorusGraph& g, const std::vector<bool>& subset);

constexpr int kMaxEnumeratedEdges = 28;

/// sum over edge subsets of q^{clusters} v^{bonds}.
BivarPoly enumerate_Z(const TorusGraph& g, int workers = 0);

/// Z split by horizontal topology.
struct RestrictedZ {
  BivarPoly Z;
  /// No horizontally percolating cluster.
  BivarPoly Z0;
  /// (j, n1) -> Z_{j,n1}, j >= 1.
  std::map<std::pair<int, int>, BivarPoly> restricted;
  /// (j, n1, n2 mod n1) -> Z_{j,n1,P}, the branch permutation P being the
  /// cyclic shift by the last index.
  std::map<std::tuple<int, int, int>, BivarPoly> by_permutation;

  /// Z_{j,n1}, with Z_{0,1} = Z0; zero when absent.
  BivarPoly z(int j, int n1) const;
  /// sum_{n1 >= 2} Z_{j,n1}.
  BivarPoly z_multi_branch(int j) const;
  /// Z_{j,1} + Z_{j,n1>1} (Z0 for j = 0).
  BivarPoly z_j(int j) const;
};

RestrictedZ restricted_Z(const TorusGraph& g, int workers = 0);

}  // namespace ptorus

#endif  // PTORUS_ORACLE_HPP
