#include "ptorus/oracle.hpp"

#include <atomic>
#include <cstdint>
#include <numeric>
#include <thread>

namespace ptorus {

TorusGraph TorusGraph::from_lattice(const LatticeSpec& lat) {
  lat.validate();
  const int L = lat.width;
  const int N = lat.length;
  TorusGraph g;
  g.width = L;
  g.length = N;
  g.num_vertices = L * N;
  auto id = [L](int x, int y) { return x * L + y; };
  for (int x = 0; x < N; ++x) {
    for (int y = 0; y < L; ++y) {
      const int sx = x == N - 1 ? 1 : 0;
      const int sy = y == L - 1 ? 1 : 0;
      g.edges.push_back({id(x, y), id((x + 1) % N, y), sx, 0});
      g.edges.push_back({id(x, y), id(x, (y + 1) % L), 0, sy});
      if (lat.kind == LatticeKind::Triangular)
        g.edges.push_back({id(x, y), id((x + 1) % N, (y + 1) % L), sx, sy});
    }
  }
  return g;
}

TorusGraph TorusGraph::plain(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  TorusGraph g;
  g.num_vertices = num_vertices;
  for (auto [u, w] : edges) {
    if (u < 0 || w < 0 || u >= num_vertices || w >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    g.edges.push_back({u, w, 0, 0});
  }
  return g;
}

namespace {

// Subgroup of Z^2 in Hermite form, rows (a, b) and (0, c) with a, c >= 0,
// b = 0 when a = 0, and 0 <= b < c when c > 0.
struct WindingLattice {
  std::int64_t a = 0, b = 0, c = 0;

  int rank() const { return (a > 0 ? 1 : 0) + (c > 0 ? 1 : 0); }

  void add_vertical(std::int64_t y) {
    c = std::gcd(c, y < 0 ? -y : y);
    if (a > 0 && c > 0) b = ((b % c) + c) % c;
  }

  void add(std::int64_t x, std::int64_t y) {
    if (x == 0) {
      if (y != 0) add_vertical(y);
      return;
    }
    if (x < 0) {
      x = -x;
      y = -y;
    }
    if (a == 0) {
      a = x;
      b = y;
      if (c > 0) b = ((b % c) + c) % c;
      return;
    }
    // Extended Euclid on the x components.
    std::int64_t r0 = a, r1 = x, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      std::int64_t qt = r0 / r1;
      std::int64_t tmp = r0 - qt * r1;
      r0 = r1;
      r1 = tmp;
      tmp = s0 - qt * s1;
      s0 = s1;
      s1 = tmp;
      tmp = t0 - qt * t1;
      t0 = t1;
      t1 = tmp;
    }
    const std::int64_t g = r0;
    const std::int64_t new_b = s0 * b + t0 * y;
    const std::int64_t leftover = (x / g) * b - (a / g) * y;
    a = g;
    b = new_b;
    if (leftover != 0) {
      add_vertical(leftover);
    } else if (c > 0) {
      b = ((b % c) + c) % c;
    }
  }

  void merge(const WindingLattice& o) {
    if (o.a != 0 || o.b != 0) add(o.a, o.b);
    if (o.c != 0) add(0, o.c);
  }
};

struct Topology {
  int j = 0;
  int n1 = 0;
  int shift = 0;
  bool wraps_both = false;
  bool vertical_only = false;
  bool cycle_ok = true;
};

// Union-find with per-vertex potential (winding offset to the parent) and
// an undo log, so a depth-first walk over edge subsets can backtrack.
class WindingUnionFind {
 public:
  explicit WindingUnionFind(int n)
      : parent_(n), rank_(n, 0), dx_(n, 0), dy_(n, 0), lattice_(n), clusters_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int clusters() const { return clusters_; }

  void add_edge(const TorusEdge& e) {
    auto [ru, ux, uy] = find(e.u);
    auto [rw, wx, wy] = find(e.w);
    const std::int64_t cx = ux + e.shift_x - wx;
    const std::int64_t cy = uy + e.shift_y - wy;
    if (ru == rw) {
      log_.push_back({Undo::Lattice, ru, lattice_[ru], 0});
      lattice_[ru].add(cx, cy);
      return;
    }
    if (rank_[ru] < rank_[rw]) {
      std::swap(ru, rw);
      // Potential of rw relative to ru flips sign.
      attach(rw, ru, -cx, -cy);
    } else {
      attach(rw, ru, cx, cy);
    }
  }

  void rollback_to(std::size_t mark) {
    while (log_.size() > mark) {
      const Undo u = log_.back();
      log_.pop_back();
      if (u.kind == Undo::Lattice) {
        lattice_[u.node] = u.saved;
      } else {
        const int child = u.node;
        const int root = parent_[child];
        parent_[child] = child;
        dx_[child] = 0;
        dy_[child] = 0;
        lattice_[root] = u.saved;
        rank_[root] = u.saved_rank;
        ++clusters_;
      }
    }
  }

  std::size_t mark() const { return log_.size(); }

  Topology topology() const {
    Topology t;
    bool have_class = false;
    std::int64_t cls_a = 0, cls_b = 0;
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (parent_[v] != static_cast<int>(v)) continue;
      const auto& lat = lattice_[v];
      switch (lat.rank()) {
        case 0:
          break;
        case 2:
          t.wraps_both = true;
          ++t.j;
          t.n1 = 1;
          break;
        default:
          if (lat.a == 0) {
            t.vertical_only = true;
            if (lat.c != 1) t.cycle_ok = false;
          } else {
            if (std::gcd(lat.a, lat.b < 0 ? -lat.b : lat.b) != 1) t.cycle_ok = false;
            const std::int64_t bb = ((lat.b % lat.a) + lat.a) % lat.a;
            if (have_class && (cls_a != lat.a || cls_b != bb)) {
              throw InconsistentTopology("percolating clusters with different winding classes");
            }
            have_class = true;
            cls_a = lat.a;
            cls_b = bb;
            ++t.j;
          }
      }
    }
    if (t.wraps_both && (t.j != 1 || t.vertical_only))
      throw InconsistentTopology("a cluster wrapping both directions coexists with other NTC");
    if (have_class) {
      if (t.vertical_only)
        throw InconsistentTopology("horizontal and vertical-only NTC in one configuration");
      t.n1 = static_cast<int>(cls_a);
      t.shift = static_cast<int>(cls_b);
    }
    return t;
  }

 private:
  struct Undo {
    enum Kind { Lattice, Union } kind;
    int node;
    WindingLattice saved;
    int saved_rank;
  };

  std::tuple<int, std::int64_t, std::int64_t> find(int v) const {
    std::int64_t x = 0, y = 0;
    while (parent_[v] != v) {
      x += dx_[v];
      y += dy_[v];
      v = parent_[v];
    }
    return {v, x, y};
  }

  // Hangs `child` (a root) under `root`; (cx, cy) is the potential of child
  // relative to root.
  void attach(int child, int root, std::int64_t cx, std::int64_t cy) {
    log_.push_back({Undo::Union, child, lattice_[root], rank_[root]});
    parent_[child] = root;
    dx_[child] = cx;
    dy_[child] = cy;
    lattice_[root].merge(lattice_[child]);
    if (rank_[root] == rank_[child]) ++rank_[root];
    --clusters_;
  }

  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<std::int64_t> dx_, dy_;
  std::vector<WindingLattice> lattice_;
  int clusters_;
  std::vector<Undo> log_;
};

// Tally of configurations by (topology slot, clusters, bonds).
class Tally {
 public:
  Tally(int slots, int max_clusters, int max_bonds)
      : cn_(max_clusters + 1), bn_(max_bonds + 1), counts_(slots * cn_ * bn_, 0) {}

  void add(int slot, int clusters, int bonds) { ++counts_[(slot * cn_ + clusters) * bn_ + bonds]; }

  void merge(const Tally& o) {
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
  }

  BivarPoly poly(int slot) const {
    BivarPoly p;
    for (int c = 0; c < cn_; ++c)
      for (int b = 0; b < bn_; ++b)
        if (auto k = counts_[(slot * cn_ + c) * bn_ + b]; k != 0)
          p.add_term(c, b, BigRational(BigInteger(static_cast<unsigned long>(k))));
    return p;
  }

 private:
  int cn_;
  int bn_;
  std::vector<std::uint64_t> counts_;
};

// Slot 0 is Z0; (j, n1, shift) maps to 1 + ((j - 1) * (S + 1) + n1) * (S + 1) + shift
// with S = max(width, 1).
struct SlotIndex {
  int span;
  explicit SlotIndex(const TorusGraph& g) : span(std::max({g.width, 1, g.num_vertices}) + 1) {}
  int count() const { return 1 + span * span * span; }
  int of(const Topology& t) const {
    if (t.j == 0) return 0;
    return 1 + ((t.j - 1) * span + t.n1) * span + t.shift;
  }
  std::tuple<int, int, int> decode(int slot) const {
    int s = slot - 1;
    int shift = s % span;
    s /= span;
    int n1 = s % span;
    int j = s / span + 1;
    return {j, n1, shift};
  }
};

void walk(const TorusGraph& g, WindingUnionFind& uf, std::size_t edge, int bonds, Tally& tally,
          const SlotIndex& slots) {
  if (edge == g.edges.size()) {
    tally.add(slots.of(uf.topology()), uf.clusters(), bonds);
    return;
  }
  walk(g, uf, edge + 1, bonds, tally, slots);
  const auto m = uf.mark();
  uf.add_edge(g.edges[edge]);
  walk(g, uf, edge + 1, bonds + 1, tally, slots);
  uf.rollback_to(m);
}

Tally enumerate(const TorusGraph& g, int workers) {
  if (static_cast<int>(g.edges.size()) > kMaxEnumeratedEdges) {
    throw TooLarge(std::to_string(g.edges.size()) + " edges exceed the enumeration cap of " +
                   std::to_string(kMaxEnumeratedEdges));
  }
  const SlotIndex slots(g);
  const int max_bonds = static_cast<int>(g.edges.size());
  if (workers <= 0) workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  // Fan out over the decisions for the first few edges.
  const int prefix = std::min<int>(max_bonds, workers > 1 ? 8 : 0);
  const std::uint32_t tasks = 1U << prefix;
  std::atomic<std::uint32_t> next{0};
  std::vector<Tally> partial(workers, Tally(slots.count(), g.num_vertices, max_bonds));
  auto worker = [&](int id) {
    WindingUnionFind uf(g.num_vertices);
    for (std::uint32_t task = next++; task < tasks; task = next++) {
      int bonds = 0;
      for (int e = 0; e < prefix; ++e) {
        if (task & (1U << e)) {
          uf.add_edge(g.edges[e]);
          ++bonds;
        }
      }
      walk(g, uf, prefix, bonds, partial[id], slots);
      uf.rollback_to(0);
    }
  };
  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  for (int w = 1; w < workers; ++w) partial[0].merge(partial[w]);
  return partial[0];
}

}  // namespace

ClusterClassification classify_config(const TorusGraph& g, const std::vector<bool>& subset) {
  if (subset.size() != g.edges.size()) throw std::invalid_argument("subset size differs from edge count");
  WindingUnionFind uf(g.num_vertices);
  ClusterClassification c;
  for (std::size_t e = 0; e < subset.size(); ++e) {
    if (!subset[e]) continue;
    uf.add_edge(g.edges[e]);
    ++c.bonds;
  }
  Topology t = uf.topology();
  c.clusters = uf.clusters();
  c.j = t.j;
  c.n1 = t.n1;
  c.shift = t.shift;
  c.wraps_both = t.wraps_both;
  c.vertical_only = t.vertical_only;
  c.branch_cycle_ok = t.cycle_ok;
  return c;
}

BivarPoly enumerate_Z(const TorusGraph& g, int workers) {
  const SlotIndex slots(g);
  Tally tally = enumerate(g, workers);
  BivarPoly z;
  for (int s = 0; s < slots.count(); ++s) z += tally.poly(s);
  return z;
}

RestrictedZ restricted_Z(const TorusGraph& g, int workers) {
  const SlotIndex slots(g);
  Tally tally = enumerate(g, workers);
  RestrictedZ out;
  out.Z0 = tally.poly(0);
  out.Z = out.Z0;
  for (int s = 1; s < slots.count(); ++s) {
    BivarPoly p = tally.poly(s);
    if (p.is_zero()) continue;
    auto [j, n1, shift] = slots.decode(s);
    out.Z += p;
    out.restricted[{j, n1}] += p;
    out.by_permutation[{j, n1, shift}] += p;
  }
  return out;
}

BivarPoly RestrictedZ::z(int j, int n1) const {
  if (j == 0) return n1 == 1 ? Z0 : BivarPoly();
  auto it = restricted.find({j, n1});
  return it == restricted.end() ? BivarPoly() : it->second;
}

BivarPoly RestrictedZ::z_multi_branch(int j) const {
  BivarPoly sum;
  for (const auto& [key, p] : restricted)
    if (key.first == j && key.second >= 2) sum += p;
  return sum;
}

BivarPoly RestrictedZ::z_j(int j) const {
  if (j == 0) return Z0;
  return z(j, 1) + z_multi_branch(j);
}

}  // namespace ptorus
