#include "ptorus/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ptorus/spectrum.hpp"
#include "ptorus/transfer.hpp"

namespace ptorus {

std::vector<Probe> default_probes() {
  return {{BigRational(13, 10), BigRational(7, 10)}, {BigRational(17, 10), BigRational(9, 10)}};
}

namespace {

struct Sample {
  int level;
  Partition diagram;
  std::vector<std::complex<double>> values;  // one per slot, sorted
};

struct Cluster {
  std::vector<std::size_t> slots;  // indices into the flat slot list
  std::complex<double> value;
  std::vector<std::tuple<int, Partition, int>> signature;
};

double gap(std::complex<double> a, std::complex<double> b) {
  const double m = std::max(std::abs(a), std::abs(b));
  return m == 0 ? 0 : std::abs(a - b) / m;
}

bool later(std::complex<double> a, std::complex<double> b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

std::string slot_name(int level, const Partition& d, int k) {
  return "lambda_{" + std::to_string(level) + "," + partition_to_string(d) + "," + std::to_string(k) + "}";
}

struct Flat {
  int level;
  const Partition* diagram;
  int index;
};

// Clusters of one probe: level >= 3 slots merged by union-find, each
// level <= 2 slot alone.
std::vector<Cluster> cluster_probe(const std::vector<Flat>& flat, const std::vector<std::complex<double>>& z,
                                   const MatchOptions& opt) {
  const std::size_t n = flat.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (flat[i].level <= 2) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (flat[j].level <= 2) continue;
      const double g = gap(z[i], z[j]);
      if (g <= opt.tolerance) {
        parent[find(i)] = find(j);
      } else if (g < opt.guard) {
        std::ostringstream msg;
        msg << slot_name(flat[i].level, *flat[i].diagram, flat[i].index) << " and "
            << slot_name(flat[j].level, *flat[j].diagram, flat[j].index) << " differ by relative " << g;
        throw AmbiguousMatch(msg.str());
      }
    }
  }
  std::map<std::size_t, Cluster> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].slots.push_back(i);
  std::vector<Cluster> out;
  for (auto& [root, c] : by_root) {
    std::complex<double> sum = 0;
    std::map<std::pair<int, Partition>, int> count;
    for (auto s : c.slots) {
      sum += z[s];
      ++count[{flat[s].level, *flat[s].diagram}];
    }
    c.value = sum / static_cast<double>(c.slots.size());
    for (const auto& [key, k] : count) c.signature.emplace_back(key.first, key.second, k);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<DegeneracyClass> match_degeneracies(const LatticeSpec& lat, const std::vector<Probe>& probes,
                                                const MatchOptions& opt) {
  if (probes.size() < 2) throw std::invalid_argument("need at least two probes");
  if (!(opt.tolerance > 0 && opt.tolerance < opt.guard)) throw std::invalid_argument("bad tolerances");
  lat.validate();

  std::vector<Sample> samples;
  std::vector<std::vector<std::complex<double>>> per_probe(probes.size());
  for (int l = lat.width; l >= 0; --l) {
    const auto op = build_column_operator(lat, l);
    for (const auto& d : partitions(l)) {
      Sample s{l, d, {}};
      for (std::size_t p = 0; p < probes.size(); ++p) {
        auto ev = eigen_sample(op, YoungDiagram{d}, probes[p].q, probes[p].v);
        per_probe[p].insert(per_probe[p].end(), ev.begin(), ev.end());
        if (p == 0) s.values = std::move(ev);
      }
      samples.push_back(std::move(s));
    }
  }

  std::vector<Flat> flat;
  for (const auto& s : samples)
    for (std::size_t k = 0; k < s.values.size(); ++k) flat.push_back({s.level, &s.diagram, static_cast<int>(k)});

  for (auto& z : per_probe) {
    double radius = 0;
    for (const auto& x : z) radius = std::max(radius, std::abs(x));
    for (auto& x : z)
      if (std::abs(x) <= opt.zero_cut * radius) x = 0;
  }

  std::vector<std::vector<Cluster>> clusters;
  for (const auto& z : per_probe) clusters.push_back(cluster_probe(flat, z, opt));

  // Pair the clusters of every probe with those of the first by signature.
  using Signature = std::vector<std::tuple<int, Partition, int>>;
  auto grouped = [](std::vector<Cluster>& cs) {
    std::map<Signature, std::vector<Cluster*>> g;
    for (auto& c : cs) g[c.signature].push_back(&c);
    for (auto& [sig, v] : g)
      std::sort(v.begin(), v.end(), [](const Cluster* a, const Cluster* b) { return later(a->value, b->value); });
    return g;
  };
  auto base = grouped(clusters[0]);
  std::vector<std::map<Signature, std::vector<Cluster*>>> others;
  for (std::size_t p = 1; p < probes.size(); ++p) {
    others.push_back(grouped(clusters[p]));
    bool same = others.back().size() == base.size();
    for (auto it = base.begin(); same && it != base.end(); ++it) {
      auto jt = others.back().find(it->first);
      same = jt != others.back().end() && jt->second.size() == it->second.size();
    }
    if (!same) throw AmbiguousMatch("degeneracy pattern differs between probe 1 and probe " + std::to_string(p + 1));
  }

  std::vector<DegeneracyClass> out;
  for (auto& [sig, list] : base) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      DegeneracyClass c;
      c.values.push_back(list[i]->value);
      for (auto& o : others) c.values.push_back(o.at(sig)[i]->value);
      std::map<std::pair<int, Partition>, int> per_block;
      for (auto s : list[i]->slots) {
        const auto& f = flat[s];
        EigenSlot slot{f.level, *f.diagram, f.index, {}};
        for (const auto& z : per_probe) slot.values.push_back(z[s]);
        c.multiplicity += dim_irrep(YoungDiagram{*f.diagram});
        c.top_level = std::max(c.top_level, f.level);
        if (++per_block[{f.level, *f.diagram}] > 1) c.non_generic = true;
        c.members.push_back(std::move(slot));
      }
      c.zero = std::all_of(c.values.begin(), c.values.end(), [](auto z) { return z == 0.0; });
      out.push_back(std::move(c));
    }
  }

  // A nonzero level <= 2 value shared with any other slot is not generic.
  for (auto& c : out) {
    if (c.top_level > 2 || c.zero) continue;
    for (const auto& d : out) {
      if (&d == &c || d.zero) continue;
      bool hit = true;
      for (std::size_t p = 0; p < probes.size() && hit; ++p) hit = gap(c.values[p], d.values[p]) <= opt.tolerance;
      if (hit) c.non_generic = true;
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const DegeneracyClass& a, const DegeneracyClass& b) {
    if (a.top_level != b.top_level) return a.top_level > b.top_level;
    return later(a.values[0], b.values[0]);
  });
  return out;
}

AmplitudeReport amplitude_report(const LatticeSpec& lat, const std::vector<Probe>& probes,
                                 const MatchOptions& options) {
  AmplitudeReport r;
  r.lattice = lat;
  r.probes = probes;
  r.classes = match_degeneracies(lat, probes, options);
  r.tilde_b = amplitudes_tilde_b(lat.width);
  for (auto& c : r.classes) {
    for (const auto& m : c.members) {
      auto it = r.tilde_b.find({m.level, m.diagram});
      if (it != r.tilde_b.end())
        c.amplitude += it->second * BigRational(BigInteger(dim_irrep(YoungDiagram{m.diagram})));
    }
    ++r.new_at_level[c.top_level];
    r.total_multiplicity += c.multiplicity;
  }
  return r;
}

std::complex<double> reconstruct_Z_numeric(const AmplitudeReport& report, std::size_t probe) {
  if (probe >= report.probes.size()) throw std::out_of_range("no such probe");
  const double q0 = report.probes[probe].q.get_d();
  const double v0 = report.probes[probe].v.get_d();
  std::complex<double> z = 0;
  for (const auto& c : report.classes)
    if (!c.zero) z += eval_double(c.amplitude, q0, v0) * std::pow(c.values[probe], report.lattice.length);
  return z;
}

}  // namespace ptorus
