#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ptorus/basis.hpp"
#include "ptorus/decomp.hpp"
#include "ptorus/degeneracy.hpp"
#include "ptorus/oracle.hpp"
#include "ptorus/states.hpp"
#include "ptorus/symgroup.hpp"
#include "ptorus/transfer.hpp"

using namespace ptorus;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

std::string name(const LatticeSpec& lat) {
  return to_string(lat.kind) + " " + std::to_string(lat.width) + "x" + std::to_string(lat.length);
}

BivarPoly poly(std::initializer_list<BigRational> low_to_high) {
  BivarPoly p;
  int d = 0;
  for (const auto& c : low_to_high) p.add_term(d++, 0, c);
  return p;
}

BigRational dim2(const Partition& d) {
  const auto k = dim_irrep(YoungDiagram{d});
  return BigRational(BigInteger(k * k));
}

void states_count(Outcome& o) {
  for (int L = 2; L <= 6; ++L)
    for (int l = 0; l <= L; ++l) {
      const auto space = generate_states(L, l);
      o.require(static_cast<std::int64_t>(space.size()) == factorial(l) * n_tor(L, l),
                "L=" + std::to_string(L) + " l=" + std::to_string(l));
    }
  o.require(n_tor(4, 0) == 14 && n_tor(4, 1) == 35 && n_tor(4, 2) == 28, "anchors 14/35/28");
}

void character_algebra(Outcome& o) {
  for (int l = 0; l <= 8; ++l) {
    const auto& t = character_table(l);
    const auto n = t.labels.size();
    BigInteger sum_dim2 = 0;
    for (std::size_t d = 0; d < n; ++d) sum_dim2 += BigInteger(t.dims[d]) * t.dims[d];
    o.require(sum_dim2 == factorial(l), "sum dim^2 at l=" + std::to_string(l));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        BigInteger s = 0;
        for (std::size_t d = 0; d < n; ++d) s += BigInteger(t.chi[d][a]) * t.chi[d][b];
        o.require(a == b ? s * t.class_sizes[a] == factorial(l) : s == 0, "orthogonality at l=" + std::to_string(l));
      }
    for (std::size_t c = 0; c < n; ++c) {
      BigInteger s = 0;
      try {
        for (std::size_t d = 0; d < n; ++d)
          s += BigInteger(t.dims[d]) * t.dims[d] * c_coeff(YoungDiagram{t.labels[d]}, ClassLabel{t.labels[c]});
      } catch (const std::exception&) {
        o.require(false, "c(D,C) not integral at l=" + std::to_string(l));
      }
      const bool id = ClassLabel{t.labels[c]}.is_identity();
      o.require(s == (id ? BigInteger(factorial(l)) : BigInteger(0)), "sum dim^2 c(D,C) at l=" + std::to_string(l));
    }
  }
}

void identity_suite(Outcome& o) {
  const std::vector<LatticeSpec> lattices = {
      {LatticeKind::Triangular, 2, 2}, {LatticeKind::Triangular, 2, 3}, {LatticeKind::Triangular, 3, 2},
      {LatticeKind::Triangular, 3, 3}, {LatticeKind::Triangular, 4, 2}, {LatticeKind::Square, 3, 3},
      {LatticeKind::Square, 4, 2},     {LatticeKind::Square, 4, 3}};
  for (const auto& lat : lattices) {
    const auto start = std::chrono::steady_clock::now();
    const LatticeCharacters chars(lat);
    const auto oracle = restricted_Z(TorusGraph::from_lattice(lat));
    auto report = verify_K_decompositions(chars, oracle);
    verify_Z_reconstruction(chars, oracle, report);
    std::string failed;
    for (const auto& c : report.checks)
      if (!c.informational && !c.equal) failed += (failed.empty() ? "" : ", ") + c.name;
    o.detail << " " << name(lat) << ": K0 reading " << report.k0_reading << ";";
    o.require(failed.empty(), name(lat) + " fails " + failed);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= 300, name(lat) + " over the 5 min budget");
  }
}

void primed_lifting(Outcome& o) {
  for (int N = 1; N <= 3; ++N) {
    const LatticeCharacters chars({LatticeKind::Triangular, 4, N});
    const auto lhs = chars.K_primed(1, 2);
    const auto rhs = chars.K_multi(2, 2) * BigRational(2);
    o.require(lhs == rhs, "N=" + std::to_string(N) + ": " + lhs.to_string() + " vs " + rhs.to_string());
  }
}

void independence_relations(Outcome& o) {
  for (int N = 1; N <= 3; ++N) {
    const LevelCharacters k(LatticeSpec{LatticeKind::Triangular, 4, N}, 4);
    auto K = [&](const Partition& d) { return k.K_irrep(YoungDiagram{d}); };
    o.require(K({1, 1, 1, 1}) == K({2, 2}) * BigRational(1, 2) - K({4}), "[1,1,1,1] at N=" + std::to_string(N));
    o.require(K({2, 1, 1}) == K({4}) * BigRational(6) + K({3, 1}) - K({2, 2}) * BigRational(3, 2),
              "[2,1,1] at N=" + std::to_string(N));
  }
  for (int N = 1; N <= 4; ++N) {
    const LevelCharacters k(LatticeSpec{LatticeKind::Triangular, 3, N}, 3);
    o.require(k.K_irrep(YoungDiagram{{1, 1, 1}}) == k.K_irrep(YoungDiagram{{3}}), "L=3 truncation N=" + std::to_string(N));
  }
}

void amplitude_table(Outcome& o) {
  const auto R = [](long n, long d = 1) { return ratio(n, d); };
  const std::map<IrrepKey, BivarPoly> expected = {
      {{2, {2}}, poly({0, R(-3, 2), R(1, 2)})},
      {{2, {1, 1}}, poly({1, R(-3, 2), R(1, 2)})},
      {{3, {3}}, poly({-1, R(8, 3), -2, R(1, 3)})},
      {{3, {2, 1}}, poly({0, R(4, 3), -1, R(1, 6)})},
      {{4, {4}}, poly({-2, R(-5, 3), R(15, 4), R(-11, 6), R(1, 4)})},
      {{4, {3, 1}}, poly({R(-1, 3), R(-5, 9), R(15, 12), R(-11, 18), R(1, 12)})},
      {{4, {2, 2}}, poly({R(3, 2), R(-25, 12), R(5, 4), R(-1, 6)})},
  };
  const auto t4 = amplitudes_tilde_b(4);
  for (const auto& [key, p] : expected)
    o.require(t4.count(key) && t4.at(key) == p, "L=4 " + partition_to_string(key.second));
  const auto t3 = amplitudes_tilde_b(3);
  for (const auto& [key, p] : expected)
    if (key.first <= 3) o.require(t3.count(key) && t3.at(key) == p, "L=3 " + partition_to_string(key.second));
  o.require(t3.size() == 6 && t3.at({1, {1}}) == coeff_b_l(1) && t3.at({0, {}}) == BivarPoly(1), "L=3 levels 0, 1");
}

void sum_rules(Outcome& o) {
  for (int L = 3; L <= 4; ++L) {
    const auto basis = select_independent_basis(L);
    const auto t = amplitudes_tilde_b(basis);
    for (int l = 0; l <= L; ++l) {
      BivarPoly s;
      for (const auto& d : basis.selected.at(l)) s += t.at({l, d}) * dim2(d);
      o.require(s == coeff_b_l(l), "L=" + std::to_string(L) + " l=" + std::to_string(l));
    }
  }
  for (int l = 0; l <= 8; ++l)
    for (int j = 0; j <= l; ++j) {
      BivarPoly s;
      for (const auto& d : partitions(l)) s += coeff_b_lD_j(l, d, j) * dim2(d);
      o.require(s == coeff_b_l_j(l, j), "b^(l,D)_j at l=" + std::to_string(l) + " j=" + std::to_string(j));
    }
}

void degeneracy_counts(Outcome& o) {
  const auto r = amplitude_report({LatticeKind::Triangular, 4, 2});
  int sym3 = 0, mixed3 = 0, sym2 = 0, anti2 = 0;
  for (const auto& c : r.classes) {
    if (c.top_level == 3) {
      bool has21 = false;
      for (const auto& m : c.members) has21 |= m.level == 3 && m.diagram == Partition{2, 1};
      ++(has21 ? mixed3 : sym3);
    }
    if (c.top_level == 2) ++(c.members.front().diagram == Partition{2} ? sym2 : anti2);
  }
  auto at = [&](int l) { return r.new_at_level.count(l) ? r.new_at_level.at(l) : 0; };
  o.detail << " level 4: " << at(4) << ", level 3: " << sym3 << "+" << mixed3 << ", level 2: " << sym2 << "+" << anti2
           << ", level 1: " << at(1) << ", level 0: " << at(0) << ";";
  o.require(at(4) == 4, "level 4 expects 4");
  o.require(sym3 == 6 && mixed3 == 16, "level 3 expects 6+16");
  o.require(sym2 == 28 && anti2 == 28, "level 2 expects 28+28");
  o.require(at(1) == 35, "level 1 expects 35");
  o.require(at(0) == 14, "level 0 expects 14");
}

void square_non_generic(Outcome& o) {
  for (int N = 2; N <= 3; ++N) {
    const LatticeSpec lat{LatticeKind::Square, 4, N};
    o.require(compute_K_lC(lat, 4, ClassLabel{{2, 2}}).is_zero(), "K_4,(2,2) at N=" + std::to_string(N));
    o.require(compute_K_lC(lat, 4, ClassLabel{{4}}).is_zero(), "K_4,(1,4) at N=" + std::to_string(N));
  }
  try {
    const auto r = amplitude_report({LatticeKind::Square, 4, 2});
    int flagged = 0;
    for (const auto& c : r.classes) flagged += c.non_generic;
    o.detail << " " << flagged << " non-generic classes flagged;";
  } catch (const std::exception& e) {
    o.require(false, std::string("report threw: ") + e.what());
  }
}

void reconstruction(Outcome& o) {
  for (auto lat : {LatticeSpec{LatticeKind::Triangular, 3, 2}, LatticeSpec{LatticeKind::Triangular, 4, 2},
                   LatticeSpec{LatticeKind::Square, 4, 2}}) {
    const auto r = amplitude_report(lat);
    const auto z = enumerate_Z(TorusGraph::from_lattice(lat));
    for (std::size_t p = 0; p < r.probes.size(); ++p) {
      const double exact = eval_double(z, r.probes[p].q.get_d(), r.probes[p].v.get_d());
      const double rel = std::abs(reconstruct_Z_numeric(r, p) - exact) / std::abs(exact);
      o.detail << " " << name(lat) << " probe " << p << ": " << std::scientific << std::setprecision(2) << rel
               << std::defaultfloat << ";";
      o.require(rel <= 1e-8, name(lat) + " probe " + std::to_string(p));
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    std::string title;
    std::function<void(Outcome&)> run;
    double budget;  // seconds, 0 for none
  };
  const std::vector<Criterion> criteria = {
      {"state counts l! n_tor(L,l), L <= 6", states_count, 10},
      {"character algebra, l <= 8", character_algebra, 5},
      {"oracle vs transfer identities", identity_suite, 1800},
      {"K_3,(1,2)' = 2 K_4,(2,2) on triangular L=4", primed_lifting, 0},
      {"L=4 independence relations and L=3 truncation", independence_relations, 0},
      {"amplitude table", amplitude_table, 1},
      {"sum rules", sum_rules, 0},
      {"degeneracy counts, triangular L=4", degeneracy_counts, 60},
      {"square L=4 non-generic check", square_non_generic, 0},
      {"numeric reconstruction of Z", reconstruction, 0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].budget > 0) o.require(secs < criteria[i].budget, "over the time budget");
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].title << " (" << std::fixed
              << std::setprecision(1) << secs << " s)" << std::defaultfloat << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
