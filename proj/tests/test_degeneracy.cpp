#include <doctest.h>

#include "ptorus/degeneracy.hpp"
#include "ptorus/oracle.hpp"

using namespace ptorus;

namespace {

double relative_error(const AmplitudeReport& r, std::size_t p) {
  const auto z = enumerate_Z(TorusGraph::from_lattice(r.lattice), 1);
  const double exact = eval_double(z, r.probes[p].q.get_d(), r.probes[p].v.get_d());
  return std::abs(reconstruct_Z_numeric(r, p) - exact) / std::abs(exact);
}

}  // namespace

TEST_CASE("reconstruction matches the enumerated Z") {
  for (auto lat : {LatticeSpec{LatticeKind::Triangular, 3, 2}, LatticeSpec{LatticeKind::Square, 4, 2},
                   LatticeSpec{LatticeKind::Square, 3, 2}}) {
    const auto r = amplitude_report(lat);
    for (std::size_t p = 0; p < r.probes.size(); ++p) CHECK(relative_error(r, p) < 1e-8);
  }
}

TEST_CASE("class bookkeeping") {
  const LatticeSpec lat{LatticeKind::Triangular, 3, 2};
  const auto r = amplitude_report(lat);
  std::int64_t total = 0;
  for (const auto& c : r.classes) {
    total += c.multiplicity;
    REQUIRE(c.values.size() == 2);
    for (const auto& m : c.members) CHECK(m.level <= c.top_level);
    if (c.top_level <= 2) CHECK(c.members.size() == 1);
    if (c.top_level == 0) CHECK(c.amplitude == BivarPoly(1));
  }
  CHECK(total == r.total_multiplicity);
  // Level 0 at L = 3 has n_tor(3,0) = 5 slots, each its own class.
  CHECK(r.new_at_level.at(0) == 5);
  for (std::size_t i = 1; i < r.classes.size(); ++i) CHECK(r.classes[i - 1].top_level >= r.classes[i].top_level);
}

TEST_CASE("square lattice flags non-generic classes without failing") {
  const auto r = amplitude_report({LatticeKind::Square, 4, 2});
  int flagged = 0;
  for (const auto& c : r.classes) flagged += c.non_generic;
  CHECK(flagged > 0);
}

TEST_CASE("guard band is enforced") {
  MatchOptions opt;
  opt.tolerance = 1e-20;
  opt.guard = 1e-5;
  CHECK_THROWS_AS(match_degeneracies({LatticeKind::Triangular, 4, 2}, default_probes(), opt), AmbiguousMatch);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(match_degeneracies({LatticeKind::Triangular, 3, 2}, {Probe{BigRational(13, 10), BigRational(7, 10)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(amplitude_report({LatticeKind::Triangular, 1, 2}), std::invalid_argument);
}
