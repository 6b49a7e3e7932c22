#include <doctest.h>

#include "ptorus/transfer.hpp"

using namespace ptorus;

namespace {

BivarPoly at_v0(const BivarPoly& p) { return p.v_slice(0); }

}  // namespace

TEST_CASE("operator dimensions") {
  CHECK(build_column_operator({LatticeKind::Square, 4, 1}, 2).dimension() == 56);
  CHECK(build_column_operator({LatticeKind::Triangular, 4, 1}, 0).dimension() == 14);
}

TEST_CASE("T_l commutes with every mark permutation") {
  for (auto kind : {LatticeKind::Square, LatticeKind::Triangular})
    for (int L = 2; L <= 4; ++L)
      for (int l = 2; l <= L; ++l) {
        const auto op = build_column_operator({kind, L, 1}, l);
        const auto t = op.evaluate(1.3, 0.7);
        for (const auto& p : all_permutations(l)) {
          const auto image = op.perm_image(p);
          Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(t.rows(), t.cols());
          for (std::size_t i = 0; i < image.size(); ++i) perm(static_cast<Eigen::Index>(image[i]), static_cast<Eigen::Index>(i)) = 1;
          CHECK((t * perm - perm * t).norm() == 0.0);
        }
      }
}

TEST_CASE("K_0 at v = 0 is q^{LN}") {
  for (auto kind : {LatticeKind::Square, LatticeKind::Triangular})
    for (int L = 2; L <= 3; ++L)
      for (int N = 1; N <= 3; ++N) {
        const auto k0 = LevelCharacters(LatticeSpec{kind, L, N}, 0).K_l();
        CHECK(at_v0(k0) == BivarPoly::q(L * N));
      }
}

TEST_CASE("character bookkeeping") {
  for (auto kind : {LatticeKind::Square, LatticeKind::Triangular})
    for (int l = 0; l <= 3; ++l) {
      const LatticeSpec lat{kind, 3, 2};
      const LevelCharacters ch(lat, l);
      CHECK(ch.K_perm(identity_permutation(l)) * BigRational(BigInteger(factorial(l))) == ch.K_l());
      BivarPoly by_irrep;
      for (const auto& d : partitions(l)) by_irrep += ch.K_irrep(YoungDiagram{d});
      CHECK(by_irrep == ch.K_l());
      // K_perm runs over standard starting states only; the full trace of
      // P T^N is a class function and equals l!/|C| K_class.
      const auto op = build_column_operator(lat, l);
      const auto t = op.evaluate(1.3, 0.7);
      const Eigen::MatrixXd t2 = t * t;
      for (const auto& p : all_permutations(l)) {
        const auto c = cycle_type(p);
        const auto image = op.perm_image(p);
        double tr = 0;
        for (std::size_t i = 0; i < image.size(); ++i) tr += t2(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(image[i]));
        const double expected = eval_double(ch.K_class(c), 1.3, 0.7) * static_cast<double>(factorial(l)) /
                                static_cast<double>(class_size(c));
        CHECK(tr == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  const LevelCharacters one(LatticeSpec{LatticeKind::Triangular, 3, 2}, 1);
  CHECK(one.K_irrep(YoungDiagram{{1}}) == one.K_l());
}

TEST_CASE("K_l is the trace of T_l^N") {
  const LatticeSpec lat{LatticeKind::Triangular, 3, 3};
  for (int l = 0; l <= 3; ++l) {
    const auto op = build_column_operator(lat, l);
    const LevelCharacters ch(op, lat.length);
    const auto t = op.evaluate(1.3, 0.7);
    Eigen::MatrixXd tn = t * t * t;
    CHECK(eval_double(ch.K_l(), 1.3, 0.7) == doctest::Approx(tn.trace()).epsilon(1e-12));
  }
}

TEST_CASE("square L = 4 has no multi-branch traces") {
  const LevelCharacters ch(LatticeSpec{LatticeKind::Square, 4, 2}, 4);
  CHECK(ch.K_class(ClassLabel{{2, 2}}).is_zero());
  CHECK(ch.K_class(ClassLabel{{4}}).is_zero());
  CHECK(ch.K_perm(Permutation{1, 2, 3, 0}).is_zero());
}

TEST_CASE("L = 3 truncation K_[1,1,1] = K_[3]") {
  for (int N = 1; N <= 4; ++N) {
    const LevelCharacters ch(LatticeSpec{LatticeKind::Triangular, 3, N}, 3);
    CHECK(ch.K_irrep(YoungDiagram{{1, 1, 1}}) == ch.K_irrep(YoungDiagram{{3}}));
  }
}
