#ifndef PTORUS_TRANSFER_HPP
#define PTORUS_TRANSFER_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <vector>

#include "ptorus/bivar_poly.hpp"
#include "ptorus/lattice.hpp"
#include "ptorus/states.hpp"
#include "ptorus/symgroup.hpp"

namespace ptorus {

/// The level-preserving diagonal block T_l of the column transfer matrix.
class LevelOperator {
 public:
  struct Term {
    std::size_t target;
    int q_power;
    int v_power;
    std::int64_t coeff;
  };

  LevelOperator(LatticeKind kind, int width, int level);

  LatticeKind kind() const { return kind_; }
  int level() const { return space_.level(); }
  int width() const { return space_.width(); }
  const StateSpace& space() const { return space_; }
  std::size_t dimension() const { return space_.size(); }

  /// Nonzero terms of column `source` (image of basis state `source`).
  const std::vector<Term>& column(std::size_t source) const { return columns_[source]; }
  BivarPoly entry(std::size_t target, std::size_t source) const;

  Eigen::MatrixXd evaluate(double q, double v) const;
  /// Sparse permutation action of the marks: perm_image(P)[s] = index of P.s.
  std::vector<std::size_t> perm_image(const Permutation& p) const;

 private:
  LatticeKind kind_;
  StateSpace space_;
  std::vector<std::vector<Term>> columns_;
};

LevelOperator build_column_operator(const LatticeSpec& lat, int level);

/// Exact characters of one level: K_l and every K_{l,P}, from T_l^N applied
/// to the standard states.
class LevelCharacters {
 public:
  LevelCharacters(const LatticeSpec& lat, int level);
  LevelCharacters(const LevelOperator& op, int length);

  int level() const { return level_; }
  /// Trace of T_l^N.
  const BivarPoly& K_l() const { return k_l_; }
  /// sum_i <v_i| P^{-1} T^N |v_i> over standard states v_i.
  const BivarPoly& K_perm(const Permutation& p) const;
  /// Sum of K_perm over the class.
  BivarPoly K_class(const ClassLabel& c) const;
  /// dim(D) sum_C chi_D(C) K_{l,C}.
  BivarPoly K_irrep(const YoungDiagram& d) const;

 private:
  void compute(const LevelOperator& op, int length);

  int level_ = 0;
  BivarPoly k_l_;
  std::map<Permutation, BivarPoly> by_perm_;
};

BivarPoly compute_K_l(const LatticeSpec& lat, int level);
BivarPoly compute_K_lP(const LatticeSpec& lat, int level, const Permutation& p);
BivarPoly compute_K_lC(const LatticeSpec& lat, int level, const ClassLabel& c);
BivarPoly compute_K_lD(const LatticeSpec& lat, int level, const YoungDiagram& d);

}  // namespace ptorus

#endif  // PTORUS_TRANSFER_HPP
