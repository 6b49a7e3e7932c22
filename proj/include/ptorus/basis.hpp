#ifndef PTORUS_BASIS_HPP
#define PTORUS_BASIS_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptorus/bivar_poly.hpp"
#include "ptorus/symgroup.hpp"

namespace ptorus {

class SingularSelection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (level, diagram) key for a K_{l,D}.
using IrrepKey = std::pair<int, Partition>;
/// (level, cycle type) key for a K_{l,C}.
using ClassKey = std::pair<int, Partition>;

/// A class trace that survives on every lattice: the identity (n1 = 1, nP = l)
/// or nP cycles of the same length n1 >= 2.
struct ClassVariable {
  int level = 0;
  int nP = 0;
  int n1 = 1;

  bool identity() const { return n1 == 1; }
  Partition cycle_type() const { return Partition(nP, n1); }
  auto operator<=>(const ClassVariable&) const = default;
};

/// Surviving class variables of one level, identity first, then n1 increasing.
std::vector<ClassVariable> class_variables(int level);

/// K_{l,C} over the surviving class variables of levels l..width. Primed
/// classes (n1^nP, 1) are lifted to higher levels; every other class that is
/// not a surviving variable vanishes.
std::map<ClassVariable, BigRational> class_expansion(int level, const Partition& cycle_type, int width);

/// K_{l,D} = dim(D) sum_C chi_D(C) K_{l,C} over the class variables.
std::map<ClassVariable, BigRational> irrep_expansion(int level, const Partition& diagram, int width);

struct IndependentBasis {
  int width = 0;
  /// Selected diagrams per level, in reverse-lexicographic order.
  std::map<int, std::vector<Partition>> selected;
  /// Selected K_{l,D} in column order (level ascending).
  std::vector<IrrepKey> order;
  /// Class variables in row order (level ascending).
  std::vector<ClassVariable> variables;
  /// S^{-1}: K_{l,D} selected = sum_v S[D][v] X_v, so X_v = sum_D inv[v][D] K_D.
  std::vector<std::vector<BigRational>> inverse;

  bool is_selected(int level, const Partition& d) const;
  /// e(D, D') for every K_{l,D}: its expansion over the selected set.
  std::map<IrrepKey, BigRational> e(int level, const Partition& diagram) const;
  /// tilde_c(D', C): K_{l,C} = sum over selected D' of tilde_c / l'! K_{l',D'}.
  std::map<IrrepKey, BigRational> tilde_c(int level, const Partition& cycle_type) const;
};

/// Paper convention at L <= 4, the reverse-lexicographic pivot rule above.
IndependentBasis select_independent_basis(int width);
/// Explicit choice; throws SingularSelection when it does not span.
IndependentBasis select_independent_basis(int width, const std::map<int, std::vector<Partition>>& choice);
/// Greedy reverse-lexicographic pivot rule at every level.
IndependentBasis select_pivot_basis(int width);

/// Z = sum over selected (l, D) of tilde_b K_{l,D}.
std::map<IrrepKey, BivarPoly> amplitudes_tilde_b(const IndependentBasis& basis);
std::map<IrrepKey, BivarPoly> amplitudes_tilde_b(int width);

/// Coefficients of Z over all K_{l,D} before eliminating dependencies.
BivarPoly coeff_b_lD_j(int level, const Partition& diagram, int j);
BivarPoly coeff_b_lD(int level, const Partition& diagram);

}  // namespace ptorus

#endif  // PTORUS_BASIS_HPP
