#ifndef PTORUS_DECOMP_HPP
#define PTORUS_DECOMP_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ptorus/bivar_poly.hpp"
#include "ptorus/lattice.hpp"
#include "ptorus/oracle.hpp"
#include "ptorus/symgroup.hpp"
#include "ptorus/transfer.hpp"

namespace ptorus {

BigInteger binomial(int n, int k);

/// b^(l): upper branch for l >= 2, lower branch below.
BivarPoly coeff_b_l(int l);
/// The two branches separately (both defined for every l >= 0).
BivarPoly coeff_b_l_upper(int l);
BivarPoly coeff_b_l_lower(int l);
/// The q^j term of b^(l).
BivarPoly coeff_b_l_j(int l, int j);
/// b^(nP, n1>1) = (q-2)^nP + (-1)^nP (q-1).
BivarPoly coeff_b_nP(int nP);
/// Term-wise form with the j = 0, 1 corrections.
BivarPoly coeff_b_nP_j(int nP, int j);

struct CoeffTable {
  std::map<int, BivarPoly> b_l;
  std::map<std::pair<int, int>, BivarPoly> b_l_j;
  std::map<int, BivarPoly> b_nP;
  std::map<std::pair<int, int>, BivarPoly> b_nP_j;

  static CoeffTable build(int max_level);
};

/// Class (n1^nP): nP cycles of length n1.
ClassLabel multi_cycle_class(int nP, int n1);
/// Class (n1^nP, 1).
ClassLabel primed_class(int nP, int n1);

/// Every character of every level of one lattice.
class LatticeCharacters {
 public:
  explicit LatticeCharacters(const LatticeSpec& lat);

  const LatticeSpec& lattice() const { return lat_; }
  int width() const { return lat_.width; }
  const LevelOperator& op(int level) const { return *ops_.at(level); }
  const LevelCharacters& level(int l) const { return levels_.at(l); }

  /// Zero above the width.
  BivarPoly K(int l) const;
  BivarPoly K_class(int l, const ClassLabel& c) const;
  BivarPoly K_irrep(int l, const YoungDiagram& d) const;
  /// K_{(nP,n1)}, the class (n1^nP) at level nP n1.
  BivarPoly K_multi(int nP, int n1) const;
  /// K_{(nP,n1)'}, the class (n1^nP, 1) at level nP n1 + 1.
  BivarPoly K_primed(int nP, int n1) const;
  /// sum over n1 >= 2 of K_{(nP,n1)}.
  BivarPoly K_multi_branch(int nP) const;

 private:
  LatticeSpec lat_;
  std::vector<std::unique_ptr<LevelOperator>> ops_;
  std::vector<LevelCharacters> levels_;
};

struct IdentityCheck {
  std::string name;
  bool equal = false;
  BivarPoly lhs;
  BivarPoly rhs;
  /// Set for checks that record evidence rather than assert (the K0 reading
  /// that is not expected to hold).
  bool informational = false;
};

struct VerificationReport {
  std::vector<IdentityCheck> checks;
  /// Which coefficient reading of the K0 decomposition matched the oracle:
  /// "n_tor(j,0)", "n_tor(j,1)", "both" or "neither".
  std::string k0_reading;

  bool all_equal() const;
};

/// K_l, K_1, K_0 (both readings), K_{(nP,n1)} and K_{(nP,n1)'} against the
/// enumerated restrictions.
VerificationReport verify_K_decompositions(const LatticeCharacters& chars, const RestrictedZ& oracle);

/// Z from the characters.
BivarPoly decompose_Z(const LatticeCharacters& chars);

struct ZjInversion {
  /// j -> Z_j, j = 0 .. L (Z_0 being the no-percolation part).
  std::map<int, BivarPoly> Zj;
  /// (j, n1) -> Z_{j,n1} for n1 >= 2.
  std::map<std::pair<int, int>, BivarPoly> Zjn1;
  /// j -> Z_{j, n1>1}.
  std::map<int, BivarPoly> Zj_multi;
};

ZjInversion invert_to_Zj(const LatticeCharacters& chars);

/// Adds the Z, Z_j and Z_{j,n1} reconstructions to a report.
void verify_Z_reconstruction(const LatticeCharacters& chars, const RestrictedZ& oracle,
                             VerificationReport& report);

/// (nP', coefficient) pairs with K_{(nP,n1)'} = sum coefficient * K_{(nP',n1)}.
std::vector<std::pair<int, BigInteger>> lift_primed_class(int nP, int n1, int width);

}  // namespace ptorus

#endif  // PTORUS_DECOMP_HPP
