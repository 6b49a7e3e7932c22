#ifndef PTORUS_DEGENERACY_HPP
#define PTORUS_DEGENERACY_HPP

#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptorus/basis.hpp"
#include "ptorus/bivar_poly.hpp"
#include "ptorus/lattice.hpp"

namespace ptorus {

class AmbiguousMatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Probe {
  BigRational q;
  BigRational v;
};

/// (13/10, 7/10) and (17/10, 9/10).
std::vector<Probe> default_probes();

/// lambda_{l,D,k}: the k-th eigenvalue (sorted at the first probe) of T_l on D.
struct EigenSlot {
  int level = 0;
  Partition diagram;
  int index = 0;
  /// One value per probe.
  std::vector<std::complex<double>> values;
};

struct DegeneracyClass {
  std::vector<EigenSlot> members;
  /// Common value at each probe.
  std::vector<std::complex<double>> values;
  /// sum over members of dim(D).
  std::int64_t multiplicity = 0;
  int top_level = 0;
  /// Two slots of one block, or a level <= 2 value met elsewhere.
  bool non_generic = false;
  bool zero = false;
  BivarPoly amplitude;
};

struct MatchOptions {
  double tolerance = 1e-8;
  /// Relative gaps in (tolerance, guard) are reported, not decided.
  double guard = 1e-5;
  /// |lambda| below zero_cut times the spectral radius counts as 0.
  double zero_cut = 1e-10;
};

/// Eigenvalue classes, highest level first. Levels >= 3 are merged when they
/// agree at every probe; each level <= 2 slot is its own class.
std::vector<DegeneracyClass> match_degeneracies(const LatticeSpec& lat, const std::vector<Probe>& probes,
                                                const MatchOptions& options = {});

struct AmplitudeReport {
  LatticeSpec lattice;
  std::vector<Probe> probes;
  std::vector<DegeneracyClass> classes;
  std::map<IrrepKey, BivarPoly> tilde_b;
  /// Classes whose highest member level is l.
  std::map<int, int> new_at_level;
  std::int64_t total_multiplicity = 0;
};

AmplitudeReport amplitude_report(const LatticeSpec& lat, const std::vector<Probe>& probes = default_probes(),
                                 const MatchOptions& options = {});

/// sum over classes of amplitude(q0) lambda^N at one of the report's probes.
std::complex<double> reconstruct_Z_numeric(const AmplitudeReport& report, std::size_t probe);

}  // namespace ptorus

#endif  // PTORUS_DEGENERACY_HPP
