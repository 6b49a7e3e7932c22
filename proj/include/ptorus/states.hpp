#ifndef PTORUS_STATES_HPP
#define PTORUS_STATES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ptorus/lattice.hpp"
#include "ptorus/symgroup.hpp"

namespace ptorus {

/// Connectivity of the L points of a time slice, with l of its blocks
/// carrying distinguishable marks (bridges to the opposite time slice).
///
/// Block ids are canonical: numbered by first occurrence scanning points
/// 0..L-1. marks[m] is the block id carrying mark m (marks are 0-based here;
/// user-facing output numbers them from 1).
struct MarkedState {
  std::vector<std::uint8_t> blocks;
  std::vector<std::uint8_t> marks;

  int width() const { return static_cast<int>(blocks.size()); }
  int level() const { return static_cast<int>(marks.size()); }
  int num_blocks() const;
  /// Mark carried by block b, or -1.
  int mark_of_block(int b) const;
  /// Marks appear in increasing block order (one representative per
  /// unlabelled state).
  bool is_standard() const;

  friend bool operator==(const MarkedState&, const MarkedState&) = default;
  friend auto operator<=>(const MarkedState&, const MarkedState&) = default;
};

/// Relabels block ids to first-occurrence order and remaps marks to match.
MarkedState canonicalize(std::vector<int> blocks, const std::vector<int>& marked_blocks);

std::string canonical_encode(const MarkedState& s);
MarkedState canonical_decode(const std::string& bytes);
/// Human-readable, e.g. "0 1 0 2 | 1:1 2:2" (block per point, then mark:block).
std::string describe(const MarkedState& s);

/// Mark m is relabelled P(m); the partition is untouched.
MarkedState apply_mark_permutation(const MarkedState& s, const Permutation& p);

/// Number of unlabelled level-l states of an L-point periodic slice.
std::int64_t n_tor(int width, int level);

/// One term of the level-preserving column image: target state with weight
/// coeff * q^q_power * v^v_power.
struct ColumnTerm {
  MarkedState target;
  int q_power = 0;
  int v_power = 0;
  std::int64_t coeff = 0;
};

/// Applies one column of the lattice to a state: horizontal bonds (and
/// diagonals for the triangular lattice) from the current slice to a fresh
/// one, then the vertical ring of the fresh slice. Each bond contributes
/// (1 + v * join). Blocks that lose all their points contribute q when
/// unmarked; terms in which a marked block vanishes or two marked blocks
/// merge change the level and are dropped.
std::vector<ColumnTerm> column_image(const MarkedState& s, LatticeKind kind);

class CountMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Indexed transfer-matrix basis at fixed (L, l).
class StateSpace {
 public:
  StateSpace(int width, int level, std::vector<MarkedState> states);

  int width() const { return width_; }
  int level() const { return level_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<MarkedState>& states() const { return states_; }
  const MarkedState& operator[](std::size_t i) const { return states_[i]; }
  /// Index of s, or -1 if s is not in the space.
  std::ptrdiff_t find(const MarkedState& s) const;
  std::size_t index_of(const MarkedState& s) const;
  /// Indices of the standard states, one per unlabelled state.
  const std::vector<std::size_t>& standard() const { return standard_; }

 private:
  int width_;
  int level_;
  std::vector<MarkedState> states_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> standard_;
};

/// Closure, under the level-l column image and under mark permutations, of
/// the slices made of singletons with l marked points. Throws CountMismatch
/// if the result does not have l! n_tor(L, l) elements.
StateSpace generate_states(int width, int level, LatticeKind kind = LatticeKind::Triangular);

}  // namespace ptorus

#endif  // PTORUS_STATES_HPP
