#ifndef PTORUS_SYMGROUP_HPP
#define PTORUS_SYMGROUP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptorus {

/// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

/// Irrep label of S_l.
struct YoungDiagram {
  Partition rows;
  int size() const;
  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;
};

/// Conjugacy class of S_l, labelled by cycle type.
struct ClassLabel {
  Partition cycle_type;
  int size() const;
  bool is_identity() const;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

/// Permutation of {0..l-1} in one-line notation: p[i] is the image of i.
using Permutation = std::vector<int>;

class NonIntegral : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All partitions of l (l = 0 gives the single empty partition), in
/// reverse-lexicographic order: [l] first, [1,...,1] last.
std::vector<Partition> partitions(int l);

std::string partition_to_string(const Partition& p);
/// Accepts "3,1", "[3,1]" or "3 1".
Partition parse_partition(const std::string& s);

std::int64_t factorial(int n);

/// l! / z_C.
std::int64_t class_size(const ClassLabel& c);
/// Hook-length formula.
std::int64_t dim_irrep(const YoungDiagram& d);
/// Murnaghan-Nakayama.
std::int64_t character(const YoungDiagram& d, const ClassLabel& c);
/// |C| chi_D(C) / dim(D); throws NonIntegral if the division is inexact.
std::int64_t c_coeff(const YoungDiagram& d, const ClassLabel& c);

/// Full table for S_l. Rows are irreps and columns classes, both indexed by
/// partitions(l).
struct CharacterTable {
  int l = 0;
  std::vector<Partition> labels;
  std::vector<std::vector<std::int64_t>> chi;  // chi[irrep][class]
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> class_sizes;

  std::size_t index_of(const Partition& p) const;
};

/// Cached per l; the returned reference stays valid for the program lifetime.
const CharacterTable& character_table(int l);

// Permutation helpers.
Permutation identity_permutation(int l);
Permutation inverse(const Permutation& p);
/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
ClassLabel cycle_type(const Permutation& p);
/// All of S_l in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int l);
/// A fixed member of the class: consecutive cycles (0 1 .. c1-1)(c1 ..) ...
Permutation class_representative(const ClassLabel& c);
int permutation_sign(const Permutation& p);

}  // namespace ptorus

#endif  // PTORUS_SYMGROUP_HPP
