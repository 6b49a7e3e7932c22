#ifndef PTORUS_LATTICE_HPP
#define PTORUS_LATTICE_HPP

#include <stdexcept>
#include <string>

namespace ptorus {

/// Triangular = square plus one diagonal per plaquette, always oriented from
/// (x, y) to (x + 1, y + 1).
enum class LatticeKind { Square, Triangular };

/// An L x N torus: L sites per time slice (periodic, the y direction), N time
/// slices (periodic, the x direction, along which the transfer matrix acts).
struct LatticeSpec {
  LatticeKind kind = LatticeKind::Square;
  int width = 2;   // L
  int length = 1;  // N

  int edges_per_column() const { return kind == LatticeKind::Square ? 2 * width : 3 * width; }
  int num_edges() const { return edges_per_column() * length; }
  int num_vertices() const { return width * length; }

  void validate() const {
    if (width < 2) throw std::invalid_argument("lattice width must be at least 2");
    if (length < 1) throw std::invalid_argument("lattice length must be at least 1");
  }
};

inline std::string to_string(LatticeKind k) {
  return k == LatticeKind::Square ? "square" : "triangular";
}

inline LatticeKind parse_lattice_kind(const std::string& s) {
  if (s == "square") return LatticeKind::Square;
  if (s == "triangular") return LatticeKind::Triangular;
  throw std::invalid_argument("unknown lattice kind: " + s);
}

}  // namespace ptorus

#endif  // PTORUS_LATTICE_HPP
