#ifndef PTORUS_SPECTRUM_HPP
#define PTORUS_SPECTRUM_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "ptorus/bivar_poly.hpp"
#include "ptorus/symgroup.hpp"
#include "ptorus/transfer.hpp"

namespace ptorus {

class IllConditioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Young symmetrizer of the row-reading tableau of d, as a matrix on the
/// level-l state space.
Eigen::MatrixXd young_symmetrizer(const LevelOperator& op, const YoungDiagram& d);

/// Eigenvalues of T_l on the image of the Young symmetrizer of D: one value
/// per slot, dim(D) n_tor(L, l) of them, sorted by decreasing real then
/// imaginary part. Each has multiplicity dim(D) in T_l.
std::vector<std::complex<double>> eigen_sample(const LevelOperator& op, const YoungDiagram& d, double q0,
                                               double v0);
std::vector<std::complex<double>> eigen_sample(const LevelOperator& op, const YoungDiagram& d,
                                               const BigRational& q0, const BigRational& v0);

}  // namespace ptorus

#endif  // PTORUS_SPECTRUM_HPP
