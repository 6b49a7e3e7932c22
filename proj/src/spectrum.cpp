#include "ptorus/spectrum.hpp"

#include <algorithm>
#include <string>

#include "ptorus/states.hpp"

namespace ptorus {

namespace {

// Permutations preserving each block of `blocks` (a set partition of 0..l-1).
std::vector<Permutation> stabilizer(const std::vector<std::vector<int>>& blocks, int l) {
  std::vector<Permutation> out{identity_permutation(l)};
  for (const auto& b : blocks) {
    std::vector<int> perm = b;
    std::vector<Permutation> next;
    std::sort(perm.begin(), perm.end());
    do {
      for (const auto& p : out) {
        Permutation q = p;
        for (std::size_t i = 0; i < b.size(); ++i) q[b[i]] = perm[i];
        next.push_back(q);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out = std::move(next);
  }
  return out;
}

}  // namespace

Eigen::MatrixXd young_symmetrizer(const LevelOperator& op, const YoungDiagram& d) {
  const int l = op.level();
  if (d.size() != l) throw std::invalid_argument("diagram is not a partition of the level");
  const auto n = static_cast<Eigen::Index>(op.dimension());
  if (l == 0) return Eigen::MatrixXd::Identity(n, n);

  // Tableau filled row by row with 0..l-1.
  std::vector<std::vector<int>> rows, cols;
  int next = 0;
  for (int r : d.rows) {
    rows.emplace_back();
    for (int c = 0; c < r; ++c) {
      if (c >= static_cast<int>(cols.size())) cols.emplace_back();
      rows.back().push_back(next);
      cols[c].push_back(next);
      ++next;
    }
  }

  const auto row_group = stabilizer(rows, l);
  const auto col_group = stabilizer(cols, l);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& c : col_group) {
    const double s = permutation_sign(c);
    for (const auto& r : row_group) {
      const auto image = op.perm_image(compose(c, r));
      for (Eigen::Index i = 0; i < n; ++i) m(static_cast<Eigen::Index>(image[i]), i) += s;
    }
  }
  return m;
}

std::vector<std::complex<double>> eigen_sample(const LevelOperator& op, const YoungDiagram& d, double q0,
                                               double v0) {
  const Eigen::MatrixXd t = op.evaluate(q0, v0);
  const auto expected =
      static_cast<Eigen::Index>(dim_irrep(d) * n_tor(op.width(), op.level()));

  Eigen::MatrixXd x;
  if (op.level() <= 1) {
    x = t;
  } else {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(young_symmetrizer(op, d));
    qr.setThreshold(1e-9);
    if (qr.rank() != expected)
      throw IllConditioned("symmetrizer image has rank " + std::to_string(qr.rank()) + ", expected " +
                           std::to_string(expected));
    const Eigen::MatrixXd q = Eigen::MatrixXd(qr.householderQ()).leftCols(expected);
    x = q.transpose() * t * q;
    const double residual = (t * q - q * x).norm();
    if (residual > 1e-9 * std::max(1.0, t.norm()))
      throw IllConditioned("symmetrizer image is not invariant, residual " + std::to_string(residual));
  }
  if (x.rows() != expected) throw IllConditioned("block dimension differs from dim(D) n_tor(L,l)");

  Eigen::EigenSolver<Eigen::MatrixXd> es(x, false);
  if (es.info() != Eigen::Success) throw IllConditioned("eigenvalue iteration did not converge");
  std::vector<std::complex<double>> out(es.eigenvalues().begin(), es.eigenvalues().end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return out;
}

std::vector<std::complex<double>> eigen_sample(const LevelOperator& op, const YoungDiagram& d,
                                               const BigRational& q0, const BigRational& v0) {
  return eigen_sample(op, d, q0.get_d(), v0.get_d());
}

}  // namespace ptorus
