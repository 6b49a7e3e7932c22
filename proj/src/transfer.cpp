#include "ptorus/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace ptorus {

namespace {

// Dense polynomial with checked int64 coefficients. All quantities flowing
// through T^N are nonnegative counts of (configuration, state) pairs, bounded
// far below 2^63 for the lattices this library targets; overflow throws.
class CountGrid {
 public:
  CountGrid(int q_cap, int v_cap) : qn_(q_cap + 1), vn_(v_cap + 1), c_(qn_ * vn_, 0) {}

  bool empty() const { return q_hi_ < 0; }

  void add(int qd, int vd, std::int64_t k) {
    if (qd >= qn_ || vd >= vn_) throw std::overflow_error("degree exceeds the lattice bound");
    auto& slot = c_[qd * vn_ + vd];
    if (__builtin_add_overflow(slot, k, &slot)) throw std::overflow_error("coefficient overflow");
    q_hi_ = std::max(q_hi_, qd);
    v_hi_ = std::max(v_hi_, vd);
  }

  // this += k q^dq v^dv x
  void add_shifted(const CountGrid& x, int dq, int dv, std::int64_t k) {
    if (x.empty()) return;
    if (x.q_hi_ + dq >= qn_ || x.v_hi_ + dv >= vn_)
      throw std::overflow_error("degree exceeds the lattice bound");
    for (int i = 0; i <= x.q_hi_; ++i) {
      const std::int64_t* src = &x.c_[i * x.vn_];
      std::int64_t* dst = &c_[(i + dq) * vn_ + dv];
      for (int j = 0; j <= x.v_hi_; ++j) {
        if (src[j] == 0) continue;
        std::int64_t t;
        if (__builtin_mul_overflow(src[j], k, &t) || __builtin_add_overflow(dst[j], t, &dst[j]))
          throw std::overflow_error("coefficient overflow");
      }
    }
    q_hi_ = std::max(q_hi_, x.q_hi_ + dq);
    v_hi_ = std::max(v_hi_, x.v_hi_ + dv);
  }

  BivarPoly to_poly() const {
    BivarPoly p;
    for (int i = 0; i <= q_hi_; ++i)
      for (int j = 0; j <= v_hi_; ++j)
        if (auto k = c_[i * vn_ + j]; k != 0) p.add_term(i, j, BigRational(BigInteger(k)));
    return p;
  }

 private:
  int qn_;
  int vn_;
  std::vector<std::int64_t> c_;
  int q_hi_ = -1;
  int v_hi_ = -1;
};

}  // namespace

LevelOperator::LevelOperator(LatticeKind kind, int width, int level)
    : kind_(kind), space_(generate_states(width, level, kind)) {
  columns_.resize(space_.size());
  for (std::size_t s = 0; s < space_.size(); ++s) {
    for (const auto& term : column_image(space_[s], kind)) {
      auto t = space_.find(term.target);
      if (t < 0)
        throw CountMismatch("column image leaves the state space: " + describe(term.target));
      columns_[s].push_back(
          Term{static_cast<std::size_t>(t), term.q_power, term.v_power, term.coeff});
    }
  }
}

BivarPoly LevelOperator::entry(std::size_t target, std::size_t source) const {
  BivarPoly p;
  for (const auto& t : columns_.at(source))
    if (t.target == target) p.add_term(t.q_power, t.v_power, BigRational(BigInteger(t.coeff)));
  return p;
}

Eigen::MatrixXd LevelOperator::evaluate(double q, double v) const {
  const auto n = static_cast<Eigen::Index>(dimension());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t s = 0; s < columns_.size(); ++s)
    for (const auto& t : columns_[s])
      m(static_cast<Eigen::Index>(t.target), static_cast<Eigen::Index>(s)) +=
          static_cast<double>(t.coeff) * std::pow(q, t.q_power) * std::pow(v, t.v_power);
  return m;
}

std::vector<std::size_t> LevelOperator::perm_image(const Permutation& p) const {
  std::vector<std::size_t> image(space_.size());
  for (std::size_t s = 0; s < space_.size(); ++s)
    image[s] = space_.index_of(apply_mark_permutation(space_[s], p));
  return image;
}

LevelOperator build_column_operator(const LatticeSpec& lat, int level) {
  lat.validate();
  if (level < 0 || level > lat.width) throw std::invalid_argument("need 0 <= level <= width");
  return LevelOperator(lat.kind, lat.width, level);
}

LevelCharacters::LevelCharacters(const LatticeSpec& lat, int level) : level_(level) {
  compute(build_column_operator(lat, level), lat.length);
}

LevelCharacters::LevelCharacters(const LevelOperator& op, int length) : level_(op.level()) {
  compute(op, length);
}

void LevelCharacters::compute(const LevelOperator& op, int length) {
  if (length < 1) throw std::invalid_argument("length must be positive");
  const int width = op.width();
  const int q_cap = width * length + 1;
  const int v_cap = (op.kind() == LatticeKind::Square ? 2 : 3) * width * length;
  const auto& space = op.space();
  const std::size_t dim = space.size();
  const auto perms = all_permutations(level_);

  std::vector<std::vector<std::size_t>> images;
  images.reserve(perms.size());
  for (const auto& p : perms) images.push_back(op.perm_image(p));

  std::vector<CountGrid> per_perm(perms.size(), CountGrid(q_cap, v_cap));
  for (std::size_t start : space.standard()) {
    std::vector<CountGrid> x(dim, CountGrid(q_cap, v_cap));
    x[start].add(0, 0, 1);
    for (int step = 0; step < length; ++step) {
      std::vector<CountGrid> y(dim, CountGrid(q_cap, v_cap));
      for (std::size_t s = 0; s < dim; ++s) {
        if (x[s].empty()) continue;
        for (const auto& t : op.column(s)) y[t.target].add_shifted(x[s], t.q_power, t.v_power, t.coeff);
      }
      x = std::move(y);
    }
    for (std::size_t k = 0; k < perms.size(); ++k) per_perm[k].add_shifted(x[images[k][start]], 0, 0, 1);
  }

  for (std::size_t k = 0; k < perms.size(); ++k) by_perm_.emplace(perms[k], per_perm[k].to_poly());
  k_l_ = by_perm_.at(identity_permutation(level_)) * BigRational(BigInteger(factorial(level_)));
}

const BivarPoly& LevelCharacters::K_perm(const Permutation& p) const {
  auto it = by_perm_.find(p);
  if (it == by_perm_.end()) throw std::invalid_argument("permutation not in S_l");
  return it->second;
}

BivarPoly LevelCharacters::K_class(const ClassLabel& c) const {
  if (c.size() != level_) throw std::invalid_argument("class is not a partition of the level");
  BivarPoly sum;
  for (const auto& [p, k] : by_perm_)
    if (cycle_type(p) == c) sum += k;
  return sum;
}

BivarPoly LevelCharacters::K_irrep(const YoungDiagram& d) const {
  if (d.size() != level_) throw std::invalid_argument("diagram is not a partition of the level");
  const auto& table = character_table(level_);
  const auto row = table.index_of(d.rows);
  BivarPoly sum;
  for (std::size_t c = 0; c < table.labels.size(); ++c) {
    if (table.chi[row][c] == 0) continue;
    sum += K_class(ClassLabel{table.labels[c]}) * BigRational(BigInteger(table.chi[row][c]));
  }
  return sum * BigRational(BigInteger(table.dims[row]));
}

BivarPoly compute_K_l(const LatticeSpec& lat, int level) {
  return LevelCharacters(lat, level).K_l();
}

BivarPoly compute_K_lP(const LatticeSpec& lat, int level, const Permutation& p) {
  return LevelCharacters(lat, level).K_perm(p);
}

BivarPoly compute_K_lC(const LatticeSpec& lat, int level, const ClassLabel& c) {
  return LevelCharacters(lat, level).K_class(c);
}

BivarPoly compute_K_lD(const LatticeSpec& lat, int level, const YoungDiagram& d) {
  return LevelCharacters(lat, level).K_irrep(d);
}

}  // namespace ptorus
