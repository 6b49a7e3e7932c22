#include "ptorus/basis.hpp"

#include <algorithm>

#include "ptorus/decomp.hpp"

namespace ptorus {

namespace {

using Matrix = std::vector<std::vector<BigRational>>;

BigRational fact(int n) { return BigRational(BigInteger(static_cast<long>(factorial(n)))); }

// Row-reduces m in place; returns the rank.
std::size_t row_reduce(Matrix& m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const BigRational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

Matrix invert(const Matrix& s) {
  const std::size_t n = s.size();
  Matrix a(n, std::vector<BigRational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i].size() != n) throw SingularSelection("selection size differs from the number of class variables");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = s[i][j];
    a[i][n + i] = 1;
  }
  if (row_reduce(a) != n) throw SingularSelection("selected characters do not span the class variables");
  Matrix inv(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    // After full reduction row i has its pivot in column i.
    if (a[i][i] == 0) throw SingularSelection("selected characters do not span the class variables");
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j] / a[i][i];
  }
  return inv;
}

std::vector<ClassVariable> all_variables(int width) {
  std::vector<ClassVariable> out;
  for (int l = 0; l <= width; ++l)
    for (const auto& v : class_variables(l)) out.push_back(v);
  return out;
}

std::vector<BigRational> dense(const std::map<ClassVariable, BigRational>& x,
                               const std::vector<ClassVariable>& vars) {
  std::vector<BigRational> row(vars.size());
  for (const auto& [v, c] : x) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw std::logic_error("class variable outside the basis");
    row[static_cast<std::size_t>(it - vars.begin())] = c;
  }
  return row;
}

IndependentBasis assemble(int width, std::map<int, std::vector<Partition>> choice) {
  IndependentBasis b;
  b.width = width;
  b.variables = all_variables(width);
  Matrix s;
  for (int l = 0; l <= width; ++l) {
    auto& sel = choice[l];
    if (sel.size() != class_variables(l).size())
      throw SingularSelection("level " + std::to_string(l) + " needs " +
                              std::to_string(class_variables(l).size()) + " characters");
    for (const auto& d : sel) {
      b.order.emplace_back(l, d);
      s.push_back(dense(irrep_expansion(l, d, width), b.variables));
    }
  }
  b.selected = std::move(choice);
  // K = S X, so X = S^{-1} K.
  b.inverse = invert(s);
  return b;
}

std::map<IrrepKey, BigRational> combine(const IndependentBasis& b, const std::vector<BigRational>& x) {
  std::map<IrrepKey, BigRational> out;
  for (std::size_t d = 0; d < b.order.size(); ++d) {
    BigRational c = 0;
    for (std::size_t v = 0; v < x.size(); ++v)
      if (x[v] != 0) c += x[v] * b.inverse[v][d];
    if (c != 0) out[b.order[d]] = c;
  }
  return out;
}

}  // namespace

std::vector<ClassVariable> class_variables(int level) {
  if (level < 0) throw std::invalid_argument("negative level");
  std::vector<ClassVariable> out{{level, level, 1}};
  for (int n1 = 2; n1 <= level; ++n1)
    if (level % n1 == 0) out.push_back({level, level / n1, n1});
  return out;
}

std::map<ClassVariable, BigRational> class_expansion(int level, const Partition& cycle_type, int width) {
  std::map<ClassVariable, BigRational> out;
  if (level > width) return out;
  int sum = 0;
  for (int c : cycle_type) sum += c;
  if (sum != level) throw std::invalid_argument("cycle type is not a partition of the level");

  for (const auto& v : class_variables(level))
    if (v.cycle_type() == cycle_type) {
      out[v] = 1;
      return out;
    }
  // (n1^nP, 1) with n1 >= 2.
  if (cycle_type.size() >= 2 && cycle_type.back() == 1 && cycle_type.front() >= 2) {
    const int n1 = cycle_type.front();
    const auto nP = static_cast<int>(cycle_type.size()) - 1;
    if (std::all_of(cycle_type.begin(), cycle_type.end() - 1, [&](int c) { return c == n1; })) {
      for (const auto& [p, c] : lift_primed_class(nP, n1, width)) out[{p * n1, p, n1}] = BigRational(c);
    }
  }
  return out;
}

std::map<ClassVariable, BigRational> irrep_expansion(int level, const Partition& diagram, int width) {
  const auto& table = character_table(level);
  const auto row = table.index_of(diagram);
  std::map<ClassVariable, BigRational> out;
  for (std::size_t c = 0; c < table.labels.size(); ++c) {
    if (table.chi[row][c] == 0) continue;
    for (const auto& [v, k] : class_expansion(level, table.labels[c], width))
      out[v] += k * BigRational(BigInteger(table.chi[row][c] * table.dims[row]));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool IndependentBasis::is_selected(int level, const Partition& d) const {
  auto it = selected.find(level);
  return it != selected.end() && std::find(it->second.begin(), it->second.end(), d) != it->second.end();
}

std::map<IrrepKey, BigRational> IndependentBasis::e(int level, const Partition& diagram) const {
  return combine(*this, dense(irrep_expansion(level, diagram, width), variables));
}

std::map<IrrepKey, BigRational> IndependentBasis::tilde_c(int level, const Partition& cycle_type) const {
  auto out = combine(*this, dense(class_expansion(level, cycle_type, width), variables));
  for (auto& [key, c] : out) c *= fact(key.first);
  return out;
}

IndependentBasis select_independent_basis(int width,
                                          const std::map<int, std::vector<Partition>>& choice) {
  return assemble(width, choice);
}

IndependentBasis select_pivot_basis(int width) {
  std::map<int, std::vector<Partition>> choice;
  for (int l = 0; l <= width; ++l) {
    const auto own = class_variables(l);
    Matrix kept;
    for (const auto& d : partitions(l)) {
      if (choice[l].size() == own.size()) break;
      auto full = irrep_expansion(l, d, width);
      std::vector<BigRational> row;
      for (const auto& v : own) row.push_back(full.count(v) ? full.at(v) : BigRational(0));
      Matrix trial = kept;
      trial.push_back(row);
      Matrix reduced = trial;
      if (row_reduce(reduced) == trial.size()) {
        kept = std::move(trial);
        choice[l].push_back(d);
      }
    }
  }
  return assemble(width, choice);
}

IndependentBasis select_independent_basis(int width) {
  if (width < 0) throw std::invalid_argument("negative width");
  if (width > 4) return select_pivot_basis(width);
  const std::map<int, std::vector<Partition>> paper{
      {0, {{}}}, {1, {{1}}}, {2, {{2}, {1, 1}}}, {3, {{3}, {2, 1}}}, {4, {{4}, {3, 1}, {2, 2}}}};
  std::map<int, std::vector<Partition>> choice;
  for (int l = 0; l <= width; ++l) choice[l] = paper.at(l);
  try {
    return assemble(width, choice);
  } catch (const SingularSelection&) {
    return select_pivot_basis(width);
  }
}

std::map<IrrepKey, BivarPoly> amplitudes_tilde_b(const IndependentBasis& basis) {
  std::map<IrrepKey, BivarPoly> out;
  for (std::size_t v = 0; v < basis.variables.size(); ++v) {
    const auto& var = basis.variables[v];
    const BivarPoly z = var.identity() ? coeff_b_l(var.level) : coeff_b_nP(var.nP);
    for (std::size_t d = 0; d < basis.order.size(); ++d)
      if (basis.inverse[v][d] != 0) out[basis.order[d]] += z * basis.inverse[v][d];
  }
  for (const auto& key : basis.order) out.try_emplace(key);
  return out;
}

std::map<IrrepKey, BivarPoly> amplitudes_tilde_b(int width) {
  return amplitudes_tilde_b(select_independent_basis(width));
}

BivarPoly coeff_b_lD_j(int level, const Partition& diagram, int j) {
  BivarPoly out = coeff_b_l_j(level, j) * (BigRational(1) / fact(level));
  const YoungDiagram d{diagram};
  for (int n1 = 2; n1 <= level; ++n1) {
    if (level % n1 != 0) continue;
    const int nP = level / n1;
    const BigRational c(BigInteger(c_coeff(d, multi_cycle_class(nP, n1))));
    out += coeff_b_nP_j(nP, j) * (c / fact(level));
  }
  return out;
}

BivarPoly coeff_b_lD(int level, const Partition& diagram) {
  BivarPoly out;
  for (int j = 0; j <= level; ++j) out += coeff_b_lD_j(level, diagram, j);
  return out;
}

}  // namespace ptorus
