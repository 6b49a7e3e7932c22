#include "ptorus/decomp.hpp"

#include <stdexcept>

#include "ptorus/states.hpp"

namespace ptorus {

BigInteger binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

BigRational sign(int e) { return (e % 2 == 0) ? 1 : -1; }

BigRational pow2(int e) {
  BigInteger r = 1;
  r <<= e;
  return BigRational(r);
}

BigRational pow_m2(int e) { return sign(e) * pow2(e); }

BigRational fact(int n) { return BigRational(BigInteger(static_cast<long>(factorial(n)))); }

BigRational inv_fact(int n) { return BigRational(1) / fact(n); }

BivarPoly qterm(int j, const BigRational& c) { return BivarPoly::monomial(j, 0, c); }

}  // namespace

BivarPoly coeff_b_l_upper(int l) {
  if (l < 1) throw std::invalid_argument("upper branch of b^(l) needs l >= 1");
  BivarPoly b;
  for (int j = 0; j <= l; ++j) {
    BigRational c = sign(l - j) * BigRational(binomial(l + j, l - j)) * ratio(2 * l, l + j);
    c.canonicalize();
    b += qterm(j, c);
  }
  b += (BivarPoly::q() - BivarPoly(1)) * sign(l);
  return b;
}

BivarPoly coeff_b_l_lower(int l) {
  if (l < 0) throw std::invalid_argument("negative level");
  BivarPoly b;
  for (int j = 0; j <= l; ++j) b += qterm(j, sign(l - j) * BigRational(binomial(l + j, l - j)));
  return b;
}

BivarPoly coeff_b_l(int l) { return l >= 2 ? coeff_b_l_upper(l) : coeff_b_l_lower(l); }

BivarPoly coeff_b_l_j(int l, int j) {
  if (j < 0 || j > l) return {};
  return qterm(j, coeff_b_l(l).coeff(j, 0));
}

BivarPoly coeff_b_nP(int nP) {
  if (nP < 1) throw std::invalid_argument("nP must be positive");
  return (BivarPoly::q() - BivarPoly(2)).pow(nP) + (BivarPoly::q() - BivarPoly(1)) * sign(nP);
}

BivarPoly coeff_b_nP_j(int nP, int j) {
  if (nP < 1) throw std::invalid_argument("nP must be positive");
  if (j < 0 || j > nP) return {};
  if (j >= 2) return qterm(j, BigRational(binomial(nP, j)) * pow_m2(nP - j));
  if (j == 1) return qterm(1, BigRational(nP) * pow_m2(nP - 1) + sign(nP));
  return BivarPoly(sign(nP + 1) + pow_m2(nP));
}

CoeffTable CoeffTable::build(int max_level) {
  CoeffTable t;
  for (int l = 0; l <= max_level; ++l) {
    t.b_l[l] = coeff_b_l(l);
    for (int j = 0; j <= l; ++j) t.b_l_j[{l, j}] = coeff_b_l_j(l, j);
    if (l >= 1) {
      t.b_nP[l] = coeff_b_nP(l);
      for (int j = 0; j <= l; ++j) t.b_nP_j[{l, j}] = coeff_b_nP_j(l, j);
    }
  }
  return t;
}

ClassLabel multi_cycle_class(int nP, int n1) { return ClassLabel{Partition(nP, n1)}; }

ClassLabel primed_class(int nP, int n1) {
  Partition p(nP, n1);
  p.push_back(1);
  return ClassLabel{p};
}

LatticeCharacters::LatticeCharacters(const LatticeSpec& lat) : lat_(lat) {
  lat.validate();
  for (int l = 0; l <= lat.width; ++l) {
    ops_.push_back(std::make_unique<LevelOperator>(build_column_operator(lat, l)));
    levels_.emplace_back(*ops_.back(), lat.length);
  }
}

BivarPoly LatticeCharacters::K(int l) const {
  if (l < 0 || l > lat_.width) return {};
  return levels_[l].K_l();
}

BivarPoly LatticeCharacters::K_class(int l, const ClassLabel& c) const {
  if (l < 0 || l > lat_.width) return {};
  return levels_[l].K_class(c);
}

BivarPoly LatticeCharacters::K_irrep(int l, const YoungDiagram& d) const {
  if (l < 0 || l > lat_.width) return {};
  return levels_[l].K_irrep(d);
}

BivarPoly LatticeCharacters::K_multi(int nP, int n1) const {
  return K_class(nP * n1, multi_cycle_class(nP, n1));
}

BivarPoly LatticeCharacters::K_primed(int nP, int n1) const {
  return K_class(nP * n1 + 1, primed_class(nP, n1));
}

BivarPoly LatticeCharacters::K_multi_branch(int nP) const {
  BivarPoly sum;
  for (int n1 = 2; nP * n1 <= lat_.width; ++n1) sum += K_multi(nP, n1);
  return sum;
}

bool VerificationReport::all_equal() const {
  for (const auto& c : checks)
    if (!c.informational && !c.equal) return false;
  return true;
}

namespace {

void record(VerificationReport& r, std::string name, BivarPoly lhs, BivarPoly rhs,
            bool informational = false) {
  bool eq = lhs == rhs;
  r.checks.push_back({std::move(name), eq, std::move(lhs), std::move(rhs), informational});
}

std::string cls(const Partition& p) { return partition_to_string(p); }

// Classes whose trace must vanish: more than one distinct cycle length > 1,
// or more than one fixed point next to cycles of length > 1.
bool admissible(const Partition& cycle_type) {
  int fixed = 0;
  int length = 0;
  for (int c : cycle_type) {
    if (c == 1) {
      ++fixed;
    } else if (length == 0) {
      length = c;
    } else if (c != length) {
      return false;
    }
  }
  return length == 0 || fixed <= 1;
}

}  // namespace

VerificationReport verify_K_decompositions(const LatticeCharacters& chars, const RestrictedZ& oracle) {
  const int L = chars.width();
  VerificationReport report;
  auto zq = [&](int j, int n1) { return div_exact_q_power(oracle.z(j, n1), j); };
  auto zq_multi = [&](int j) { return div_exact_q_power(oracle.z_multi_branch(j), j); };

  for (int l = 2; l <= L; ++l) {
    BivarPoly rhs;
    for (int j = l; j <= L; ++j) rhs += zq(j, 1) * BigRational(fact(l) * n_tor(j, l));
    record(report, "K_" + std::to_string(l) + " over Z_{j,1}", chars.K(l), rhs);
  }

  {
    BivarPoly rhs;
    for (int j = 1; j <= L; ++j) rhs += zq(j, 1) * BigRational(BigInteger(static_cast<long>(n_tor(j, 1))));
    for (int j = 1; 2 * j <= L; ++j) rhs += zq_multi(j) * BigRational(pow2(j) - 1);
    record(report, "K_1 over Z_{j,n1}", chars.K(1), rhs);
  }

  bool matched[2] = {false, false};
  for (int reading = 0; reading <= 1; ++reading) {
    BivarPoly rhs = oracle.Z0;
    for (int j = 1; j <= L; ++j)
      rhs += zq(j, 1) * BigRational(BigInteger(static_cast<long>(n_tor(j, reading))));
    for (int j = 1; 2 * j <= L; ++j) rhs += zq_multi(j) * pow2(j);
    matched[reading] = chars.K(0) == rhs;
    record(report, "K_0 over Z_{j,n1}, coefficient n_tor(j," + std::to_string(reading) + ")", chars.K(0),
           rhs, true);
  }
  report.k0_reading = matched[0] && matched[1] ? "both"
                      : matched[0]             ? "n_tor(j,0)"
                      : matched[1]             ? "n_tor(j,1)"
                                               : "neither";
  // Exactly one reading has to hold for the decomposition to be confirmed.
  report.checks.push_back({"K_0 over Z_{j,n1}, some reading", matched[0] || matched[1], chars.K(0),
                           chars.K(0), false});

  for (int n1 = 2; n1 <= L; ++n1) {
    for (int nP = 1; nP * n1 <= L; ++nP) {
      BivarPoly rhs;
      for (int j = nP; j <= L / n1; ++j) rhs += zq(j, n1) * BigRational(BigRational(binomial(j, nP)) * pow2(j - nP));
      record(report, "K_(" + std::to_string(nP) + "," + std::to_string(n1) + ")", chars.K_multi(nP, n1),
             rhs);
    }
    for (int nP = 1; nP * n1 + 1 <= L; ++nP) {
      BivarPoly rhs;
      for (int j = nP + 1; j <= L / n1; ++j)
        rhs += zq(j, n1) * BigRational(BigRational(binomial(j, nP)) * (pow2(j - nP) - 1));
      record(report, "K_(" + std::to_string(nP) + "," + std::to_string(n1) + ")'",
             chars.K_primed(nP, n1), rhs);
    }
  }

  for (int l = 2; l <= L; ++l)
    for (const auto& p : partitions(l))
      if (!admissible(p)) record(report, "K_" + std::to_string(l) + "," + cls(p) + " vanishes",
                                 chars.K_class(l, ClassLabel{p}), BivarPoly());
  return report;
}

BivarPoly decompose_Z(const LatticeCharacters& chars) {
  const int L = chars.width();
  BivarPoly z;
  for (int l = 0; l <= L; ++l) z += chars.K(l) * coeff_b_l(l) * inv_fact(l);
  for (int nP = 1; 2 * nP <= L; ++nP) z += coeff_b_nP(nP) * chars.K_multi_branch(nP);
  return z;
}

ZjInversion invert_to_Zj(const LatticeCharacters& chars) {
  const int L = chars.width();
  ZjInversion out;
  for (int n1 = 2; n1 <= L; ++n1) {
    for (int j = 1; j * n1 <= L; ++j) {
      BivarPoly z;
      for (int nP = j; nP <= L / n1; ++nP)
        z += chars.K_multi(nP, n1) * BigRational(BigRational(binomial(nP, j)) * pow_m2(nP - j));
      z *= BivarPoly::q(j);
      out.Zj_multi[j] += z;
      out.Zjn1[{j, n1}] = std::move(z);
    }
  }
  for (int j = 0; j <= L; ++j) {
    BivarPoly z;
    for (int l = j; l <= L; ++l) z += chars.K(l) * coeff_b_l_j(l, j) * inv_fact(l);
    for (int nP = std::max(j, 1); 2 * nP <= L; ++nP) z += coeff_b_nP_j(nP, j) * chars.K_multi_branch(nP);
    out.Zj[j] = std::move(z);
  }
  return out;
}

void verify_Z_reconstruction(const LatticeCharacters& chars, const RestrictedZ& oracle,
                             VerificationReport& report) {
  const int L = chars.width();
  record(report, "Z from characters", decompose_Z(chars), oracle.Z);
  const auto inv = invert_to_Zj(chars);
  for (const auto& [j, z] : inv.Zj) record(report, "Z_" + std::to_string(j), z, oracle.z_j(j));
  for (int j = 1; j <= L; ++j) {
    auto it = inv.Zj_multi.find(j);
    BivarPoly multi = it == inv.Zj_multi.end() ? BivarPoly() : it->second;
    record(report, "Z_{" + std::to_string(j) + ",n1>1}", multi, oracle.z_multi_branch(j));
    record(report, "Z_{" + std::to_string(j) + ",1}", inv.Zj.at(j) - multi, oracle.z(j, 1));
  }
  for (const auto& [key, z] : inv.Zjn1)
    record(report, "Z_{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}", z,
           oracle.z(key.first, key.second));
}

std::vector<std::pair<int, BigInteger>> lift_primed_class(int nP, int n1, int width) {
  if (nP < 1 || n1 < 2) throw std::invalid_argument("need nP >= 1 and n1 >= 2");
  std::vector<std::pair<int, BigInteger>> out;
  for (int p = nP + 1; p <= width / n1; ++p) {
    BigInteger c = binomial(p, nP);
    if ((p - nP + 1) % 2 != 0) c = -c;
    out.emplace_back(p, c);
  }
  return out;
}

}  // namespace ptorus
