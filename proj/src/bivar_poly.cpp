#include "ptorus/bivar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ptorus {

std::string to_fraction_string(const BigRational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigRational parse_fraction_string(const std::string& s) {
  BigRational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

BivarPoly::BivarPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, BigRational(c));
}

BivarPoly::BivarPoly(const BigRational& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

BivarPoly BivarPoly::q(int power) { return monomial(power, 0, 1); }
BivarPoly BivarPoly::v(int power) { return monomial(0, power, 1); }

BivarPoly BivarPoly::monomial(int q_deg, int v_deg, const BigRational& c) {
  BivarPoly p;
  p.add_term(q_deg, v_deg, c);
  return p;
}

BigRational BivarPoly::coeff(int q_deg, int v_deg) const {
  auto it = terms_.find({q_deg, v_deg});
  return it == terms_.end() ? BigRational(0) : it->second;
}

int BivarPoly::q_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BivarPoly::v_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BivarPoly::min_q_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.first;
}

BivarPoly BivarPoly::v_slice(int v_deg) const {
  BivarPoly out;
  for (const auto& [e, c] : terms_)
    if (e.second == v_deg) out.terms_.emplace(Exponent{e.first, 0}, c);
  return out;
}

void BivarPoly::add_term(int q_deg, int v_deg, const BigRational& c) {
  if (q_deg < 0 || v_deg < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{q_deg, v_deg}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) { return *this = *this * o; }

BivarPoly& BivarPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, coef] : terms_) coef *= c;
  }
  return *this;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly result(1L);
  BivarPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = e.first > 0 || e.second > 0;
    bool print_coeff = !has_var || mag != 1;
    if (print_coeff) os << mag.get_str();
    auto var = [&](const char* name, int d, bool need_star) {
      if (d == 0) return need_star;
      if (need_star) os << "*";
      os << name;
      if (d > 1) os << "^" << d;
      return true;
    };
    bool star = var("q", e.first, print_coeff);
    var("v", e.second, star);
  }
  return os.str();
}

BivarPoly add(const BivarPoly& a, const BivarPoly& b) { return a + b; }
BivarPoly mul(const BivarPoly& a, const BivarPoly& b) { return a * b; }

BivarPoly div_exact_q_power(const BivarPoly& p, int j) {
  if (j < 0) throw std::invalid_argument("negative q power");
  BivarPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.first < j) {
      throw NotDivisible("term q^" + std::to_string(e.first) + " v^" +
                         std::to_string(e.second) + " is not divisible by q^" +
                         std::to_string(j));
    }
    out.add_term(e.first - j, e.second, c);
  }
  return out;
}

BigRational eval(const BivarPoly& p, const BigRational& q0, const BigRational& v0) {
  // Horner in v over q-slices would need regrouping; plain power tables are
  // enough at these degrees.
  int qd = std::max(p.q_degree(), 0);
  int vd = std::max(p.v_degree(), 0);
  std::vector<BigRational> qp(qd + 1), vp(vd + 1);
  qp[0] = 1;
  vp[0] = 1;
  for (int i = 1; i <= qd; ++i) qp[i] = qp[i - 1] * q0;
  for (int i = 1; i <= vd; ++i) vp[i] = vp[i - 1] * v0;
  BigRational sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * qp[e.first] * vp[e.second];
  return sum;
}

double eval_double(const BivarPoly& p, double q0, double v0) {
  return eval(p, BigRational(q0), BigRational(v0)).get_d();
}

nlohmann::json to_json(const BivarPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({e.first, e.second, to_fraction_string(c)});
  return {{"terms", terms}};
}

BivarPoly poly_from_json(const nlohmann::json& j) {
  BivarPoly p;
  for (const auto& t : j.at("terms")) {
    p.add_term(t.at(0).get<int>(), t.at(1).get<int>(),
               parse_fraction_string(t.at(2).get<std::string>()));
  }
  return p;
}

}  // namespace ptorus
