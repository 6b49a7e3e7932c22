#ifndef PTORUS_BIVAR_POLY_HPP
#define PTORUS_BIVAR_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace ptorus {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every operation).
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// n/d in lowest terms. The two-argument mpq_class constructor does not reduce.
inline BigRational ratio(long n, long d) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

/// "num/den" with den > 0; integers are written with den = 1.
std::string to_fraction_string(const BigRational& r);
BigRational parse_fraction_string(const std::string& s);

class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse polynomial in q (the cluster weight Q) and v (= e^J - 1) with
/// rational coefficients. Terms are keyed by (q-degree, v-degree) and stored
/// in lexicographic order; zero coefficients are never stored.
class BivarPoly {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, BigRational>;

  BivarPoly() = default;
  BivarPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit BivarPoly(const BigRational& c);

  static BivarPoly q(int power = 1);
  static BivarPoly v(int power = 1);
  static BivarPoly monomial(int q_deg, int v_deg, const BigRational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of q^i v^j (zero if absent).
  BigRational coeff(int q_deg, int v_deg) const;
  int q_degree() const;
  int v_degree() const;
  int min_q_degree() const;

  /// Univariate slice: the polynomial in q multiplying v^j.
  BivarPoly v_slice(int v_deg) const;

  void add_term(int q_deg, int v_deg, const BigRational& c);

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o);
  BivarPoly& operator*=(const BigRational& c);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const BigRational& c) { return a *= c; }
  friend BivarPoly operator*(const BigRational& c, BivarPoly a) { return a *= c; }
  friend BivarPoly operator*(long c, BivarPoly a) { return a *= BigRational(c); }
  friend BivarPoly operator*(BivarPoly a, long c) { return a *= BigRational(c); }
  BivarPoly operator-() const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.terms_ == b.terms_;
  }

  BivarPoly pow(unsigned e) const;

  /// Human-readable form, e.g. "q^2*v - 3*q + 1/2".
  std::string to_string() const;

 private:
  TermMap terms_;
};

BivarPoly add(const BivarPoly& a, const BivarPoly& b);
BivarPoly mul(const BivarPoly& a, const BivarPoly& b);

/// p / q^j. Throws NotDivisible if some term has q-degree below j.
BivarPoly div_exact_q_power(const BivarPoly& p, int j);

BigRational eval(const BivarPoly& p, const BigRational& q0, const BigRational& v0);
double eval_double(const BivarPoly& p, double q0, double v0);

/// {"terms": [[i, j, "num/den"], ...]} in canonical order.
nlohmann::json to_json(const BivarPoly& p);
BivarPoly poly_from_json(const nlohmann::json& j);

}  // namespace ptorus

#endif  // PTORUS_BIVAR_POLY_HPP
