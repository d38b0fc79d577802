#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace relfree {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are keyed by exponent vectors of fixed arity; zero coefficients are
// never stored, so equality of the term maps is equality of polynomials.
class SparsePoly {
 public:
  explicit SparsePoly(int arity = 1);
  static SparsePoly constant(int arity, const mpq_class& c);
  static SparsePoly monomial(std::vector<int> expo, const mpq_class& c);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, mpq_class>& terms() const { return terms_; }
  mpq_class coeff(const std::vector<int>& expo) const;
  void add_term(const std::vector<int>& expo, const mpq_class& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator-() const;
  bool operator==(const SparsePoly& o) const = default;

  // Exact multivariate division; nullopt when the divisor does not divide.
  static std::optional<SparsePoly> try_divide(const SparsePoly& f, const SparsePoly& d);
  // Throws std::domain_error on a non-divisible input.
  static SparsePoly exact_divide(const SparsePoly& f, const SparsePoly& d);

 private:
  int arity_;
  std::map<std::vector<int>, mpq_class> terms_;
};

// First coefficients of a power series, c[0] upward.
using SeriesPrefix = std::vector<mpq_class>;

// Univariate rational function p(t)/q(t) held as dense coefficient vectors
// (constant term first, no trailing zeros).  q(0) must be nonzero.
struct UnivariateRational {
  std::vector<mpq_class> num;
  std::vector<mpq_class> den;  // {1} for polynomials

  // Canonical form: gcd-reduced, both polynomials integral with coprime
  // joint content, den(0) > 0.
  void normalize();
  bool equals(const UnivariateRational& o) const;  // compares normalized forms
  std::string to_string(const std::string& var = "t") const;
};

std::string dense_poly_to_string(const std::vector<mpq_class>& p, const std::string& var = "t");

// Taylor coefficients c_0..c_order of f.  Throws std::domain_error when the
// denominator has zero constant term.
SeriesPrefix expand(const UnivariateRational& f, int order);

// Minimal linear recurrence fit over exact rationals.
// Detection runs on all but the final `guard` coefficients, the detected
// order d must satisfy 2d + guard <= c.size(), and the guard coefficients
// must be reproduced exactly.  Returns nullopt ("no fit") otherwise.
// Throws std::invalid_argument on fewer than 2 coefficients.
std::optional<UnivariateRational> rational_fit(const SeriesPrefix& c, int guard);

// Shortest linear recurrence generating s: s[n] = sum_i q[i] s[n-i] for
// n >= length, reported through the connection polynomial
// connection = 1 - q_1 t - ... (degree <= length).
struct RecurrenceFit {
  int length = 0;
  std::vector<mpq_class> connection;
};
RecurrenceFit berlekamp_massey(const SeriesPrefix& s);

}  // namespace relfree
