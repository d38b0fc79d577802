#include "relfree/ratfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace relfree {

namespace {

void check_arity(const SparsePoly& a, const SparsePoly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("polynomial arity mismatch");
}

using Dense = std::vector<mpq_class>;

void dense_trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  dense_trim(a);
  return a;
}

// Remainder of a by b over the rationals; b must be nonzero.
Dense dense_rem(Dense a, const Dense& b) {
  dense_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    Dense sub(shift, mpq_class(0));
    for (const mpq_class& c : b) sub.push_back(c * f);
    a = dense_sub(std::move(a), sub);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  dense_trim(a);
  dense_trim(b);
  while (!b.empty()) {
    Dense r = dense_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  mpq_class lead = a.back();
  for (mpq_class& c : a) c /= lead;
  return a;
}

// Exact quotient; callers only divide by known divisors.
Dense dense_exact_div(Dense a, const Dense& b) {
  dense_trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    Dense sub(shift, mpq_class(0));
    for (const mpq_class& c : b) sub.push_back(c * f);
    a = dense_sub(std::move(a), sub);
  }
  if (!a.empty()) throw std::domain_error("polynomial division was not exact");
  dense_trim(q);
  return q;
}

}  // namespace

SparsePoly::SparsePoly(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("polynomial arity must be >= 1");
}

SparsePoly SparsePoly::constant(int arity, const mpq_class& c) {
  SparsePoly p(arity);
  p.add_term(std::vector<int>(arity, 0), c);
  return p;
}

SparsePoly SparsePoly::monomial(std::vector<int> expo, const mpq_class& c) {
  SparsePoly p(static_cast<int>(expo.size()));
  p.add_term(expo, c);
  return p;
}

mpq_class SparsePoly::coeff(const std::vector<int>& expo) const {
  auto it = terms_.find(expo);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void SparsePoly::add_term(const std::vector<int>& expo, const mpq_class& c) {
  if (static_cast<int>(expo.size()) != arity_)
    throw std::invalid_argument("exponent vector does not match polynomial arity");
  for (int e : expo)
    if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(expo, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_arity(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_arity(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  r += o;
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  r -= o;
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_arity(*this, o);
  SparsePoly r(arity_);
  std::vector<int> e(arity_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(arity_);
  for (const auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

std::optional<SparsePoly> SparsePoly::try_divide(const SparsePoly& f, const SparsePoly& d) {
  check_arity(f, d);
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  SparsePoly q(f.arity());
  SparsePoly rem = f;
  const auto& [ed, cd] = *d.terms_.rbegin();  // lex-leading term of the divisor
  std::vector<int> e(f.arity());
  while (!rem.is_zero()) {
    const auto& [er, cr] = *rem.terms_.rbegin();
    for (int i = 0; i < f.arity(); ++i) {
      e[i] = er[i] - ed[i];
      if (e[i] < 0) return std::nullopt;
    }
    SparsePoly t = SparsePoly::monomial(e, cr / cd);
    q += t;
    rem -= t * d;
  }
  return q;
}

SparsePoly SparsePoly::exact_divide(const SparsePoly& f, const SparsePoly& d) {
  auto q = try_divide(f, d);
  if (!q) throw std::domain_error("polynomial division was not exact");
  return *q;
}

void UnivariateRational::normalize() {
  dense_trim(num);
  dense_trim(den);
  if (den.empty()) throw std::domain_error("rational function with zero denominator");
  if (num.empty()) {
    den = {mpq_class(1)};
    return;
  }
  Dense g = dense_gcd(num, den);
  if (g.size() > 1) {
    num = dense_exact_div(std::move(num), g);
    den = dense_exact_div(std::move(den), g);
  }
  // joint integer scaling: lcm of all coefficient denominators over gcd of all
  // numerators, sign fixed by den(0) > 0
  mpz_class l(1), g2(0);
  for (const Dense* p : {&num, &den})
    for (const mpq_class& c : *p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  for (const Dense* p : {&num, &den})
    for (const mpq_class& c : *p) {
      mpz_class n = c.get_num() * l / c.get_den();
      mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), n.get_mpz_t());
    }
  mpq_class scale(l, g2);
  scale.canonicalize();
  if (den[0] * scale < 0) scale = -scale;
  for (mpq_class& c : num) c *= scale;
  for (mpq_class& c : den) c *= scale;
}

bool UnivariateRational::equals(const UnivariateRational& o) const {
  UnivariateRational a = *this, b = o;
  a.normalize();
  b.normalize();
  return a.num == b.num && a.den == b.den;
}

std::string dense_poly_to_string(const std::vector<mpq_class>& p, const std::string& var) {
  Dense q = p;
  dense_trim(q);
  if (q.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    mpq_class c = q[i];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::string UnivariateRational::to_string(const std::string& var) const {
  std::string n = dense_poly_to_string(num, var);
  Dense d = den;
  dense_trim(d);
  if (d.size() == 1 && d[0] == 1) return n;
  return "(" + n + ") / (" + dense_poly_to_string(den, var) + ")";
}

SeriesPrefix expand(const UnivariateRational& f, int order) {
  if (order < 0) throw std::invalid_argument("expansion order must be >= 0");
  Dense den = f.den;
  dense_trim(den);
  if (den.empty() || den[0] == 0)
    throw std::domain_error("cannot expand: denominator has zero constant term");
  SeriesPrefix c(static_cast<size_t>(order) + 1, mpq_class(0));
  for (int n = 0; n <= order; ++n) {
    mpq_class v = n < static_cast<int>(f.num.size()) ? f.num[n] : mpq_class(0);
    for (size_t k = 1; k < den.size() && k <= static_cast<size_t>(n); ++k)
      v -= den[k] * c[static_cast<size_t>(n) - k];
    c[n] = v / den[0];
  }
  return c;
}

RecurrenceFit berlekamp_massey(const SeriesPrefix& s) {
  Dense c = {mpq_class(1)}, b = {mpq_class(1)};
  int length = 0, m = 1;
  mpq_class bb(1);
  for (size_t n = 0; n < s.size(); ++n) {
    mpq_class delta = s[n];
    for (int i = 1; i <= length; ++i)
      if (i < static_cast<int>(c.size())) delta += c[i] * s[n - static_cast<size_t>(i)];
    if (delta == 0) {
      ++m;
      continue;
    }
    if (2 * length <= static_cast<int>(n)) {
      Dense t = c;
      mpq_class f = delta / bb;
      if (c.size() < b.size() + static_cast<size_t>(m)) c.resize(b.size() + static_cast<size_t>(m), mpq_class(0));
      for (size_t i = 0; i < b.size(); ++i) c[i + static_cast<size_t>(m)] -= f * b[i];
      length = static_cast<int>(n) + 1 - length;
      b = std::move(t);
      bb = delta;
      m = 1;
    } else {
      mpq_class f = delta / bb;
      if (c.size() < b.size() + static_cast<size_t>(m)) c.resize(b.size() + static_cast<size_t>(m), mpq_class(0));
      for (size_t i = 0; i < b.size(); ++i) c[i + static_cast<size_t>(m)] -= f * b[i];
      ++m;
    }
  }
  dense_trim(c);
  return RecurrenceFit{length, std::move(c)};
}

std::optional<UnivariateRational> rational_fit(const SeriesPrefix& c, int guard) {
  if (c.size() < 2) throw std::invalid_argument("rational_fit requires at least 2 coefficients");
  if (guard < 0) throw std::invalid_argument("guard must be >= 0");
  const int total = static_cast<int>(c.size());
  const int detect = total - guard;
  if (detect < 1) return std::nullopt;  // nothing left to detect on

  SeriesPrefix head(c.begin(), c.begin() + detect);
  RecurrenceFit rec = berlekamp_massey(head);
  if (2 * rec.length + guard > total) return std::nullopt;  // too few terms for this order

  // numerator: (connection * series) truncated below t^length
  Dense num(static_cast<size_t>(std::max(rec.length, 1)), mpq_class(0));
  for (int i = 0; i < rec.length; ++i) {
    mpq_class v(0);
    for (int j = 0; j <= i && j < static_cast<int>(rec.connection.size()); ++j)
      v += rec.connection[j] * c[static_cast<size_t>(i - j)];
    num[static_cast<size_t>(i)] = v;
  }
  dense_trim(num);

  UnivariateRational f{std::move(num), rec.connection};
  SeriesPrefix back = expand(f, total - 1);
  for (int i = 0; i < total; ++i)
    if (back[i] != c[i]) return std::nullopt;  // guard verification failed
  f.normalize();
  return f;
}

}  // namespace relfree
