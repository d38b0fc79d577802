#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relfree/product_sets.hpp"
#include "relfree/ratfun.hpp"

namespace relfree {

// Upward-closed subset of N^r, stored as the antichain of its minimal points.
struct UpwardSet {
  int dim = 0;
  std::vector<Multidegree> minimals;  // lex-sorted, pairwise incomparable

  bool contains(const Multidegree& a) const;
};

// One factor (1 - t^expo)^mult of a denominator.
struct DenomFactor {
  std::vector<int> expo;
  int mult = 1;

  bool operator==(const DenomFactor& o) const = default;
};

// Rational function with integer-coefficient sparse numerator and a product
// of (1 - t^v) factors as denominator.  The plain series denominators use
// unit vectors v = e_i; congruence-class series need general v.
class MultivariateRational {
 public:
  MultivariateRational() : MultivariateRational(1) {}
  explicit MultivariateRational(int arity);
  MultivariateRational(SparsePoly num, std::vector<DenomFactor> den);
  static MultivariateRational zero(int arity) { return MultivariateRational(arity); }

  int arity() const { return num_.arity(); }
  bool is_zero() const { return num_.is_zero(); }
  const SparsePoly& numerator() const { return num_; }
  const std::vector<DenomFactor>& denominator() const { return den_; }

  MultivariateRational operator+(const MultivariateRational& o) const;
  // Equality of the represented rational functions (cross-multiplied), not of
  // the stored representations; (1+t)/(1-t^2) equals 1/(1-t).
  bool operator==(const MultivariateRational& o) const;

 private:
  void reduce();

  SparsePoly num_;
  std::vector<DenomFactor> den_;
};

// Exact Taylor coefficients of f on the box [0,limits].  Coefficients of the
// series handled here are integers; a fractional coefficient is an error.
std::map<Multidegree, mpz_class> expand_box(const MultivariateRational& f, const Multidegree& limits);

// Substitutes t_i := t for all i.
MultivariateRational specialize_univariate(const MultivariateRational& f);

// Conversion for arity-1 functions; expands the denominator product.
UnivariateRational to_univariate(const MultivariateRational& f);

// 1/(1-t)^k, the series of binomial coefficients C(n+k-1, k-1).
MultivariateRational binomial_series(int k);

// Evidence record for a box computation: (a) the outer shell is stable in
// every maxed direction, (b) random points in the doubled box agree with the
// antichain prediction.
struct CertReport {
  int lambda = 0;
  int box = 0;
  int samples = 0;
  bool shell_stable = false;
  bool sampling_ok = false;

  bool certified() const { return shell_stable && sampling_ok; }
  std::string status() const { return certified() ? "certified-in-box" : "not-certified"; }
};

struct LevelSetResult {
  UpwardSet set;
  CertReport report;
};

// Minimal points of {A : |N(A)| >= lambda} found by scanning [0,box]^r.
LevelSetResult level_set_minimals(ProductSetCache& cache, int lambda, int box, std::uint64_t seed = 0,
                                  int samples = 200);

// Inclusion-exclusion generating function of an upward set over the full
// denominator prod_i (1 - t_i).
MultivariateRational upward_gf(const UpwardSet& u);

struct TotalGF {
  MultivariateRational gf;
  std::vector<CertReport> reports;  // one per level 1..|G'|

  bool certified() const;
  std::string status() const { return certified() ? "certified-in-box" : "not-certified"; }
};

// Total Hilbert series: sum over lambda of the level-set generating functions,
// so the coefficient at t^A is |N(A)|.
TotalGF hilbert_gf_total(ProductSetCache& cache, int box, std::uint64_t seed = 0, int samples = 200);

// Per-component series: coefficient at t^A is 1 exactly when g lies in N(A).
// Closed form = saturated part restricted to the congruence class of g plus a
// finite polynomial of unsaturated points, emitted when the box evidence
// supports it; otherwise exact univariate coefficients plus a fitted rational
// form, flagged "fitted".
struct ComponentGF {
  int component = 0;
  bool closed_form = false;
  MultivariateRational gf;               // valid when closed_form
  std::vector<Multidegree> remainder;    // unsaturated points inside the closed form
  bool remainder_bounded = false;        // no unsaturated point reached the box shell
  CertReport level_report;               // saturation level-set evidence
  std::string status;                    // "certified-in-box" or "fitted"
  std::vector<mpz_class> coefficients;   // univariate c_{g,n}, n = 0..terms (always filled)
  std::optional<UnivariateRational> fit; // fallback path only
};

ComponentGF hilbert_gf_component(ProductSetCache& cache, int g, int box, int terms, int guard = 5,
                                 std::uint64_t seed = 0, int samples = 200);

// Exact univariate coefficients through degree `terms` straight from the DP.
std::vector<mpz_class> component_series_prefix(ProductSetCache& cache, int g, int terms);
std::vector<mpz_class> total_series_prefix(ProductSetCache& cache, int terms);

}  // namespace relfree
