// Acceptance gate: nine end-to-end checks of the library's headline
// guarantees, each printed as one [PASS]/[FAIL] line with its runtime.
// The exit status is the number of failed checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "relfree/codimension.hpp"
#include "relfree/generic_algebra.hpp"
#include "relfree/group.hpp"
#include "relfree/lattice_gf.hpp"
#include "relfree/product_sets.hpp"
#include "relfree/ratfun.hpp"

using namespace relfree;

namespace {

int g_failures = 0;

void run_check(int index, const std::string& name, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "runtime limit exceeded";
  }
  char timing[64];
  if (limit_seconds > 0)
    std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, limit_seconds);
  else
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << name << " (" << timing << ")";
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

std::vector<Multidegree> multidegrees_up_to(int arity, int max_total) {
  std::vector<Multidegree> out;
  Multidegree a(arity, 0);
  while (true) {
    if (total_of(a) <= max_total) out.push_back(a);
    int i = arity - 1;
    while (i >= 0 && a[i] == max_total) {
      a[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

mpz_class int_pow(int base, int exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

MultivariateRational product_of_geometric_series(int arity) {
  std::vector<DenomFactor> den;
  for (int i = 0; i < arity; ++i) {
    std::vector<int> e(arity, 0);
    e[i] = 1;
    den.push_back({e, 1});
  }
  return MultivariateRational(SparsePoly::constant(arity, 1), std::move(den));
}

// Independent degree-2 oracle: multilinear monomials x_g x_h and x_h x_g are
// equivalent iff g and h commute, so c_2 counts ordered pairs modulo that.
long commuting_ordered_pairs(const FiniteGroup& g) {
  long n = 0;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.mult(a, b) == g.mult(b, a)) ++n;
  return n;
}

bool check_closed_form_vs_dp(std::string& detail) {
  const FiniteGroup s3 = make_group("S3");
  ProductSetCache cache(s3, {1, 4});
  const TotalGF total = hilbert_gf_total(cache, 12);
  if (total.status() != "certified-in-box") {
    detail = "status was " + total.status();
    return false;
  }
  const auto coeffs = expand_box(total.gf, {20, 20});
  for (const Multidegree& a : multidegrees_up_to(2, 20)) {
    const auto it = coeffs.find(a);
    const mpz_class got = it == coeffs.end() ? mpz_class(0) : it->second;
    if (got != cache.total_dimension(a)) {
      detail = "coefficient mismatch at (" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ")";
      return false;
    }
  }
  return true;
}

bool check_abelian_degeneration(std::string& detail) {
  struct Case {
    const char* spec;
    std::vector<int> tuple;
  };
  for (const Case& c : {Case{"C2", {0, 1}}, Case{"C6", {1, 2, 3}}, Case{"C2xC2", {1, 2, 3}}}) {
    const FiniteGroup g = make_group(c.spec);
    ProductSetCache cache(g, c.tuple);
    const TotalGF total = hilbert_gf_total(cache, 2 * g.order);
    if (!(total.gf == product_of_geometric_series(static_cast<int>(c.tuple.size())))) {
      detail = std::string(c.spec) + ": total series is not the product of geometric series";
      return false;
    }
    CodimComputer codims(g);
    for (int n = 1; n <= 12; ++n) {
      if (codims.record(n).value != int_pow(g.order, n)) {
        detail = std::string(c.spec) + ": c_" + std::to_string(n) + " != |G|^n";
        return false;
      }
    }
  }
  return true;
}

bool check_codimension_bounds(std::string& detail) {
  for (const char* spec : {"S3", "D4", "Q8"}) {
    const FiniteGroup g = make_group(spec);
    const int gprime = commutator_subgroup(g).order();
    CodimComputer codims(g);
    for (const CodimRecord& r : codims.table(10)) {
      const mpz_class lower = int_pow(g.order, r.n);
      const mpz_class upper = gprime * lower;
      if (r.lower != lower || r.upper != upper || r.value < lower || r.value > upper) {
        detail = std::string(spec) + ": bounds violated at n = " + std::to_string(r.n);
        return false;
      }
    }
  }
  const FiniteGroup s3 = make_group("S3");
  const mpz_class c2 = codim(s3, 2).value;
  const long oracle = 2L * s3.order * s3.order - commuting_ordered_pairs(s3);
  if (c2 != 54 || oracle != 54) {
    detail = "c_2(S3) spot check failed";
    return false;
  }
  return true;
}

bool check_ratio_trend(std::string& detail) {
  CodimComputer codims(make_group("S3"));
  const std::vector<CodimRecord> table = codims.table(10);
  for (int n = 2; n <= 10; ++n) {
    const mpq_class& prev = table[n - 2].ratio;  // table rows are n = 1..10
    const mpq_class& cur = table[n - 1].ratio;
    if (cur < prev) {
      detail = "ratio decreased at n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool check_rich_words(std::string& detail) {
  struct Case {
    const char* spec;
    std::vector<int> tuple;
  };
  for (const Case& c : {Case{"S3", {1, 4}}, Case{"D4", {1, 4}}, Case{"Q8", {2, 4}}}) {
    const FiniteGroup g = make_group(c.spec);
    const GradingTuple t = make_grading_tuple(g, c.tuple);
    ProductSetCache cache(g, c.tuple);
    const std::vector<int> abmap = abelianization_map(g);
    for (int z = 0; z < g.order; ++z) {
      std::vector<int> coset;
      for (int h = 0; h < g.order; ++h)
        if (abmap[h] == abmap[z]) coset.push_back(h);
      const std::vector<int> word = rich_word(t, z);
      const Multidegree a = word_multidegree(word, t.arity());
      if (cache.elements(a) != coset) {
        detail = std::string(c.spec) + ": word for target " + std::to_string(z) +
                 " does not reach the full coset";
        return false;
      }
    }
  }
  return true;
}

bool check_generic_ranks(std::string& detail) {
  struct Case {
    const char* spec;
    std::vector<int> tuple;
  };
  for (const Case& c : {Case{"C2", {0, 1}}, Case{"S3", {1, 4}}}) {
    const FiniteGroup g = make_group(c.spec);
    const GradedAlgebraSpec spec = group_algebra_spec(g);
    const GradingTuple t = make_grading_tuple(g, c.tuple);
    ProductSetCache cache(g, c.tuple);
    for (const Multidegree& a : multidegrees_up_to(t.arity(), 4)) {
      const RankResult total = component_dimension_generic(spec, t, a, std::nullopt, RankMode::exact);
      if (!total.exact || total.value != cache.total_dimension(a)) {
        detail = std::string(c.spec) + ": total rank mismatch";
        return false;
      }
      for (int z = 0; z < g.order; ++z) {
        const RankResult r = component_dimension_generic(spec, t, a, z, RankMode::exact);
        if (!r.exact || r.value != cache.component_dimension(a, z)) {
          detail = std::string(c.spec) + ": component rank mismatch at g = " + std::to_string(z);
          return false;
        }
      }
    }
  }
  return true;
}

bool check_twist_invariance(std::string& detail) {
  const FiniteGroup v4 = make_group("C2xC2");
  const Cocycle alpha = load_cocycle(v4, RELFREE_DATA_DIR "/c2xc2_sign_cocycle.txt");
  const GradedAlgebraSpec plain = group_algebra_spec(v4);
  const GradedAlgebraSpec twisted = group_algebra_spec(v4, &alpha);
  const GradingTuple t = make_grading_tuple(v4, {1, 2, 3});
  for (const Multidegree& a : multidegrees_up_to(3, 4)) {
    for (int z = 0; z < 4; ++z) {
      const RankResult p = component_dimension_generic(plain, t, a, z, RankMode::exact);
      const RankResult q = component_dimension_generic(twisted, t, a, z, RankMode::exact);
      if (p.value != q.value) {
        detail = "dimensions differ at component " + std::to_string(z);
        return false;
      }
    }
  }
  return true;
}

bool check_alternation_identities(std::string& detail) {
  const GradedAlgebraSpec s3 = group_algebra_spec(make_group("S3"));
  for (int g = 0; g < 6; ++g) {
    const MultilinearGradedPoly alt = alternate(multilinear_monomial({g, g}), {0, 1});
    if (!is_graded_identity(s3, alt)) {
      detail = "2-slot alternation not an identity at degree " + std::to_string(g);
      return false;
    }
  }
  const GradedAlgebraSpec blocks = load_algebra(RELFREE_DATA_DIR "/two_block_c2.json");
  if (blocks.dim != 4 || blocks.component_dim(0) != 2) {
    detail = "two-block algebra has the wrong shape";
    return false;
  }
  const MultilinearGradedPoly alt3 = alternate(multilinear_monomial({0, 0, 0}), {0, 1, 2});
  if (!is_graded_identity(blocks, alt3)) {
    detail = "3-slot even alternation not an identity";
    return false;
  }
  return true;
}

bool check_fitting_round_trip(std::string& detail) {
  for (int k = 1; k <= 5; ++k) {
    const auto coeffs = expand_box(binomial_series(k), {2 * k + 4});
    SeriesPrefix prefix;
    for (int n = 0; n <= 2 * k + 4; ++n) prefix.emplace_back(coeffs.at({n}));
    const std::optional<UnivariateRational> fit = rational_fit(prefix, 3);
    if (!fit) {
      detail = "no fit for 1/(1-t)^" + std::to_string(k);
      return false;
    }
    if (!fit->equals(to_univariate(binomial_series(k)))) {
      detail = "wrong fit for 1/(1-t)^" + std::to_string(k);
      return false;
    }
  }
  const FiniteGroup s3 = make_group("S3");
  ProductSetCache cache(s3, {1, 4});
  SeriesPrefix prefix;
  for (const mpz_class& c : total_series_prefix(cache, 30)) prefix.emplace_back(c);
  const std::optional<UnivariateRational> fit = rational_fit(prefix, 8);
  if (!fit) {
    detail = "no fit for the total series";
    return false;
  }
  const TotalGF total = hilbert_gf_total(cache, 12);
  if (!fit->equals(to_univariate(specialize_univariate(total.gf)))) {
    detail = "fit disagrees with the specialized closed form";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  run_check(1, "closed form matches the dynamic program (S3, box 12, |A| <= 20)", 30,
            check_closed_form_vs_dp);
  run_check(2, "abelian series collapse to products of geometric series; c_n = |G|^n", 0,
            check_abelian_degeneration);
  run_check(3, "codimension bounds |G|^n <= c_n <= |G'| |G|^n for S3, D4, Q8", 60,
            check_codimension_bounds);
  run_check(4, "codimension ratios c_n / (3 * 6^n) are nondecreasing for S3", 0, check_ratio_trend);
  run_check(5, "rich words reach the full coset for S3, D4, Q8", 10, check_rich_words);
  run_check(6, "generic-element ranks equal combinatorial dimensions (C2, S3, |A| <= 4)", 60,
            check_generic_ranks);
  run_check(7, "sign-cocycle twist preserves all component dimensions (C2xC2, |A| <= 4)", 0,
            check_twist_invariance);
  run_check(8, "alternating on dim + 1 same-degree slots yields graded identities", 0,
            check_alternation_identities);
  run_check(9, "rational fitting recovers 1/(1-t)^k and the S3 closed form", 0,
            check_fitting_round_trip);
  if (g_failures == 0)
    std::cout << "all acceptance checks passed" << std::endl;
  else
    std::cout << g_failures << " acceptance check(s) failed" << std::endl;
  return g_failures;
}
