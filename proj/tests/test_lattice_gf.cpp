#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "relfree/lattice_gf.hpp"
#include "relfree/product_sets.hpp"
#include "test_util.hpp"

using namespace relfree;

namespace {

SparsePoly mono2(int e1, int e2, int c = 1) { return SparsePoly::monomial({e1, e2}, c); }

// 1/((1-t1)(1-t2)) in arity 2.
std::vector<DenomFactor> full_den2() { return {DenomFactor{{1, 0}, 1}, DenomFactor{{0, 1}, 1}}; }

// Minimal antichain of a random point set: drop every dominated point.
UpwardSet antichain_of(int dim, std::vector<Multidegree> pts) {
  std::vector<Multidegree> mins;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts)
      if (q != p && multidegree_leq(q, p)) {
        dominated = true;
        break;
      }
    // Keep exact duplicates once.
    if (!dominated && std::find(mins.begin(), mins.end(), p) == mins.end()) mins.push_back(p);
  }
  std::sort(mins.begin(), mins.end());
  UpwardSet u;
  u.dim = dim;
  u.minimals = std::move(mins);
  return u;
}

std::vector<Multidegree> box_points(const Multidegree& limits) {
  std::vector<Multidegree> out;
  Multidegree a(limits.size(), 0);
  while (true) {
    out.push_back(a);
    int i = static_cast<int>(a.size()) - 1;
    while (i >= 0 && a[i] == limits[i]) {
      a[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

}  // namespace

TEST_SUITE("lattice-gf") {
  TEST_CASE("upward set membership") {
    UpwardSet u;
    u.dim = 2;
    u.minimals = {{0, 2}, {1, 1}};
    CHECK(u.contains({0, 2}));
    CHECK(u.contains({1, 1}));
    CHECK(u.contains({5, 5}));
    CHECK(u.contains({1, 2}));
    CHECK_FALSE(u.contains({0, 0}));
    CHECK_FALSE(u.contains({1, 0}));
    CHECK_FALSE(u.contains({0, 1}));
    CHECK_FALSE(u.contains({5, 0}));
  }

  TEST_CASE("rational function construction rejects bad factors") {
    CHECK_THROWS_AS(MultivariateRational(mono2(0, 0), {DenomFactor{{1}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(MultivariateRational(mono2(0, 0), {DenomFactor{{1, 0}, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(MultivariateRational(mono2(0, 0), {DenomFactor{{-1, 0}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(MultivariateRational(mono2(0, 0), {DenomFactor{{0, 0}, 1}}), std::invalid_argument);
  }

  TEST_CASE("equality is equality of functions, not representations") {
    // (1+t)/(1-t^2) == 1/(1-t) in one variable.
    MultivariateRational lhs(SparsePoly::constant(1, 1) + SparsePoly::monomial({1}, 1),
                             {DenomFactor{{2}, 1}});
    MultivariateRational rhs(SparsePoly::constant(1, 1), {DenomFactor{{1}, 1}});
    CHECK(lhs == rhs);
    CHECK_FALSE(lhs == binomial_series(2));

    // A numerator divisible by a factor reduces away.
    MultivariateRational reduced(SparsePoly::constant(1, 1) - SparsePoly::monomial({1}, 1),
                                 {DenomFactor{{1}, 2}});
    CHECK(reduced == rhs);
    CHECK(reduced.denominator().size() == 1);
    CHECK(reduced.denominator()[0].mult == 1);

    // Zero is zero no matter the denominator.
    CHECK(MultivariateRational::zero(2) == MultivariateRational(SparsePoly(2), full_den2()));
  }

  TEST_CASE("duplicate denominator factors merge") {
    MultivariateRational f(mono2(1, 1), {DenomFactor{{1, 0}, 1}, DenomFactor{{1, 0}, 2}});
    REQUIRE(f.denominator().size() == 1);
    CHECK(f.denominator()[0].mult == 3);
  }

  TEST_CASE("box expansion of product denominators") {
    MultivariateRational f(mono2(0, 0), full_den2());
    const auto coeffs = expand_box(f, {3, 3});
    for (const auto& a : box_points({3, 3})) CHECK(coeffs.at(a) == 1);

    // Numerator terms outside the box do not contribute.
    MultivariateRational g(mono2(0, 0) + mono2(9, 9), full_den2());
    const auto inner = expand_box(g, {2, 2});
    for (const auto& a : box_points({2, 2})) CHECK(inner.at(a) == 1);
  }

  TEST_CASE("binomial coefficient series") {
    const auto c3 = expand_box(binomial_series(3), {6});
    const std::vector<int> expected{1, 3, 6, 10, 15, 21, 28};
    for (int n = 0; n <= 6; ++n) CHECK(c3.at({n}) == expected[n]);

    const auto c1 = expand_box(binomial_series(1), {5});
    for (int n = 0; n <= 5; ++n) CHECK(c1.at({n}) == 1);

    CHECK(expand_box(binomial_series(0), {2}).at({0}) == 1);
    CHECK(expand_box(binomial_series(0), {2}).at({2}) == 0);
    CHECK_THROWS_AS(binomial_series(-1), std::invalid_argument);
  }

  TEST_CASE("box expansion demands integer coefficients") {
    MultivariateRational f(SparsePoly::constant(1, mpq_class(1, 2)), {DenomFactor{{1}, 1}});
    CHECK_THROWS_AS(expand_box(f, {3}), std::domain_error);
  }

  TEST_CASE("addition matches coefficientwise sums") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> e(0, 2);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      SparsePoly pa(2), pb(2);
      for (int k = 0; k < 3; ++k) {
        pa.add_term({e(rng), e(rng)}, c(rng));
        pb.add_term({e(rng), e(rng)}, c(rng));
      }
      if (pa.is_zero()) pa = mono2(0, 0);
      if (pb.is_zero()) pb = mono2(0, 0);
      MultivariateRational a(pa, full_den2());
      MultivariateRational b(pb, {DenomFactor{{0, 1}, 1}});
      const MultivariateRational s = a + b;
      const auto ca = expand_box(a, {5, 5});
      const auto cb = expand_box(b, {5, 5});
      const auto cs = expand_box(s, {5, 5});
      for (const auto& p : box_points({5, 5})) CHECK(cs.at(p) == ca.at(p) + cb.at(p));
    }
  }

  TEST_CASE("specialization and univariate conversion") {
    MultivariateRational f(mono2(1, 1), full_den2());
    const MultivariateRational uni = specialize_univariate(f);
    REQUIRE(uni.arity() == 1);
    UnivariateRational u = to_univariate(uni);
    CHECK(u.equals(UnivariateRational{{0, 0, 1}, {1, -2, 1}}));
    const SeriesPrefix s = expand(u, 5);
    CHECK(s == SeriesPrefix{0, 0, 1, 2, 3, 4});
    CHECK_THROWS_AS(to_univariate(f), std::invalid_argument);
  }

  TEST_CASE("inclusion-exclusion generating function of a frozen antichain") {
    UpwardSet u;
    u.dim = 2;
    u.minimals = {{0, 2}, {1, 1}, {2, 0}};
    const MultivariateRational f = upward_gf(u);
    const std::map<std::vector<int>, mpq_class> expected{
        {{0, 2}, 1}, {{1, 1}, 1}, {{2, 0}, 1}, {{1, 2}, -1}, {{2, 1}, -1}};
    CHECK(f.numerator().terms() == expected);
    REQUIRE(f.denominator().size() == 2);
    // Coefficients are the indicator of the upward set.
    const auto coeffs = expand_box(f, {6, 6});
    for (const auto& a : box_points({6, 6})) CHECK(coeffs.at(a) == (u.contains(a) ? 1 : 0));
  }

  TEST_CASE("upward generating functions are 0/1 on random antichains") {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<int> coord(0, 4);
    for (int trial = 0; trial < 12; ++trial) {
      const int dim = (trial % 2) ? 3 : 2;
      std::vector<Multidegree> pts;
      for (int k = 0; k < 4; ++k) {
        Multidegree p(dim);
        for (int& v : p) v = coord(rng);
        pts.push_back(std::move(p));
      }
      const UpwardSet u = antichain_of(dim, pts);
      const MultivariateRational f = upward_gf(u);
      const Multidegree limits(dim, 6);
      const auto coeffs = expand_box(f, limits);
      for (const auto& a : box_points(limits)) CHECK(coeffs.at(a) == (u.contains(a) ? 1 : 0));
    }
  }

  TEST_CASE("empty and full upward sets") {
    UpwardSet empty;
    empty.dim = 2;
    CHECK(upward_gf(empty).is_zero());
    CHECK_FALSE(empty.contains({0, 0}));

    UpwardSet full;
    full.dim = 2;
    full.minimals = {{0, 0}};
    const auto coeffs = expand_box(upward_gf(full), {4, 4});
    for (const auto& a : box_points({4, 4})) CHECK(coeffs.at(a) == 1);
  }

  TEST_CASE("level sets of the two-generator S3 case") {
    const FiniteGroup s3 = make_group("S3");
    ProductSetCache cache(s3, {1, 4});

    const LevelSetResult l1 = level_set_minimals(cache, 1, 12);
    CHECK(l1.set.minimals == std::vector<Multidegree>{{0, 0}});
    CHECK(l1.report.certified());

    const LevelSetResult l2 = level_set_minimals(cache, 2, 12);
    CHECK(l2.set.minimals == std::vector<Multidegree>{{1, 1}});
    CHECK(l2.report.certified());
    CHECK(l2.report.status() == "certified-in-box");

    const LevelSetResult l3 = level_set_minimals(cache, 3, 12);
    CHECK(l3.set.minimals == std::vector<Multidegree>{{1, 2}});
    CHECK(l3.report.certified());

    // Minimality predicate: each minimal point meets the level and each of
    // its predecessors does not.
    for (const LevelSetResult* r : {&l1, &l2, &l3}) {
      const int lambda = r->report.lambda;
      for (const Multidegree& m : r->set.minimals) {
        CHECK(cache.total_dimension(m) >= lambda);
        for (size_t i = 0; i < m.size(); ++i) {
          if (m[i] == 0) continue;
          Multidegree prev = m;
          --prev[i];
          CHECK(cache.total_dimension(prev) < lambda);
        }
      }
    }
  }

  TEST_CASE("certification fails honestly on a too-small box") {
    const FiniteGroup s3 = make_group("S3");
    ProductSetCache cache(s3, {1, 4});
    // In the box [0,2]^2 the level-3 minimal (1,2) touches the shell and is
    // not stable there.
    const TotalGF total = hilbert_gf_total(cache, 2);
    CHECK_FALSE(total.certified());
    CHECK(total.status() == "not-certified");
  }

  TEST_CASE("total series of the two-generator S3 case") {
    const FiniteGroup s3 = make_group("S3");
    ProductSetCache cache(s3, {1, 4});
    const TotalGF total = hilbert_gf_total(cache, 12);
    CHECK(total.certified());
    CHECK(total.status() == "certified-in-box");
    CHECK(total.reports.size() == 3);

    // Frozen closed form (1 + t1 t2 + t1 t2^2) / ((1-t1)(1-t2)).
    MultivariateRational expected(mono2(0, 0) + mono2(1, 1) + mono2(1, 2), full_den2());
    CHECK(total.gf == expected);

    // Coefficients agree with the dynamic program across the box.
    const auto coeffs = expand_box(total.gf, {8, 8});
    for (const auto& a : box_points({8, 8})) CHECK(coeffs.at(a) == cache.total_dimension(a));

    // Univariate prefix.
    const auto prefix = total_series_prefix(cache, 8);
    const std::vector<int> frozen{1, 2, 4, 7, 10, 13, 16, 19, 22};
    REQUIRE(prefix.size() == frozen.size());
    for (size_t i = 0; i < frozen.size(); ++i) CHECK(prefix[i] == frozen[i]);
  }

  TEST_CASE("abelian total series is the full product") {
    const FiniteGroup v4 = make_group("C2xC2");
    ProductSetCache cache(v4, {1, 2, 3});
    const TotalGF total = hilbert_gf_total(cache, 8);
    CHECK(total.certified());
    MultivariateRational expected(SparsePoly::constant(3, 1),
                                  {DenomFactor{{1, 0, 0}, 1}, DenomFactor{{0, 1, 0}, 1},
                                   DenomFactor{{0, 0, 1}, 1}});
    CHECK(total.gf == expected);
  }

  TEST_CASE("component series sum to the total") {
    for (const char* spec : {"S3", "Q8"}) {
      const FiniteGroup g = make_group(spec);
      ProductSetCache cache(g, {1, g.order - 2});
      const auto total = total_series_prefix(cache, 10);
      std::vector<mpz_class> sum(11, 0);
      for (int z = 0; z < g.order; ++z) {
        const auto comp = component_series_prefix(cache, z, 10);
        for (int n = 0; n <= 10; ++n) sum[n] += comp[n];
      }
      CHECK(sum == total);
    }
  }

  TEST_CASE("component closed forms in the abelian case") {
    const FiniteGroup c2 = make_group("C2");
    ProductSetCache cache(c2, {0, 1});

    const ComponentGF even = hilbert_gf_component(cache, 0, 4, 10);
    CHECK(even.closed_form);
    CHECK(even.status == "certified-in-box");
    CHECK(even.remainder.empty());
    MultivariateRational expected_even(mono2(0, 0), {DenomFactor{{1, 0}, 1}, DenomFactor{{0, 2}, 1}});
    CHECK(even.gf == expected_even);
    const std::vector<int> even_series{1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6};
    REQUIRE(even.coefficients.size() == 11);
    for (int n = 0; n <= 10; ++n) CHECK(even.coefficients[n] == even_series[n]);

    const ComponentGF odd = hilbert_gf_component(cache, 1, 4, 10);
    CHECK(odd.closed_form);
    MultivariateRational expected_odd(mono2(0, 1), {DenomFactor{{1, 0}, 1}, DenomFactor{{0, 2}, 1}});
    CHECK(odd.gf == expected_odd);
    const std::vector<int> odd_series{0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5};
    for (int n = 0; n <= 10; ++n) CHECK(odd.coefficients[n] == odd_series[n]);
  }

  TEST_CASE("a nonabelian component with a certified closed form") {
    // In the two-generator Q8 case the k-component's congruence class misses
    // every unsaturated point, so the class series is exact.
    const FiniteGroup q8 = make_group("Q8");
    ProductSetCache cache(q8, {2, 4});
    const ComponentGF k = hilbert_gf_component(cache, 6, 16, 12);
    CHECK(k.closed_form);
    CHECK(k.status == "certified-in-box");
    CHECK(k.remainder.empty());
    MultivariateRational expected(mono2(1, 1), {DenomFactor{{0, 2}, 1}, DenomFactor{{2, 0}, 1}});
    CHECK(k.gf == expected);
    // c_n = #{a1 + a2 = n, both odd}.
    const std::vector<int> series{0, 0, 1, 0, 2, 0, 3, 0, 4, 0, 5, 0, 6};
    REQUIRE(k.coefficients.size() == 13);
    for (int n = 0; n <= 12; ++n) CHECK(k.coefficients[n] == series[n]);
    // The closed form's coefficients match the dynamic program pointwise.
    const auto coeffs = expand_box(k.gf, {7, 7});
    for (const auto& a : box_points({7, 7}))
      CHECK(coeffs.at(a) == cache.component_dimension(a, 6));
  }

  TEST_CASE("the identity component of the S3 case falls back to fitting") {
    const FiniteGroup s3 = make_group("S3");
    ProductSetCache cache(s3, {1, 4});
    const ComponentGF e = hilbert_gf_component(cache, 0, 12, 30, 8);
    CHECK_FALSE(e.closed_form);
    CHECK(e.status == "fitted");
    const std::vector<int> frozen{1, 0, 1, 1, 2, 1, 4, 2, 4, 4, 5};
    REQUIRE(e.coefficients.size() == 31);
    for (int n = 0; n <= 10; ++n) CHECK(e.coefficients[n] == frozen[n]);
    // Coefficients come straight from the dynamic program.
    const auto direct = component_series_prefix(cache, 0, 30);
    CHECK(e.coefficients == direct);
    // The fitted form reproduces every provided coefficient.
    REQUIRE(e.fit.has_value());
    const SeriesPrefix back = expand(*e.fit, 30);
    for (int n = 0; n <= 30; ++n) CHECK(back[n] == e.coefficients[n]);
  }

  TEST_CASE("component requests validate the element index") {
    const FiniteGroup s3 = make_group("S3");
    ProductSetCache cache(s3, {1, 4});
    CHECK_THROWS_AS(hilbert_gf_component(cache, 7, 8, 10), std::out_of_range);
  }
}
