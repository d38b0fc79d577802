#include "relfree/lattice_gf.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>

namespace relfree {

namespace {

// Lexicographic successor inside [0,limits]; false once the box is exhausted.
// Lex order coincides with row-major flat order, which expand_box relies on.
bool next_point(Multidegree& a, const Multidegree& limits) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] < limits[i]) {
      ++a[i];
      return true;
    }
    a[i] = 0;
  }
  return false;
}

SparsePoly one_minus_monomial(int arity, const std::vector<int>& expo) {
  return SparsePoly::constant(arity, 1) - SparsePoly::monomial(expo, 1);
}

SparsePoly expand_denominator(int arity, const std::vector<DenomFactor>& den) {
  SparsePoly p = SparsePoly::constant(arity, 1);
  for (const auto& f : den) {
    SparsePoly d = one_minus_monomial(arity, f.expo);
    for (int k = 0; k < f.mult; ++k) p = p * d;
  }
  return p;
}

}  // namespace

bool UpwardSet::contains(const Multidegree& a) const {
  for (const auto& m : minimals)
    if (multidegree_leq(m, a)) return true;
  return false;
}

MultivariateRational::MultivariateRational(int arity) : num_(arity) {}

MultivariateRational::MultivariateRational(SparsePoly num, std::vector<DenomFactor> den)
    : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& f : den_) {
    if (static_cast<int>(f.expo.size()) != num_.arity())
      throw std::invalid_argument("denominator factor arity mismatch");
    if (f.mult <= 0) throw std::invalid_argument("denominator factor multiplicity must be positive");
    bool all_zero = true;
    for (int e : f.expo) {
      if (e < 0) throw std::invalid_argument("denominator factor exponent must be nonnegative");
      if (e > 0) all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("denominator factor 1 - t^0 vanishes");
  }
  reduce();
}

void MultivariateRational::reduce() {
  std::map<std::vector<int>, int> mults;
  for (const auto& f : den_) mults[f.expo] += f.mult;
  den_.clear();
  if (num_.is_zero()) return;
  for (auto& [expo, m] : mults) {
    SparsePoly d = one_minus_monomial(num_.arity(), expo);
    while (m > 0) {
      auto q = SparsePoly::try_divide(num_, d);
      if (!q) break;
      num_ = std::move(*q);
      --m;
    }
    if (m > 0) den_.push_back({expo, m});
  }
}

MultivariateRational MultivariateRational::operator+(const MultivariateRational& o) const {
  if (arity() != o.arity()) throw std::invalid_argument("rational function arity mismatch");
  std::map<std::vector<int>, int> common;
  for (const auto& f : den_) common[f.expo] = f.mult;
  for (const auto& f : o.den_) {
    int& m = common[f.expo];
    m = std::max(m, f.mult);
  }
  auto complement = [&](const std::vector<DenomFactor>& den) {
    SparsePoly p = SparsePoly::constant(arity(), 1);
    for (const auto& [expo, m] : common) {
      int have = 0;
      for (const auto& f : den)
        if (f.expo == expo) have = f.mult;
      SparsePoly d = one_minus_monomial(arity(), expo);
      for (int k = have; k < m; ++k) p = p * d;
    }
    return p;
  };
  SparsePoly num = num_ * complement(den_) + o.num_ * complement(o.den_);
  std::vector<DenomFactor> den;
  for (const auto& [expo, m] : common) den.push_back({expo, m});
  return MultivariateRational(std::move(num), std::move(den));
}

bool MultivariateRational::operator==(const MultivariateRational& o) const {
  if (arity() != o.arity()) return false;
  return num_ * expand_denominator(arity(), o.den_) == o.num_ * expand_denominator(arity(), den_);
}

std::map<Multidegree, mpz_class> expand_box(const MultivariateRational& f, const Multidegree& limits) {
  const int r = f.arity();
  if (static_cast<int>(limits.size()) != r) throw std::invalid_argument("expand_box: limits arity mismatch");
  unsigned long long total = 1;
  for (int b : limits) {
    if (b < 0) throw std::invalid_argument("expand_box: negative limit");
    total *= static_cast<unsigned long long>(b) + 1;
    if (total > 50'000'000ULL) throw std::invalid_argument("expand_box: box too large");
  }
  std::vector<long long> stride(r, 1);
  for (int i = r - 2; i >= 0; --i) stride[i] = stride[i + 1] * (limits[i + 1] + 1);

  std::vector<mpq_class> c(total, mpq_class(0));
  // Numerator terms outside the box only feed coefficients outside the box:
  // the denominator series has nonnegative exponents.
  for (const auto& [expo, q] : f.numerator().terms()) {
    if (!multidegree_leq(expo, limits)) continue;
    long long idx = 0;
    for (int i = 0; i < r; ++i) idx += expo[i] * stride[i];
    c[idx] += q;
  }
  // Multiplying by 1/(1 - t^v) is an in-place prefix sum c[A] += c[A-v],
  // valid in lex order because A-v always precedes A.
  for (const auto& fac : f.denominator()) {
    long long off = 0;
    for (int i = 0; i < r; ++i) off += static_cast<long long>(fac.expo[i]) * stride[i];
    for (int rep = 0; rep < fac.mult; ++rep) {
      Multidegree a(r, 0);
      long long idx = 0;
      while (true) {
        if (multidegree_leq(fac.expo, a)) c[idx] += c[idx - off];
        ++idx;
        if (!next_point(a, limits)) break;
      }
    }
  }

  std::map<Multidegree, mpz_class> out;
  Multidegree a(r, 0);
  long long idx = 0;
  while (true) {
    const mpq_class& q = c[idx];
    if (q.get_den() != 1) throw std::domain_error("expand_box: non-integer series coefficient");
    out.emplace(a, q.get_num());
    ++idx;
    if (!next_point(a, limits)) break;
  }
  return out;
}

MultivariateRational specialize_univariate(const MultivariateRational& f) {
  SparsePoly num(1);
  for (const auto& [expo, q] : f.numerator().terms()) num.add_term({total_of(expo)}, q);
  std::vector<DenomFactor> den;
  for (const auto& fac : f.denominator()) den.push_back({{total_of(fac.expo)}, fac.mult});
  return MultivariateRational(std::move(num), std::move(den));
}

UnivariateRational to_univariate(const MultivariateRational& f) {
  if (f.arity() != 1) throw std::invalid_argument("to_univariate requires an arity-1 function");
  std::vector<mpq_class> num;
  for (const auto& [expo, q] : f.numerator().terms()) {
    if (static_cast<int>(num.size()) <= expo[0]) num.resize(expo[0] + 1, mpq_class(0));
    num[expo[0]] = q;
  }
  if (num.empty()) num.assign(1, mpq_class(0));
  std::vector<mpq_class> den{mpq_class(1)};
  for (const auto& fac : f.denominator()) {
    std::vector<mpq_class> d(fac.expo[0] + 1, mpq_class(0));
    d[0] = 1;
    d[fac.expo[0]] = -1;
    for (int k = 0; k < fac.mult; ++k) {
      std::vector<mpq_class> prod(den.size() + d.size() - 1, mpq_class(0));
      for (std::size_t i = 0; i < den.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) prod[i + j] += den[i] * d[j];
      den = std::move(prod);
    }
  }
  UnivariateRational u{std::move(num), std::move(den)};
  u.normalize();
  return u;
}

MultivariateRational binomial_series(int k) {
  if (k < 0) throw std::invalid_argument("binomial_series: negative exponent");
  SparsePoly num = SparsePoly::constant(1, 1);
  std::vector<DenomFactor> den;
  if (k > 0) den.push_back({{1}, k});
  return MultivariateRational(std::move(num), std::move(den));
}

LevelSetResult level_set_minimals(ProductSetCache& cache, int lambda, int box, std::uint64_t seed,
                                  int samples) {
  if (box < 0) throw std::invalid_argument("level_set_minimals: negative box bound");
  if (samples < 0) throw std::invalid_argument("level_set_minimals: negative sample count");
  const int r = cache.arity();
  const Multidegree limits(r, box);

  auto member = [&](const Multidegree& a) {
    return static_cast<int>(cache.elements(a).size()) >= lambda;
  };

  UpwardSet u;
  u.dim = r;
  Multidegree a(r, 0);
  while (true) {
    if (member(a)) {
      bool minimal = true;
      for (int i = 0; i < r && minimal; ++i) {
        if (a[i] == 0) continue;
        --a[i];
        if (member(a)) minimal = false;
        ++a[i];
      }
      if (minimal) u.minimals.push_back(a);
    }
    if (!next_point(a, limits)) break;
  }

  CertReport rep;
  rep.lambda = lambda;
  rep.box = box;
  rep.samples = samples;

  // (a) |N| has stopped growing along every maxed direction of the shell.
  rep.shell_stable = box > 0;
  a.assign(r, 0);
  while (rep.shell_stable) {
    bool on_shell = false;
    for (int i = 0; i < r; ++i) on_shell = on_shell || a[i] == box;
    if (on_shell) {
      const int n = static_cast<int>(cache.elements(a).size());
      for (int i = 0; i < r && rep.shell_stable; ++i) {
        if (a[i] != box) continue;
        --a[i];
        if (static_cast<int>(cache.elements(a).size()) != n) rep.shell_stable = false;
        ++a[i];
      }
    }
    if (!next_point(a, limits)) break;
  }

  // (b) antichain prediction matches the DP on random points of the doubled box.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, 2 * box);
  rep.sampling_ok = true;
  for (int k = 0; k < samples && rep.sampling_ok; ++k) {
    Multidegree p(r);
    for (int i = 0; i < r; ++i) p[i] = coord(rng);
    if (u.contains(p) != member(p)) rep.sampling_ok = false;
  }

  return {std::move(u), rep};
}

MultivariateRational upward_gf(const UpwardSet& u) {
  if (u.dim <= 0) throw std::invalid_argument("upward_gf: dimension must be positive");
  const int r = u.dim;
  SparsePoly num(r);
  const auto& ms = u.minimals;

  // Inclusion-exclusion over nonempty subsets of minimals by smallest unused
  // index.  Once a candidate lies below the running join, every remaining
  // extension pairs off against its sibling with that candidate toggled and
  // the tail telescopes to a single -sign * t^J term.
  std::function<void(std::size_t, const Multidegree&, int)> rec =
      [&](std::size_t idx, const Multidegree& join, int sign) {
        num.add_term(join, sign);
        for (std::size_t k = idx; k < ms.size(); ++k) {
          if (multidegree_leq(ms[k], join)) {
            num.add_term(join, -sign);
            break;
          }
          rec(k + 1, multidegree_join(join, ms[k]), -sign);
        }
      };
  for (std::size_t k = 0; k < ms.size(); ++k) rec(k + 1, ms[k], 1);

  if (num.is_zero()) return MultivariateRational::zero(r);
  std::vector<DenomFactor> den;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    den.push_back({std::move(e), 1});
  }
  return MultivariateRational(std::move(num), std::move(den));
}

bool TotalGF::certified() const {
  if (reports.empty()) return false;
  return std::all_of(reports.begin(), reports.end(), [](const CertReport& r) { return r.certified(); });
}

TotalGF hilbert_gf_total(ProductSetCache& cache, int box, std::uint64_t seed, int samples) {
  TotalGF out{MultivariateRational::zero(cache.arity()), {}};
  for (int lambda = 1; lambda <= cache.commutator_order(); ++lambda) {
    auto level = level_set_minimals(cache, lambda, box, seed + static_cast<std::uint64_t>(lambda), samples);
    out.gf = out.gf + upward_gf(level.set);
    out.reports.push_back(level.report);
  }
  return out;
}

namespace {

// Congruence data of a grading tuple: the quotient G/G', the coset of each
// slot, and the coset order q_i, so the class of A depends on A_i mod q_i only.
struct ClassData {
  Abelianization ab;
  std::vector<int> slot_label;
  std::vector<int> q;

  int class_of(const Multidegree& a) const {
    int c = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (int k = 0; k < a[i] % q[i]; ++k) c = ab.mult(c, slot_label[i]);
    }
    return c;
  }
};

ClassData make_class_data(ProductSetCache& cache) {
  ClassData cd;
  cd.ab = abelianization(cache.group());
  for (int g : cache.degrees()) {
    const int label = cd.ab.label_of[g];
    cd.slot_label.push_back(label);
    cd.q.push_back(cd.ab.label_order(label));
  }
  return cd;
}

// Numerator N_c of the class series N_c(t) / prod_i (1 - t_i^{q_i}), collected
// over the fundamental box prod_i [0, q_i).
std::map<int, SparsePoly> class_numerators(const ClassData& cd) {
  const int r = static_cast<int>(cd.q.size());
  std::map<int, SparsePoly> out;
  for (int label : cd.ab.labels) out.emplace(label, SparsePoly(r));
  Multidegree limits(r);
  for (int i = 0; i < r; ++i) limits[i] = cd.q[i] - 1;
  Multidegree a(r, 0);
  while (true) {
    out.at(cd.class_of(a)).add_term(a, 1);
    if (!next_point(a, limits)) break;
  }
  return out;
}

// Numerator of sum over A in U with class(A) = c of t^A, over the same
// denominator: the upward_gf recursion with each subset term t^J replaced by
// t^J * N_{c - class(J)}.  The prune survives because equal joins carry equal
// class shifts.
SparsePoly class_upward_numerator(const UpwardSet& u, const ClassData& cd,
                                  const std::map<int, SparsePoly>& nums, int c) {
  SparsePoly acc(u.dim);
  const auto& ms = u.minimals;
  auto add = [&](const Multidegree& join, int sign) {
    const int shifted = cd.ab.mult(c, cd.ab.inverse(cd.class_of(join)));
    acc += SparsePoly::monomial(join, sign) * nums.at(shifted);
  };
  std::function<void(std::size_t, const Multidegree&, int)> rec =
      [&](std::size_t idx, const Multidegree& join, int sign) {
        add(join, sign);
        for (std::size_t k = idx; k < ms.size(); ++k) {
          if (multidegree_leq(ms[k], join)) {
            add(join, -sign);
            break;
          }
          rec(k + 1, multidegree_join(join, ms[k]), -sign);
        }
      };
  for (std::size_t k = 0; k < ms.size(); ++k) rec(k + 1, ms[k], 1);
  return acc;
}

}  // namespace

std::vector<mpz_class> component_series_prefix(ProductSetCache& cache, int g, int terms) {
  cache.group().check_index(g);
  if (terms < 0) throw std::invalid_argument("component_series_prefix: negative order");
  const int r = cache.arity();
  std::vector<mpz_class> out(terms + 1, mpz_class(0));
  Multidegree a(r, 0);
  std::function<void(int, int)> go = [&](int i, int remaining) {
    if (i == r) {
      const auto& els = cache.elements(a);
      if (std::binary_search(els.begin(), els.end(), g)) out[terms - remaining] += 1;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      a[i] = v;
      go(i + 1, remaining - v);
    }
    a[i] = 0;
  };
  go(0, terms);
  return out;
}

std::vector<mpz_class> total_series_prefix(ProductSetCache& cache, int terms) {
  if (terms < 0) throw std::invalid_argument("total_series_prefix: negative order");
  const int r = cache.arity();
  std::vector<mpz_class> out(terms + 1, mpz_class(0));
  Multidegree a(r, 0);
  std::function<void(int, int)> go = [&](int i, int remaining) {
    if (i == r) {
      out[terms - remaining] += static_cast<long>(cache.elements(a).size());
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      a[i] = v;
      go(i + 1, remaining - v);
    }
    a[i] = 0;
  };
  go(0, terms);
  return out;
}

ComponentGF hilbert_gf_component(ProductSetCache& cache, int g, int box, int terms, int guard,
                                 std::uint64_t seed, int samples) {
  cache.group().check_index(g);
  const int r = cache.arity();
  ComponentGF out;
  out.component = g;
  out.gf = MultivariateRational::zero(r);
  out.coefficients = component_series_prefix(cache, g, terms);

  auto level = level_set_minimals(cache, cache.commutator_order(), box, seed, samples);
  out.level_report = level.report;

  const ClassData cd = make_class_data(cache);
  const int c = cd.ab.label_of[g];

  // Unsaturated points carrying g, scanned inside the box.  The lex scan keeps
  // the list sorted for binary_search below.
  std::vector<Multidegree> remainder;
  bool remainder_on_shell = false;
  {
    const Multidegree limits(r, box);
    Multidegree a(r, 0);
    while (true) {
      if (!level.set.contains(a)) {
        const auto& els = cache.elements(a);
        if (std::binary_search(els.begin(), els.end(), g)) {
          remainder.push_back(a);
          for (int i = 0; i < r; ++i) remainder_on_shell = remainder_on_shell || a[i] == box;
        }
      }
      if (!next_point(a, limits)) break;
    }
  }
  out.remainder_bounded = !remainder_on_shell;

  auto closed_indicator = [&](const Multidegree& p) {
    if (level.set.contains(p)) return cd.class_of(p) == c;
    return std::binary_search(remainder.begin(), remainder.end(), p);
  };
  auto dp_indicator = [&](const Multidegree& p) {
    const auto& els = cache.elements(p);
    return std::binary_search(els.begin(), els.end(), g);
  };

  bool verified = level.report.certified() && !remainder_on_shell;
  if (verified) {
    // Cross-check the candidate closed form against the DP on the doubled
    // box: exhaustively when that is small, by sampling otherwise.
    unsigned long long cells = 1;
    bool small = true;
    for (int i = 0; i < r && small; ++i) {
      cells *= static_cast<unsigned long long>(2 * box) + 1;
      if (cells > 100'000ULL) small = false;
    }
    if (small) {
      const Multidegree limits(r, 2 * box);
      Multidegree p(r, 0);
      while (verified) {
        if (closed_indicator(p) != dp_indicator(p)) verified = false;
        if (!next_point(p, limits)) break;
      }
    } else {
      std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL);
      std::uniform_int_distribution<int> coord(0, 2 * box);
      for (int k = 0; k < samples && verified; ++k) {
        Multidegree p(r);
        for (int i = 0; i < r; ++i) p[i] = coord(rng);
        if (closed_indicator(p) != dp_indicator(p)) verified = false;
      }
    }
  }

  if (verified) {
    out.closed_form = true;
    out.remainder = std::move(remainder);
    out.status = level.report.status();

    SparsePoly sat_num = class_upward_numerator(level.set, cd, class_numerators(cd), c);
    MultivariateRational sat = MultivariateRational::zero(r);
    if (!sat_num.is_zero()) {
      std::vector<DenomFactor> den;
      for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = cd.q[i];
        den.push_back({std::move(e), 1});
      }
      sat = MultivariateRational(std::move(sat_num), std::move(den));
    }
    SparsePoly rem(r);
    for (const auto& p : out.remainder) rem.add_term(p, 1);
    out.gf = sat + MultivariateRational(std::move(rem), {});
    return out;
  }

  out.status = "fitted";
  SeriesPrefix prefix;
  prefix.reserve(out.coefficients.size());
  for (const auto& z : out.coefficients) prefix.emplace_back(z);
  out.fit = rational_fit(prefix, guard);
  return out;
}

}  // namespace relfree
