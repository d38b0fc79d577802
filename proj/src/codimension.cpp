#include "relfree/codimension.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace relfree {

namespace {

std::vector<int> all_elements(const FiniteGroup& g) {
  std::vector<int> degrees(g.order);
  std::iota(degrees.begin(), degrees.end(), 0);
  return degrees;
}

}  // namespace

CodimComputer::CodimComputer(const FiniteGroup& g) : cache_(g, all_elements(g)) {}

CodimRecord CodimComputer::record(int n) {
  if (n < 0) throw std::invalid_argument("codim: degree must be nonnegative");
  const int r = group().order;

  // Compositions of n into r parts in colex order, starting at (n,0,...,0).
  // The multinomial n!/prod(a_j!) follows each step exactly: moving a_i -> 0,
  // a_0 -> a_i - 1, a_{i+1} += 1 rescales it by a_i / (a_{i+1} + 1).
  Multidegree a(r, 0);
  a[0] = n;
  mpz_class multinomial = 1;
  mpz_class value = 0;
  while (true) {
    value += multinomial * static_cast<long>(cache_.elements(a).size());
    if (a[r - 1] == n) break;
    int i = 0;
    while (a[i] == 0) ++i;
    const int v = a[i];
    mpz_class next = multinomial * v;
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(a[i + 1] + 1));
    multinomial = std::move(next);
    a[i] = 0;
    a[0] = v - 1;
    a[i + 1] += 1;
  }

  CodimRecord rec;
  rec.n = n;
  rec.value = std::move(value);
  mpz_ui_pow_ui(rec.lower.get_mpz_t(), static_cast<unsigned long>(group().order),
                static_cast<unsigned long>(n));
  rec.upper = rec.lower * cache_.commutator_order();
  rec.ratio = mpq_class(rec.value, rec.upper);
  rec.ratio.canonicalize();
  return rec;
}

std::vector<CodimRecord> CodimComputer::table(int n_max) {
  if (n_max < 1) throw std::invalid_argument("codim_table: maximum degree must be at least 1");
  std::vector<CodimRecord> out;
  out.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) out.push_back(record(n));
  return out;
}

CodimRecord codim(const FiniteGroup& g, int n) { return CodimComputer(g).record(n); }

std::vector<CodimRecord> codim_table(const FiniteGroup& g, int n_max) {
  return CodimComputer(g).table(n_max);
}

double nth_root_estimate(const mpz_class& value, int n) {
  if (n < 1) throw std::invalid_argument("nth_root_estimate: degree must be at least 1");
  if (value < 0) throw std::invalid_argument("nth_root_estimate: negative value");
  if (value == 0) return 0.0;
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  const double log2v = std::log2(mant) + static_cast<double>(exp2);
  return std::exp2(log2v / n);
}

double exp_estimate(const FiniteGroup& g, int n) {
  if (n < 1) throw std::invalid_argument("exp_estimate: degree must be at least 1");
  return nth_root_estimate(codim(g, n).value, n);
}

}  // namespace relfree
