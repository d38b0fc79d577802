#pragma once

#include <vector>

#include <gmpxx.h>

#include "relfree/group.hpp"
#include "relfree/product_sets.hpp"

namespace relfree {

// One degree of the graded codimension sequence with its proved bounds:
// |G|^n <= c^n <= |G'| * |G|^n.
struct CodimRecord {
  int n = 0;
  mpz_class value;
  mpz_class lower;
  mpz_class upper;
  mpq_class ratio;  // value / upper, canonical
};

// c^n = sum over multisets M of size n from G of multinomial(M) * |N(M)|,
// i.e. the number of equivalence classes of multilinear monomials.  The
// product-set cache is shared across degrees, so tables reuse all DP work;
// the computer keeps its own copy of the group via that cache.
class CodimComputer {
 public:
  explicit CodimComputer(const FiniteGroup& g);

  const FiniteGroup& group() const { return cache_.group(); }
  CodimRecord record(int n);                 // n >= 0
  std::vector<CodimRecord> table(int n_max); // n = 1..n_max

 private:
  ProductSetCache cache_;
};

CodimRecord codim(const FiniteGroup& g, int n);
std::vector<CodimRecord> codim_table(const FiniteGroup& g, int n_max);

// Display-only floating-point estimates; every stored value stays exact.
double nth_root_estimate(const mpz_class& value, int n);  // value^(1/n), n >= 1
double exp_estimate(const FiniteGroup& g, int n);         // (c^n)^(1/n)

}  // namespace relfree
