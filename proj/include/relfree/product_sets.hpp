#pragma once

#include <map>
#include <string>
#include <vector>

#include "relfree/group.hpp"

namespace relfree {

// Multidegree over a grading tuple: entry i counts the letters of tuple slot i.
using Multidegree = std::vector<int>;

int total_of(const Multidegree& a);
bool multidegree_leq(const Multidegree& a, const Multidegree& b);  // componentwise
Multidegree multidegree_join(const Multidegree& a, const Multidegree& b);

// An ordered tuple of group elements used as generator degrees.
struct GradingTuple {
  const FiniteGroup* group = nullptr;
  std::vector<int> degrees;  // element indices, repetition allowed

  int arity() const { return static_cast<int>(degrees.size()); }
};

GradingTuple make_grading_tuple(const FiniteGroup& g, std::vector<int> degrees);

// The set N(A) of group elements that occur as the product of some arrangement
// of the multiset A of tuple entries, together with the coset it lives in.
struct ProductSet {
  std::vector<int> elements;  // sorted ascending
  int coset_label = 0;        // modulo the commutator subgroup
};

// Memoized dynamic program over the multidegree lattice:
//   N(0) = {e},  N(A) = union over i with A_i > 0 of N(A - e_i) * g_i.
// The memo covers every multidegree at or below the queried ones and is meant
// to be shared across queries against the same tuple.  The cache owns a copy
// of the group, so it stays valid independently of the argument's lifetime.
class ProductSetCache {
 public:
  ProductSetCache(const FiniteGroup& group, std::vector<int> degrees);

  const FiniteGroup& group() const { return group_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int arity() const { return static_cast<int>(degrees_.size()); }
  int commutator_order() const { return gprime_order_; }
  const std::vector<int>& ab_map() const { return abmap_; }

  const std::vector<int>& elements(const Multidegree& a);
  ProductSet product_set(const Multidegree& a);
  int total_dimension(const Multidegree& a);
  int component_dimension(const Multidegree& a, int g);
  bool is_saturated(const Multidegree& a);

 private:
  FiniteGroup group_;
  std::vector<int> degrees_;
  std::vector<int> abmap_;
  int gprime_order_;
  std::map<Multidegree, std::vector<int>> memo_;
};

// One-shot conveniences; each builds a fresh cache.
ProductSet product_set(const GradingTuple& t, const Multidegree& a);
int total_dimension(const GradingTuple& t, const Multidegree& a);
int component_dimension(const GradingTuple& t, const Multidegree& a, int g);
bool is_saturated(const GradingTuple& t, const Multidegree& a);

// A word over tuple slots whose permutations exhaust the full coset z*G'.
// Construction: for every noncommuting pair (g,h), concatenate shortest-word
// commutator blocks g h g^-1 h^-1 with inverses rewritten as positive powers,
// append a word for z, verify against the DP and greedily drop blocks that are
// not needed.  Throws if the tuple does not generate the group.
std::vector<int> rich_word(const GradingTuple& t, int z);

Multidegree word_multidegree(const std::vector<int>& word, int arity);

}  // namespace relfree
