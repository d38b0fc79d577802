#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace relfree {

// A finite group given by its full multiplication table.  Elements are the
// dense indices 0..order-1 and index 0 is always the identity.
// table[a*order+b] is the product "a then b"; words multiply left to right.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;           // row-major, order*order entries
  std::vector<std::string> labels;  // one display label per element
  std::string name;                 // spec string the group was built from

  int mult(int a, int b) const;
  int inverse(int a) const;
  int element_order(int a) const;
  bool is_abelian() const;
  void check_index(int a) const;  // throws std::out_of_range
};

// Builds and validates a group from a raw table.  Throws std::invalid_argument
// naming the violated axiom (identity row/column, inverses, associativity).
FiniteGroup group_from_table(std::vector<int> table, int order,
                             std::vector<std::string> labels = {},
                             std::string name = "");

// Grammar: C<n>, D<n> (order 2n), S<n> (n <= 6), Q8, products joined by 'x'
// (e.g. "C2xC2"), or "table:<path>" for an imported Cayley table.
FiniteGroup make_group(const std::string& spec);

// Cayley table file: first line is the order m, then m lines of m
// whitespace-separated 0-based element indices.  Row/column 0 must be the
// identity.
FiniteGroup load_group_table(const std::string& path);

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elements;  // sorted ascending, always contains 0

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int a) const;
};

// Closure of a nonempty generating set.  Throws on an empty set.
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

// Subgroup generated by all commutators aba'b'.
Subgroup commutator_subgroup(const FiniteGroup& g);

// Maps each element to the label of its coset modulo the commutator subgroup.
// The label of a coset is its minimum element index, so the identity coset is
// labeled 0.
std::vector<int> abelianization_map(const FiniteGroup& g);

// The quotient G/G' with coset-label arithmetic.
struct Abelianization {
  const FiniteGroup* parent = nullptr;
  std::vector<int> label_of;  // element -> coset label
  std::vector<int> labels;    // sorted distinct coset labels

  int order() const { return static_cast<int>(labels.size()); }
  int index_of(int label) const;   // position of a label in `labels`
  int mult(int la, int lb) const;  // labels are coset representatives
  int inverse(int la) const;
  int label_order(int la) const;  // order of the coset in the quotient
};

Abelianization abelianization(const FiniteGroup& g);

// A 2-cocycle alpha: G x G -> F* with the normalization
// alpha(e,g) = alpha(g,e) = 1.  Values are exact nonzero rationals.
struct Cocycle {
  const FiniteGroup* parent = nullptr;
  std::vector<mpq_class> values;  // row-major, order*order entries

  const mpq_class& at(int g, int h) const;
};

// Validates the cocycle condition alpha(g,h) alpha(gh,k) = alpha(g,hk) alpha(h,k)
// and the normalization; throws std::invalid_argument naming the first
// violated triple.
Cocycle check_cocycle(const FiniteGroup& g, std::vector<mpq_class> values);

Cocycle trivial_cocycle(const FiniteGroup& g);

// Cocycle file: order lines of order whitespace-separated rationals "p/q".
Cocycle load_cocycle(const FiniteGroup& g, const std::string& path);

}  // namespace relfree
