#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "relfree/group.hpp"
#include "relfree/product_sets.hpp"

namespace relfree {

// Finite-dimensional G-graded algebra by structure constants over exact
// rationals: v_i v_j = sum_k c_{ijk} v_k, with deg v_k = deg v_i deg v_j
// whenever c_{ijk} is nonzero.
struct GradedAlgebraSpec {
  FiniteGroup group;  // owned copy; grading entries are its element indices
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<int> grading;  // basis index -> group element
  std::map<std::pair<int, int>, std::vector<std::pair<int, mpq_class>>> structure;

  const std::vector<std::pair<int, mpq_class>>& product(int i, int j) const;
  std::vector<mpq_class> multiply_right(const std::vector<mpq_class>& u, int j) const;  // u * v_j
  std::vector<mpq_class> multiply_left(int i, const std::vector<mpq_class>& u) const;   // v_i * u
  std::vector<int> component_basis(int g) const;
  int component_dim(int g) const;

  // Grading compatibility and associativity of every basis triple; throws
  // std::invalid_argument naming the first violated constraint.
  void validate() const;
};

// Basis {u_g}, deg u_g = g, u_g u_h = alpha(g,h) u_{gh}; alpha == 1 when
// absent.  Associativity holds by the (already verified) cocycle identity, so
// construction does not rerun the cubic check.
GradedAlgebraSpec group_algebra_spec(const FiniteGroup& g, const Cocycle* alpha = nullptr);

// JSON object {"dim": m, "group": "<spec>", "labels": [...], "grading":
// [...], "structure": [[i, j, k, "p/q"], ...]}; group defaults to C1, labels
// to v0..v{m-1}, grading to all-identity, omitted triples are zero.
// Coefficients may be JSON integers or "p/q" strings.  Loaded specs are
// validated.
GradedAlgebraSpec algebra_from_json(const std::string& text);
GradedAlgebraSpec load_algebra(const std::string& path);
std::string algebra_to_json(const GradedAlgebraSpec& spec);

enum class RankMode { automatic, exact, probabilistic };

struct RankResult {
  int value = 0;
  bool exact = true;  // false: probabilistic lower bound
};

// Dimension of the span of the degree-A monomials in the generic elements
// z_0..z_{r-1}, where slot j sums the g_j-component basis against a fresh
// indeterminate family, optionally restricted to words of group degree
// `component`.  Exact mode builds symbolic rows over (basis vector,
// t-monomial) columns and ranks them fraction-free; probabilistic mode
// substitutes seeded random integers in [1, 2^20] and reports a lower bound
// (samples are added until the rank stabilizes).  automatic = exact for
// |A| <= 6.
RankResult component_dimension_generic(const GradedAlgebraSpec& spec, const GradingTuple& tuple,
                                       const Multidegree& a, std::optional<int> component,
                                       RankMode mode = RankMode::automatic, std::uint64_t seed = 0);

// Multilinear polynomial in slots 0..n-1: every monomial is a coefficient
// together with an ordering of all n slots.
struct MultilinearGradedPoly {
  std::vector<int> slot_degrees;
  std::vector<std::pair<mpq_class, std::vector<int>>> terms;
};

// x_0 x_1 ... x_{n-1}
MultilinearGradedPoly multilinear_monomial(std::vector<int> slot_degrees);

// Signed sum over all permutations of the named slots, which must share one
// degree; equal monomials are combined and zero terms dropped.
MultilinearGradedPoly alternate(const MultilinearGradedPoly& h, const std::vector<int>& slots);

// True iff f vanishes under every assignment of matching-degree basis vectors
// to its slots (exhaustive, sufficient by multilinearity; an empty component
// makes the check vacuously true).
bool is_graded_identity(const GradedAlgebraSpec& spec, const MultilinearGradedPoly& f);

}  // namespace relfree
