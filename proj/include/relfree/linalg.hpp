#pragma once

#include <vector>

#include <gmpxx.h>

namespace relfree {

// Rank by fraction-free (Bareiss) elimination; destroys its copy of the input.
int rank_bareiss(std::vector<std::vector<mpz_class>> m);

// Rank of a rational matrix: rows are scaled to integers, then Bareiss.
int rank_rational(const std::vector<std::vector<mpq_class>>& m);

}  // namespace relfree
