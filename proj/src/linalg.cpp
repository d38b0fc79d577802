#include "relfree/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace relfree {

int rank_bareiss(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  size_t rank = 0;
  mpz_class prev(1), num, rem;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        num = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        mpz_tdiv_qr(m[i][j].get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("fraction-free elimination produced a remainder");
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_rational(const std::vector<std::vector<mpq_class>>& m) {
  std::vector<std::vector<mpz_class>> z;
  z.reserve(m.size());
  for (const auto& row : m) {
    mpz_class l(1);
    for (const mpq_class& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<mpz_class> zrow;
    zrow.reserve(row.size());
    for (const mpq_class& v : row) zrow.push_back(mpz_class(v.get_num() * (l / v.get_den())));
    z.push_back(std::move(zrow));
  }
  return rank_bareiss(std::move(z));
}

}  // namespace relfree
