#include "relfree/generic_algebra.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "relfree/linalg.hpp"
#include "relfree/ratfun.hpp"

namespace relfree {

namespace {

std::string triple_name(int i, int j, int k) {
  std::ostringstream os;
  os << "(" << i << ", " << j << ", " << k << ")";
  return os.str();
}

mpq_class parse_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  if (!v.is_string())
    throw std::invalid_argument("structure coefficient must be an integer or a \"p/q\" string");
  const std::string s = v.get<std::string>();
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

void validate_multilinear(const MultilinearGradedPoly& f) {
  const int n = static_cast<int>(f.slot_degrees.size());
  if (n == 0) throw std::invalid_argument("multilinear polynomial needs at least one slot");
  for (const auto& [c, word] : f.terms) {
    (void)c;
    if (static_cast<int>(word.size()) != n)
      throw std::invalid_argument("monomial does not use every slot exactly once");
    std::vector<char> seen(n, 0);
    for (int s : word) {
      if (s < 0 || s >= n || seen[s])
        throw std::invalid_argument("monomial does not use every slot exactly once");
      seen[s] = 1;
    }
  }
}

int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Distinct arrangements of the multiset A in lexicographic order.
std::vector<std::vector<int>> all_words(const Multidegree& a) {
  const int n = total_of(a);
  std::vector<std::vector<int>> out;
  std::vector<int> counts = a;
  std::vector<int> word;
  std::function<void()> go = [&] {
    if (static_cast<int>(word.size()) == n) {
      out.push_back(word);
      return;
    }
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (counts[j] == 0) continue;
      --counts[j];
      word.push_back(static_cast<int>(j));
      go();
      word.pop_back();
      ++counts[j];
    }
  };
  go();
  return out;
}

}  // namespace

const std::vector<std::pair<int, mpq_class>>& GradedAlgebraSpec::product(int i, int j) const {
  static const std::vector<std::pair<int, mpq_class>> kEmpty;
  auto it = structure.find({i, j});
  return it == structure.end() ? kEmpty : it->second;
}

std::vector<mpq_class> GradedAlgebraSpec::multiply_right(const std::vector<mpq_class>& u, int j) const {
  std::vector<mpq_class> out(dim, mpq_class(0));
  for (int i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    for (const auto& [k, c] : product(i, j)) out[k] += u[i] * c;
  }
  return out;
}

std::vector<mpq_class> GradedAlgebraSpec::multiply_left(int i, const std::vector<mpq_class>& u) const {
  std::vector<mpq_class> out(dim, mpq_class(0));
  for (int j = 0; j < dim; ++j) {
    if (u[j] == 0) continue;
    for (const auto& [k, c] : product(i, j)) out[k] += u[j] * c;
  }
  return out;
}

std::vector<int> GradedAlgebraSpec::component_basis(int g) const {
  std::vector<int> out;
  for (int i = 0; i < dim; ++i)
    if (grading[i] == g) out.push_back(i);
  return out;
}

int GradedAlgebraSpec::component_dim(int g) const {
  return static_cast<int>(component_basis(g).size());
}

void GradedAlgebraSpec::validate() const {
  if (dim <= 0) throw std::invalid_argument("algebra dimension must be positive");
  if (static_cast<int>(grading.size()) != dim)
    throw std::invalid_argument("grading must assign a degree to every basis vector");
  if (!labels.empty() && static_cast<int>(labels.size()) != dim)
    throw std::invalid_argument("labels must name every basis vector");
  for (int d : grading) group.check_index(d);
  for (const auto& [ij, list] : structure) {
    const auto [i, j] = ij;
    if (i < 0 || i >= dim || j < 0 || j >= dim)
      throw std::invalid_argument("structure constant indexes a missing basis vector");
    for (const auto& [k, c] : list) {
      if (k < 0 || k >= dim)
        throw std::invalid_argument("structure constant indexes a missing basis vector");
      if (c != 0 && grading[k] != group.mult(grading[i], grading[j]))
        throw std::invalid_argument("grading incompatibility at structure constant " + triple_name(i, j, k));
    }
  }

  auto dense_product = [&](int i, int j) {
    std::vector<mpq_class> out(dim, mpq_class(0));
    for (const auto& [k, c] : product(i, j)) out[k] += c;
    return out;
  };
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const auto ij = dense_product(i, j);
      for (int k = 0; k < dim; ++k) {
        const auto lhs = multiply_right(ij, k);
        const auto rhs = multiply_left(i, dense_product(j, k));
        if (lhs != rhs)
          throw std::invalid_argument("associativity fails at basis triple " + triple_name(i, j, k));
      }
    }
  }
}

GradedAlgebraSpec group_algebra_spec(const FiniteGroup& g, const Cocycle* alpha) {
  if (alpha != nullptr) {
    if (alpha->parent == nullptr || alpha->parent->order != g.order || alpha->parent->table != g.table)
      throw std::invalid_argument("cocycle does not belong to the given group");
  }
  GradedAlgebraSpec spec;
  spec.group = g;
  spec.dim = g.order;
  spec.grading.resize(g.order);
  for (int i = 0; i < g.order; ++i) {
    spec.grading[i] = i;
    spec.labels.push_back("u_" + (static_cast<int>(g.labels.size()) == g.order ? g.labels[i]
                                                                               : std::to_string(i)));
  }
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j)
      spec.structure[{i, j}] = {{g.mult(i, j), alpha ? alpha->at(i, j) : mpq_class(1)}};
  return spec;
}

GradedAlgebraSpec algebra_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  GradedAlgebraSpec spec;
  spec.group = make_group(j.value("group", std::string("C1")));
  spec.dim = j.at("dim").get<int>();
  spec.grading = j.value("grading", std::vector<int>(std::max(spec.dim, 0), 0));
  spec.labels = j.value("labels", std::vector<std::string>{});
  if (spec.labels.empty())
    for (int i = 0; i < spec.dim; ++i) spec.labels.push_back("v" + std::to_string(i));

  std::map<std::pair<int, int>, std::map<int, mpq_class>> merged;
  for (const auto& entry : j.at("structure")) {
    if (!entry.is_array() || entry.size() != 4)
      throw std::invalid_argument("structure entries must be [i, j, k, coefficient]");
    merged[{entry[0].get<int>(), entry[1].get<int>()}][entry[2].get<int>()] += parse_rational(entry[3]);
  }
  for (const auto& [ij, byk] : merged) {
    std::vector<std::pair<int, mpq_class>> list;
    for (const auto& [k, c] : byk)
      if (c != 0) list.emplace_back(k, c);
    if (!list.empty()) spec.structure[ij] = std::move(list);
  }
  spec.validate();
  return spec;
}

GradedAlgebraSpec load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return algebra_from_json(buf.str());
}

std::string algebra_to_json(const GradedAlgebraSpec& spec) {
  nlohmann::ordered_json j;
  j["dim"] = spec.dim;
  if (!spec.group.name.empty()) j["group"] = spec.group.name;
  if (!spec.labels.empty()) j["labels"] = spec.labels;
  j["grading"] = spec.grading;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [ij, list] : spec.structure) {
    auto sorted = list;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [k, c] : sorted) {
      if (c == 0) continue;
      arr.push_back({ij.first, ij.second, k, c.get_str()});
    }
  }
  j["structure"] = std::move(arr);
  return j.dump(2) + "\n";
}

namespace {

// Symbolic evaluation of a word in the generic elements: entry k is a
// polynomial in the slot indeterminates t_{slot, basis} (variable index
// slot * dim + basis).
std::vector<SparsePoly> evaluate_word_symbolic(const GradedAlgebraSpec& spec, const GradingTuple& tuple,
                                               const std::vector<std::vector<int>>& slot_basis,
                                               const std::vector<int>& word) {
  const int m = spec.dim;
  const int nvars = tuple.arity() * m;
  auto generic = [&](int slot) {
    std::vector<SparsePoly> v(m, SparsePoly(nvars));
    for (int i : slot_basis[slot]) {
      std::vector<int> e(nvars, 0);
      e[slot * m + i] = 1;
      v[i] = SparsePoly::monomial(std::move(e), 1);
    }
    return v;
  };
  std::vector<SparsePoly> cur = generic(word[0]);
  for (std::size_t p = 1; p < word.size(); ++p) {
    const int slot = word[p];
    std::vector<SparsePoly> next(m, SparsePoly(nvars));
    for (int i = 0; i < m; ++i) {
      if (cur[i].is_zero()) continue;
      for (int ip : slot_basis[slot]) {
        std::vector<int> e(nvars, 0);
        e[slot * m + ip] = 1;
        for (const auto& [k, c] : spec.product(i, ip)) next[k] += cur[i] * SparsePoly::monomial(e, c);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<mpq_class> evaluate_word_numeric(const GradedAlgebraSpec& spec,
                                             const std::vector<std::vector<int>>& slot_basis,
                                             const std::vector<int>& word,
                                             const std::vector<long>& values) {
  const int m = spec.dim;
  std::vector<mpq_class> cur(m, mpq_class(0));
  for (int i : slot_basis[word[0]]) cur[i] = values[word[0] * m + i];
  for (std::size_t p = 1; p < word.size(); ++p) {
    const int slot = word[p];
    std::vector<mpq_class> next(m, mpq_class(0));
    for (int i = 0; i < m; ++i) {
      if (cur[i] == 0) continue;
      for (int ip : slot_basis[slot]) {
        const long t = values[slot * m + ip];
        for (const auto& [k, c] : spec.product(i, ip)) next[k] += cur[i] * t * c;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

RankResult component_dimension_generic(const GradedAlgebraSpec& spec, const GradingTuple& tuple,
                                       const Multidegree& a, std::optional<int> component,
                                       RankMode mode, std::uint64_t seed) {
  if (tuple.group == nullptr) throw std::invalid_argument("grading tuple has no group");
  if (tuple.group->order != spec.group.order || tuple.group->table != spec.group.table)
    throw std::invalid_argument("grading tuple group does not match the algebra group");
  if (static_cast<int>(a.size()) != tuple.arity())
    throw std::invalid_argument("multidegree arity does not match the tuple");
  for (int v : a)
    if (v < 0) throw std::invalid_argument("multidegree entries must be nonnegative");
  if (component) spec.group.check_index(*component);

  const int n = total_of(a);
  if (n == 0) return {component && *component != 0 ? 0 : 1, true};

  const int m = spec.dim;
  std::vector<std::vector<int>> slot_basis;
  for (int d : tuple.degrees) slot_basis.push_back(spec.component_basis(d));

  std::vector<std::vector<int>> words = all_words(a);
  if (component) {
    std::vector<std::vector<int>> kept;
    for (auto& w : words) {
      int d = 0;
      for (int s : w) d = spec.group.mult(d, tuple.degrees[s]);
      if (d == *component) kept.push_back(std::move(w));
    }
    words = std::move(kept);
  }
  if (words.empty()) return {0, true};

  const bool exact = mode == RankMode::exact || (mode == RankMode::automatic && n <= 6);
  if (exact) {
    // Columns are the (basis vector, t-monomial) pairs that actually occur.
    std::map<std::pair<int, std::vector<int>>, int> columns;
    std::vector<std::vector<std::pair<int, mpq_class>>> sparse_rows;
    for (const auto& w : words) {
      const auto value = evaluate_word_symbolic(spec, tuple, slot_basis, w);
      std::vector<std::pair<int, mpq_class>> row;
      for (int k = 0; k < m; ++k) {
        for (const auto& [expo, q] : value[k].terms()) {
          auto [it, fresh] = columns.try_emplace({k, expo}, static_cast<int>(columns.size()));
          (void)fresh;
          row.emplace_back(it->second, q);
        }
      }
      sparse_rows.push_back(std::move(row));
    }
    std::vector<std::vector<mpq_class>> matrix(sparse_rows.size(),
                                               std::vector<mpq_class>(columns.size(), mpq_class(0)));
    for (std::size_t r = 0; r < sparse_rows.size(); ++r)
      for (const auto& [col, q] : sparse_rows[r]) matrix[r][col] = q;
    return {rank_rational(matrix), true};
  }

  // Probabilistic: stack numeric evaluations at random points until the rank
  // stops growing; each substitution can only lose rank, never gain it.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 1L << 20);
  std::vector<std::vector<mpq_class>> rows(words.size());
  int rank = -1;
  for (int sample = 0; sample < 8; ++sample) {
    std::vector<long> values(static_cast<std::size_t>(tuple.arity()) * m);
    for (auto& v : values) v = dist(rng);
    for (std::size_t r = 0; r < words.size(); ++r) {
      const auto value = evaluate_word_numeric(spec, slot_basis, words[r], values);
      rows[r].insert(rows[r].end(), value.begin(), value.end());
    }
    const int next = rank_rational(rows);
    if (next == rank) break;
    rank = next;
  }
  return {rank, false};
}

MultilinearGradedPoly multilinear_monomial(std::vector<int> slot_degrees) {
  if (slot_degrees.empty()) throw std::invalid_argument("multilinear polynomial needs at least one slot");
  std::vector<int> word(slot_degrees.size());
  for (std::size_t i = 0; i < word.size(); ++i) word[i] = static_cast<int>(i);
  MultilinearGradedPoly f;
  f.slot_degrees = std::move(slot_degrees);
  f.terms.emplace_back(mpq_class(1), std::move(word));
  return f;
}

MultilinearGradedPoly alternate(const MultilinearGradedPoly& h, const std::vector<int>& slots) {
  validate_multilinear(h);
  if (slots.empty()) throw std::invalid_argument("alternate: empty slot set");
  std::vector<int> sorted = slots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("alternate: repeated slot");
  const int n = static_cast<int>(h.slot_degrees.size());
  for (int s : sorted) {
    if (s < 0 || s >= n) throw std::invalid_argument("alternate: slot out of range");
    if (h.slot_degrees[s] != h.slot_degrees[sorted[0]])
      throw std::invalid_argument("alternate: slots carry mixed degrees");
  }

  std::map<std::vector<int>, mpq_class> acc;
  std::vector<int> perm(sorted.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  do {
    const int sign = permutation_sign(perm);
    for (const auto& [c, word] : h.terms) {
      std::vector<int> w = word;
      for (int& letter : w) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), letter);
        if (it != sorted.end() && *it == letter) letter = sorted[perm[it - sorted.begin()]];
      }
      acc[w] += sign * c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  MultilinearGradedPoly out;
  out.slot_degrees = h.slot_degrees;
  for (auto& [word, c] : acc)
    if (c != 0) out.terms.emplace_back(std::move(c), word);
  return out;
}

bool is_graded_identity(const GradedAlgebraSpec& spec, const MultilinearGradedPoly& f) {
  validate_multilinear(f);
  const int n = static_cast<int>(f.slot_degrees.size());
  std::vector<std::vector<int>> bases;
  for (int d : f.slot_degrees) {
    spec.group.check_index(d);
    bases.push_back(spec.component_basis(d));
    if (bases.back().empty()) return true;  // no assignments: vacuously an identity
  }
  std::vector<int> choice(n, 0);
  while (true) {
    std::vector<mpq_class> sum(spec.dim, mpq_class(0));
    for (const auto& [c, word] : f.terms) {
      std::vector<mpq_class> cur(spec.dim, mpq_class(0));
      cur[bases[word[0]][choice[word[0]]]] = 1;
      for (std::size_t p = 1; p < word.size(); ++p)
        cur = spec.multiply_right(cur, bases[word[p]][choice[word[p]]]);
      for (int k = 0; k < spec.dim; ++k) sum[k] += c * cur[k];
    }
    for (int k = 0; k < spec.dim; ++k)
      if (sum[k] != 0) return false;
    int s = 0;
    while (s < n && ++choice[s] == static_cast<int>(bases[s].size())) {
      choice[s] = 0;
      ++s;
    }
    if (s == n) break;
  }
  return true;
}

}  // namespace relfree
