#include "relfree/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace relfree {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup g;
  g.order = n;
  g.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  g.labels.reserve(n);
  for (int a = 0; a < n; ++a)
    g.labels.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g" + std::to_string(a)));
  g.name = "C" + std::to_string(n);
  return g;
}

// Dihedral group of order 2n: elements r^i s^j with index i + j*n,
// relations r^n = s^2 = e and s r = r^{-1} s.
FiniteGroup dihedral_group(int n) {
  FiniteGroup g;
  g.order = 2 * n;
  g.table.resize(static_cast<size_t>(g.order) * g.order);
  auto idx = [n](int i, int j) { return i + j * n; };
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = ((j1 ? i1 - i2 : i1 + i2) % n + n) % n;
          int j = (j1 + j2) % 2;
          g.table[static_cast<size_t>(idx(i1, j1)) * g.order + idx(i2, j2)] = idx(i, j);
        }
  g.labels.resize(g.order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j) {
      std::string l = i == 0 ? "" : (i == 1 ? "r" : "r" + std::to_string(i));
      if (j) l += "s";
      if (l.empty()) l = "e";
      g.labels[idx(i, j)] = l;
    }
  g.name = "D" + std::to_string(n);
  return g;
}

// Permutations in lexicographic one-line order, so the identity has index 0.
// "a then b" composes as (ab)(x) = b(a(x)).
FiniteGroup symmetric_group(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index_of;
  for (size_t i = 0; i < perms.size(); ++i) index_of[perms[i]] = static_cast<int>(i);

  FiniteGroup g;
  g.order = static_cast<int>(perms.size());
  g.table.resize(static_cast<size_t>(g.order) * g.order);
  std::vector<int> c(n);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      for (int x = 0; x < n; ++x) c[x] = perms[b][perms[a][x]];
      g.table[static_cast<size_t>(a) * g.order + b] = index_of.at(c);
    }
  g.labels.reserve(g.order);
  for (const auto& q : perms) {
    std::string l;
    for (int x : q) l += static_cast<char>('0' + x);
    g.labels.push_back(l);
  }
  g.name = "S" + std::to_string(n);
  return g;
}

// Quaternion group: 1,-1,i,-i,j,-j,k,-k with index 2*symbol + sign.
FiniteGroup quaternion_group() {
  // symbol products: value and extra sign for (u,v) in {1,i,j,k}^2
  static const int sym[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  FiniteGroup g;
  g.order = 8;
  g.table.resize(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      int u = sym[ua][ub];
      int s = (sa + sb + neg[ua][ub]) % 2;
      g.table[static_cast<size_t>(a) * 8 + b] = 2 * u + s;
    }
  g.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  g.name = "Q8";
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.order = a.order * b.order;
  g.table.resize(static_cast<size_t>(g.order) * g.order);
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          g.table[static_cast<size_t>(idx(x1, y1)) * g.order + idx(x2, y2)] =
              idx(a.table[static_cast<size_t>(x1) * a.order + x2],
                  b.table[static_cast<size_t>(y1) * b.order + y2]);
  g.labels.reserve(g.order);
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < b.order; ++y) g.labels.push_back(a.labels[x] + "|" + b.labels[y]);
  g.name = a.name + "x" + b.name;
  return g;
}

FiniteGroup builtin_group(const std::string& part) {
  if (part == "Q8") return quaternion_group();
  if (part.size() >= 2 && (part[0] == 'C' || part[0] == 'D' || part[0] == 'S')) {
    const std::string digits = part.substr(1);
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      int n = std::stoi(digits);
      if (n < 1) throw std::invalid_argument("group spec '" + part + "': order parameter must be >= 1");
      switch (part[0]) {
        case 'C':
          return cyclic_group(n);
        case 'D':
          return dihedral_group(n);
        case 'S':
          if (n > 6)
            throw std::invalid_argument("builtin symmetric groups are limited to n <= 6, got " + part);
          return symmetric_group(n);
      }
    }
  }
  throw std::invalid_argument("unknown group spec '" + part + "'");
}

void validate_group(const FiniteGroup& g) {
  if (g.order < 1) throw std::invalid_argument("group order must be >= 1");
  if (g.table.size() != static_cast<size_t>(g.order) * g.order)
    throw std::invalid_argument("multiplication table size does not match order");
  const int n = g.order;
  for (int v : g.table)
    if (v < 0 || v >= n) throw std::invalid_argument("multiplication table entry out of range");
  for (int b = 0; b < n; ++b)
    if (g.table[b] != b)
      throw std::invalid_argument("row 0 is not the identity permutation: identity convention violated");
  for (int a = 0; a < n; ++a)
    if (g.table[static_cast<size_t>(a) * n] != a)
      throw std::invalid_argument("column 0 is not the identity permutation: identity convention violated");
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b)
      found = g.table[static_cast<size_t>(a) * n + b] == 0 && g.table[static_cast<size_t>(b) * n + a] == 0;
    if (!found)
      throw std::invalid_argument("element " + std::to_string(a) + " has no two-sided inverse");
  }
  const int* t = g.table.data();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = t[static_cast<size_t>(a) * n + b];
      for (int c = 0; c < n; ++c)
        if (t[static_cast<size_t>(ab) * n + c] != t[static_cast<size_t>(a) * n + t[static_cast<size_t>(b) * n + c]])
          throw std::invalid_argument("multiplication table is not associative at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
}

}  // namespace

int FiniteGroup::mult(int a, int b) const {
  check_index(a);
  check_index(b);
  return table[static_cast<size_t>(a) * order + b];
}

int FiniteGroup::inverse(int a) const {
  check_index(a);
  for (int b = 0; b < order; ++b)
    if (table[static_cast<size_t>(a) * order + b] == 0) return b;
  throw std::logic_error("validated group lost its inverses");
}

int FiniteGroup::element_order(int a) const {
  check_index(a);
  int x = a, k = 1;
  while (x != 0) {
    x = table[static_cast<size_t>(x) * order + a];
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (table[static_cast<size_t>(a) * order + b] != table[static_cast<size_t>(b) * order + a]) return false;
  return true;
}

void FiniteGroup::check_index(int a) const {
  if (a < 0 || a >= order)
    throw std::out_of_range("element index " + std::to_string(a) + " out of range for group of order " +
                            std::to_string(order));
}

FiniteGroup group_from_table(std::vector<int> table, int order, std::vector<std::string> labels,
                             std::string name) {
  FiniteGroup g;
  g.order = order;
  g.table = std::move(table);
  if (labels.empty())
    for (int i = 0; i < order; ++i) labels.push_back("g" + std::to_string(i));
  if (static_cast<int>(labels.size()) != order)
    throw std::invalid_argument("label count does not match group order");
  g.labels = std::move(labels);
  g.name = std::move(name);
  validate_group(g);
  return g;
}

FiniteGroup make_group(const std::string& spec) {
  const std::string s = trim(spec);
  if (s.empty()) throw std::invalid_argument("empty group spec");
  if (s.rfind("table:", 0) == 0) {
    std::string path = trim(s.substr(6));
    if (path.empty()) throw std::invalid_argument("group spec 'table:' is missing a file path");
    return load_group_table(path);
  }
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  FiniteGroup g = builtin_group(trim(parts[0]));
  for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, builtin_group(trim(parts[i])));
  validate_group(g);
  return g;
}

FiniteGroup load_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open Cayley table file '" + path + "'");
  int order = 0;
  if (!(in >> order) || order < 1)
    throw std::invalid_argument("Cayley table file '" + path + "': first token must be the group order");
  std::vector<int> table;
  table.reserve(static_cast<size_t>(order) * order);
  for (size_t i = 0; i < static_cast<size_t>(order) * order; ++i) {
    int v;
    if (!(in >> v))
      throw std::invalid_argument("Cayley table file '" + path + "': expected " + std::to_string(order) +
                                  "x" + std::to_string(order) + " entries");
    table.push_back(v);
  }
  return group_from_table(std::move(table), order, {}, "table:" + path);
}

bool Subgroup::contains(int a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  if (gens.empty()) throw std::invalid_argument("generated_subgroup requires a nonempty generating set");
  for (int s : gens) g.check_index(s);
  std::vector<char> seen(g.order, 0);
  seen[0] = 1;
  std::vector<int> queue = {0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int s : gens) {
      int y = g.mult(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  Subgroup h;
  h.parent = &g;
  for (int a = 0; a < g.order; ++a)
    if (seen[a]) h.elements.push_back(a);
  return h;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  std::vector<char> seen(g.order, 0);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      int c = g.mult(g.mult(g.mult(a, b), g.inverse(a)), g.inverse(b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

std::vector<int> abelianization_map(const FiniteGroup& g) {
  Subgroup gp = commutator_subgroup(g);
  std::vector<int> label(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    if (label[a] >= 0) continue;
    // a has the minimum index in its coset: smaller elements are labeled already
    for (int h : gp.elements) label[g.mult(a, h)] = a;
  }
  return label;
}

int Abelianization::index_of(int label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) throw std::invalid_argument("not a coset label");
  return static_cast<int>(it - labels.begin());
}

int Abelianization::mult(int la, int lb) const { return label_of[parent->mult(la, lb)]; }

int Abelianization::inverse(int la) const { return label_of[parent->inverse(la)]; }

int Abelianization::label_order(int la) const {
  int x = la, k = 1;
  while (x != 0) {
    x = mult(x, la);
    ++k;
  }
  return k;
}

Abelianization abelianization(const FiniteGroup& g) {
  Abelianization ab;
  ab.parent = &g;
  ab.label_of = abelianization_map(g);
  ab.labels = ab.label_of;
  std::sort(ab.labels.begin(), ab.labels.end());
  ab.labels.erase(std::unique(ab.labels.begin(), ab.labels.end()), ab.labels.end());
  return ab;
}

const mpq_class& Cocycle::at(int g, int h) const {
  parent->check_index(g);
  parent->check_index(h);
  return values[static_cast<size_t>(g) * parent->order + h];
}

Cocycle check_cocycle(const FiniteGroup& g, std::vector<mpq_class> values) {
  const int n = g.order;
  if (values.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("cocycle value table size does not match group order");
  auto at = [&](int a, int b) -> const mpq_class& { return values[static_cast<size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (at(a, b) == 0)
        throw std::invalid_argument("cocycle value at (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") must be nonzero");
  for (int a = 0; a < n; ++a)
    if (at(0, a) != 1 || at(a, 0) != 1)
      throw std::invalid_argument("cocycle normalization violated at element " + std::to_string(a) +
                                  ": alpha(e,g) = alpha(g,e) = 1 required");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(a, b) * at(g.mult(a, b), c) != at(a, g.mult(b, c)) * at(b, c))
          throw std::invalid_argument("cocycle condition violated at triple (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
  Cocycle alpha;
  alpha.parent = &g;
  alpha.values = std::move(values);
  return alpha;
}

Cocycle trivial_cocycle(const FiniteGroup& g) {
  return check_cocycle(g, std::vector<mpq_class>(static_cast<size_t>(g.order) * g.order, mpq_class(1)));
}

Cocycle load_cocycle(const FiniteGroup& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open cocycle file '" + path + "'");
  std::vector<mpq_class> values;
  values.reserve(static_cast<size_t>(g.order) * g.order);
  std::string tok;
  for (size_t i = 0; i < static_cast<size_t>(g.order) * g.order; ++i) {
    if (!(in >> tok))
      throw std::invalid_argument("cocycle file '" + path + "': expected " + std::to_string(g.order) + "x" +
                                  std::to_string(g.order) + " rational entries");
    mpq_class v;
    if (v.set_str(tok, 10) != 0)
      throw std::invalid_argument("cocycle file '" + path + "': bad rational '" + tok + "'");
    if (v.get_den() == 0)
      throw std::invalid_argument("cocycle file '" + path + "': zero denominator in '" + tok + "'");
    v.canonicalize();
    values.push_back(v);
  }
  return check_cocycle(g, std::move(values));
}

}  // namespace relfree
