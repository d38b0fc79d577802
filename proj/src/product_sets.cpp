#include "relfree/product_sets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace relfree {

int total_of(const Multidegree& a) {
  int t = 0;
  for (int v : a) {
    if (v < 0) throw std::invalid_argument("multidegree entries must be nonnegative");
    t += v;
  }
  return t;
}

bool multidegree_leq(const Multidegree& a, const Multidegree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multidegree dimension mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Multidegree multidegree_join(const Multidegree& a, const Multidegree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multidegree dimension mismatch");
  Multidegree j(a.size());
  for (size_t i = 0; i < a.size(); ++i) j[i] = std::max(a[i], b[i]);
  return j;
}

GradingTuple make_grading_tuple(const FiniteGroup& g, std::vector<int> degrees) {
  if (degrees.empty()) throw std::invalid_argument("grading tuple must have at least one entry");
  for (int d : degrees) g.check_index(d);
  return GradingTuple{&g, std::move(degrees)};
}

ProductSetCache::ProductSetCache(const FiniteGroup& group, std::vector<int> degrees)
    : group_(group), degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("grading tuple must have at least one entry");
  for (int d : degrees_) group_.check_index(d);
  abmap_ = abelianization_map(group);
  gprime_order_ = commutator_subgroup(group).order();
}

const std::vector<int>& ProductSetCache::elements(const Multidegree& a) {
  if (static_cast<int>(a.size()) != arity())
    throw std::invalid_argument("multidegree dimension does not match tuple arity");
  auto it = memo_.find(a);
  if (it != memo_.end()) return it->second;
  std::vector<int> result;
  if (total_of(a) == 0) {
    result = {0};
  } else {
    std::set<int> acc;
    Multidegree b = a;
    for (int i = 0; i < arity(); ++i) {
      if (a[i] == 0) continue;
      --b[i];
      const std::vector<int>& prev = elements(b);  // map references stay valid across inserts
      for (int x : prev) acc.insert(group_.mult(x, degrees_[i]));
      ++b[i];
    }
    result.assign(acc.begin(), acc.end());
  }
  return memo_.emplace(a, std::move(result)).first->second;
}

ProductSet ProductSetCache::product_set(const Multidegree& a) {
  const std::vector<int>& els = elements(a);
  ProductSet p;
  p.elements = els;
  p.coset_label = abmap_[els[0]];
  for (int x : els)
    if (abmap_[x] != p.coset_label)
      throw std::logic_error("product set escaped its coset");  // coset confinement invariant
  return p;
}

int ProductSetCache::total_dimension(const Multidegree& a) {
  return static_cast<int>(elements(a).size());
}

int ProductSetCache::component_dimension(const Multidegree& a, int g) {
  group_.check_index(g);
  const std::vector<int>& els = elements(a);
  return std::binary_search(els.begin(), els.end(), g) ? 1 : 0;
}

bool ProductSetCache::is_saturated(const Multidegree& a) {
  return total_dimension(a) == gprime_order_;
}

ProductSet product_set(const GradingTuple& t, const Multidegree& a) {
  ProductSetCache cache(*t.group, t.degrees);
  return cache.product_set(a);
}

int total_dimension(const GradingTuple& t, const Multidegree& a) {
  ProductSetCache cache(*t.group, t.degrees);
  return cache.total_dimension(a);
}

int component_dimension(const GradingTuple& t, const Multidegree& a, int g) {
  ProductSetCache cache(*t.group, t.degrees);
  return cache.component_dimension(a, g);
}

bool is_saturated(const GradingTuple& t, const Multidegree& a) {
  ProductSetCache cache(*t.group, t.degrees);
  return cache.is_saturated(a);
}

Multidegree word_multidegree(const std::vector<int>& word, int arity) {
  Multidegree a(arity, 0);
  for (int l : word) {
    if (l < 0 || l >= arity) throw std::invalid_argument("word letter out of range");
    ++a[l];
  }
  return a;
}

std::vector<int> rich_word(const GradingTuple& t, int z) {
  const FiniteGroup& g = *t.group;
  g.check_index(z);
  Subgroup generated = generated_subgroup(g, t.degrees);
  if (generated.order() != g.order)
    throw std::invalid_argument("rich_word precondition violated: tuple entries do not generate the group");

  // shortest word over tuple slots for every element (breadth-first search)
  const int r = t.arity();
  std::vector<std::vector<int>> word_of(g.order);
  std::vector<char> seen(g.order, 0);
  seen[0] = 1;
  std::vector<int> queue = {0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int i = 0; i < r; ++i) {
      int y = g.mult(x, t.degrees[i]);
      if (!seen[y]) {
        seen[y] = 1;
        word_of[y] = word_of[x];
        word_of[y].push_back(i);
        queue.push_back(y);
      }
    }
  }

  // inverse word: reverse and replace each letter i by ord(g_i)-1 copies
  std::vector<int> slot_order(r);
  for (int i = 0; i < r; ++i) slot_order[i] = g.element_order(t.degrees[i]);
  auto inverse_word = [&](const std::vector<int>& w) {
    std::vector<int> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      out.insert(out.end(), slot_order[*it] - 1, *it);
    return out;
  };

  // commutator blocks, deduplicated by multidegree (only the multidegree of a
  // word determines its product set)
  std::vector<std::vector<int>> blocks;
  std::set<Multidegree> seen_block;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      if (g.mult(a, b) == g.mult(b, a)) continue;
      std::vector<int> block = word_of[a];
      const std::vector<int>& wb = word_of[b];
      block.insert(block.end(), wb.begin(), wb.end());
      std::vector<int> ia = inverse_word(word_of[a]), ib = inverse_word(word_of[b]);
      block.insert(block.end(), ia.begin(), ia.end());
      block.insert(block.end(), ib.begin(), ib.end());
      if (seen_block.insert(word_multidegree(block, r)).second) blocks.push_back(std::move(block));
    }

  Subgroup gp = commutator_subgroup(g);
  std::vector<int> target;
  for (int h : gp.elements) target.push_back(g.mult(z, h));
  std::sort(target.begin(), target.end());

  ProductSetCache cache(g, t.degrees);
  auto covers = [&](const std::vector<std::vector<int>>& active) {
    std::vector<int> w;
    for (const auto& blk : active) w.insert(w.end(), blk.begin(), blk.end());
    w.insert(w.end(), word_of[z].begin(), word_of[z].end());
    return cache.elements(word_multidegree(w, r)) == target;
  };

  std::vector<std::vector<int>> active = blocks;
  for (int attempt = 0; attempt < 3 && !covers(active); ++attempt)
    active.insert(active.end(), blocks.begin(), blocks.end());
  if (!covers(active))
    throw std::logic_error("rich word construction failed to cover the coset");  // not expected for any builtin

  // greedy minimization: drop blocks whose removal keeps the full coset
  for (size_t i = 0; i < active.size();) {
    std::vector<std::vector<int>> trial = active;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (covers(trial))
      active = std::move(trial);
    else
      ++i;
  }

  std::vector<int> w;
  for (const auto& blk : active) w.insert(w.end(), blk.begin(), blk.end());
  w.insert(w.end(), word_of[z].begin(), word_of[z].end());
  return w;
}

}  // namespace relfree
