#include "relfree/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "relfree/codimension.hpp"
#include "relfree/generic_algebra.hpp"
#include "relfree/group.hpp"
#include "relfree/lattice_gf.hpp"
#include "relfree/product_sets.hpp"
#include "relfree/ratfun.hpp"
#include "relfree/version.hpp"

namespace relfree {

namespace {

using nlohmann::ordered_json;

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string join_rationals(const std::vector<mpq_class>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  return os.str();
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trimmed(std::string s) {
  const auto a = s.find_first_not_of(" \t");
  const auto b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

// Elements on the command line: an exact label of the group, otherwise a
// 0-based index.
int parse_element(const FiniteGroup& g, const std::string& token) {
  const std::string t = trimmed(token);
  if (t.empty()) throw std::invalid_argument("empty group element token");
  for (int i = 0; i < g.order; ++i)
    if (g.labels[i] == t) return i;
  if (t.find_first_not_of("0123456789") == std::string::npos) {
    const int idx = std::stoi(t);
    g.check_index(idx);
    return idx;
  }
  throw std::invalid_argument("unknown group element '" + t + "'");
}

std::vector<int> parse_tuple_spec(const FiniteGroup& g, const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_element(g, tok));
  if (out.empty()) throw std::invalid_argument("empty grading tuple");
  return out;
}

mpq_class parse_rational_token(const std::string& token) {
  mpq_class q;
  if (q.set_str(token, 10) != 0) throw std::invalid_argument("bad rational literal '" + token + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + token + "'");
  q.canonicalize();
  return q;
}

void dense_trim_local(std::vector<mpq_class>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

std::optional<std::vector<mpq_class>> dense_try_divide_local(std::vector<mpq_class> p,
                                                             const std::vector<mpq_class>& d) {
  if (p.size() < d.size()) return std::nullopt;
  std::vector<mpq_class> q(p.size() - d.size() + 1, mpq_class(0));
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    mpq_class c = p[i + d.size() - 1] / d.back();
    q[i] = c;
    if (c != 0)
      for (std::size_t j = 0; j < d.size(); ++j) p[i + j] -= c * d[j];
  }
  for (const auto& c : p)
    if (c != 0) return std::nullopt;
  return q;
}

// Display form with the denominator peeled into (1-t^k) factors, e.g.
// "1/(1-t)^2" or "(1 + t^2 + t^3)/(1-t)^2".
std::string pretty_univariate(const UnivariateRational& f) {
  std::vector<mpq_class> den = f.den;
  dense_trim_local(den);
  const std::string ns = dense_poly_to_string(f.num);
  if (den.size() == 1 && den[0] == 1) return ns;

  std::vector<std::pair<int, int>> factors;
  int k = 1;
  while (static_cast<int>(den.size()) > k) {
    std::vector<mpq_class> d(k + 1, mpq_class(0));
    d[0] = 1;
    d[k] = -1;
    auto q = dense_try_divide_local(den, d);
    if (q) {
      dense_trim_local(*q);
      den = std::move(*q);
      if (!factors.empty() && factors.back().first == k)
        ++factors.back().second;
      else
        factors.emplace_back(k, 1);
    } else {
      ++k;
    }
  }

  std::ostringstream os;
  const bool wrap = ns.find(' ') != std::string::npos || (!ns.empty() && ns[0] == '-');
  os << (wrap ? "(" + ns + ")" : ns) << "/";
  for (const auto& [kk, m] : factors) {
    os << "(1-t";
    if (kk > 1) os << "^" << kk;
    os << ")";
    if (m > 1) os << "^" << m;
  }
  if (!(den.size() == 1 && den[0] == 1)) os << "(" << dense_poly_to_string(den) << ")";
  return os.str();
}

void header(std::ostream& out, const std::string& key, const std::string& value) {
  out << "# " << key << "\t" << value << "\n";
}

void write_gf_tsv(std::ostream& out, const MultivariateRational& f) {
  if (f.numerator().is_zero()) {
    out << "num\t0\t" << join_ints(std::vector<int>(f.arity(), 0)) << "\n";
  } else {
    for (const auto& [expo, q] : f.numerator().terms())
      out << "num\t" << q.get_str() << "\t" << join_ints(expo) << "\n";
  }
  for (const auto& fac : f.denominator())
    out << "den\t" << fac.mult << "\t" << join_ints(fac.expo) << "\n";
}

ordered_json gf_json(const MultivariateRational& f) {
  ordered_json j;
  auto num = ordered_json::array();
  for (const auto& [expo, q] : f.numerator().terms()) num.push_back({q.get_str(), expo});
  j["numerator"] = std::move(num);
  auto den = ordered_json::array();
  for (const auto& fac : f.denominator()) den.push_back({fac.mult, fac.expo});
  j["denominator"] = std::move(den);
  return j;
}

ordered_json report_json(const CertReport& r) {
  ordered_json j;
  j["lambda"] = r.lambda;
  j["box"] = r.box;
  j["samples"] = r.samples;
  j["shell_stable"] = r.shell_stable;
  j["sampling_ok"] = r.sampling_ok;
  j["status"] = r.status();
  return j;
}

ordered_json fit_json(const std::optional<UnivariateRational>& fit) {
  if (!fit) return nullptr;
  ordered_json j;
  j["display"] = pretty_univariate(*fit);
  auto num = ordered_json::array();
  for (const auto& c : fit->num) num.push_back(c.get_str());
  auto den = ordered_json::array();
  for (const auto& c : fit->den) den.push_back(c.get_str());
  j["num"] = std::move(num);
  j["den"] = std::move(den);
  return j;
}

void write_fit_tsv(std::ostream& out, const std::optional<UnivariateRational>& fit) {
  if (!fit) {
    out << "status\tno-fit\n";
    return;
  }
  out << "status\tfit\n";
  out << "fit\t" << pretty_univariate(*fit) << "\n";
  out << "num\t" << join_rationals(fit->num) << "\n";
  out << "den\t" << join_rationals(fit->den) << "\n";
}

// Lexicographic visit of every A >= 0 with |A| = n.
void for_each_composition(int n, int r, const std::function<void(const Multidegree&)>& fn) {
  Multidegree a(r, 0);
  std::function<void(int, int)> go = [&](int i, int remaining) {
    if (i == r - 1) {
      a[i] = remaining;
      fn(a);
      a[i] = 0;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      a[i] = v;
      go(i + 1, remaining - v);
    }
    a[i] = 0;
  };
  go(0, n);
}

struct GroupShowArgs {
  std::string group;
  bool json = false;
};

void cmd_group_show(const GroupShowArgs& a, std::ostream& out) {
  const FiniteGroup g = make_group(a.group);
  const auto gprime = commutator_subgroup(g);
  const auto ab = abelianization(g);
  if (a.json) {
    ordered_json j;
    j["command"] = "group show";
    j["group"] = a.group;
    j["name"] = g.name;
    j["order"] = g.order;
    j["abelian"] = g.is_abelian();
    j["commutator_subgroup"] = gprime.elements;
    j["abelianization_labels"] = ab.labels;
    auto els = ordered_json::array();
    for (int i = 0; i < g.order; ++i) {
      ordered_json e;
      e["index"] = i;
      e["label"] = g.labels[i];
      e["order"] = g.element_order(i);
      e["inverse"] = g.inverse(i);
      e["abelianized"] = ab.label_of[i];
      els.push_back(std::move(e));
    }
    j["elements"] = std::move(els);
    out << j.dump(2) << "\n";
    return;
  }
  header(out, "command", "group show");
  header(out, "group", a.group);
  header(out, "order", std::to_string(g.order));
  header(out, "abelian", g.is_abelian() ? "true" : "false");
  header(out, "commutator-subgroup", join_ints(gprime.elements));
  header(out, "abelianization-labels", join_ints(ab.labels));
  out << "index\tlabel\torder\tinverse\tabelianized\n";
  for (int i = 0; i < g.order; ++i)
    out << i << "\t" << g.labels[i] << "\t" << g.element_order(i) << "\t" << g.inverse(i) << "\t"
        << ab.label_of[i] << "\n";
}

struct CocycleArgs {
  std::string group;
  std::string cocycle;
  bool json = false;
};

void cmd_group_check_cocycle(const CocycleArgs& a, std::ostream& out) {
  const FiniteGroup g = make_group(a.group);
  load_cocycle(g, a.cocycle);  // throws with the violated triple on failure
  if (a.json) {
    ordered_json j;
    j["command"] = "group check-cocycle";
    j["group"] = a.group;
    j["cocycle"] = a.cocycle;
    j["valid"] = true;
    out << j.dump(2) << "\n";
    return;
  }
  header(out, "command", "group check-cocycle");
  header(out, "group", a.group);
  header(out, "cocycle", a.cocycle);
  out << "cocycle\tvalid\n";
}

struct GroupAlgebraArgs {
  std::string group;
  std::string cocycle;  // optional path
};

void cmd_group_algebra(const GroupAlgebraArgs& a, std::ostream& out) {
  const FiniteGroup g = make_group(a.group);
  if (a.cocycle.empty()) {
    out << algebra_to_json(group_algebra_spec(g));
  } else {
    const Cocycle alpha = load_cocycle(g, a.cocycle);
    out << algebra_to_json(group_algebra_spec(g, &alpha));
  }
}

struct HilbertFgArgs {
  std::string group;
  std::string tuple;
  std::string component;  // empty: total series
  int box = -1;           // -1: default 2|G|
  int terms = 20;
  int guard = 5;
  int samples = 200;
  std::uint64_t seed = 0;
  bool closed_form = false;
  bool univariate = false;
  bool json = false;
};

void cmd_hilbert_fg(const HilbertFgArgs& a, std::ostream& out) {
  const FiniteGroup g = make_group(a.group);
  const auto degrees = parse_tuple_spec(g, a.tuple);
  ProductSetCache cache(g, degrees);
  const int box = a.box >= 0 ? a.box : 2 * g.order;
  const int r = cache.arity();

  ordered_json j;
  if (!a.json) {
    header(out, "command", "hilbert fg");
    header(out, "group", a.group);
    header(out, "tuple", join_ints(degrees));
    header(out, "box", std::to_string(box));
    header(out, "terms", std::to_string(a.terms));
    header(out, "seed", std::to_string(a.seed));
    header(out, "samples", std::to_string(a.samples));
  } else {
    j["command"] = "hilbert fg";
    j["group"] = a.group;
    j["tuple"] = degrees;
    j["box"] = box;
    j["terms"] = a.terms;
    j["seed"] = a.seed;
    j["samples"] = a.samples;
  }

  if (a.component.empty()) {
    if (a.closed_form) {
      const TotalGF tot = hilbert_gf_total(cache, box, a.seed, a.samples);
      if (a.json) {
        j["status"] = tot.status();
        auto reports = ordered_json::array();
        for (const auto& rep : tot.reports) reports.push_back(report_json(rep));
        j["levels"] = std::move(reports);
        j["gf"] = gf_json(tot.gf);
        out << j.dump(2) << "\n";
      } else {
        header(out, "status", tot.status());
        write_gf_tsv(out, tot.gf);
      }
      return;
    }
    if (a.univariate) {
      const auto c = total_series_prefix(cache, a.terms);
      if (a.json) {
        auto rows = ordered_json::array();
        for (std::size_t n = 0; n < c.size(); ++n) rows.push_back({n, c[n].get_str()});
        j["coefficients"] = std::move(rows);
        out << j.dump(2) << "\n";
      } else {
        out << "n\tcoefficient\n";
        for (std::size_t n = 0; n < c.size(); ++n) out << n << "\t" << c[n].get_str() << "\n";
      }
      return;
    }
    if (a.json) {
      auto rows = ordered_json::array();
      for (int n = 0; n <= a.terms; ++n)
        for_each_composition(n, r, [&](const Multidegree& md) {
          rows.push_back({md, cache.total_dimension(md)});
        });
      j["coefficients"] = std::move(rows);
      out << j.dump(2) << "\n";
    } else {
      out << "A\tcoefficient\n";
      for (int n = 0; n <= a.terms; ++n)
        for_each_composition(n, r, [&](const Multidegree& md) {
          out << join_ints(md) << "\t" << cache.total_dimension(md) << "\n";
        });
    }
    return;
  }

  const int comp = parse_element(g, a.component);
  if (a.closed_form) {
    const ComponentGF cg = hilbert_gf_component(cache, comp, box, a.terms, a.guard, a.seed, a.samples);
    if (a.json) {
      j["component"] = comp;
      j["status"] = cg.status;
      j["level"] = report_json(cg.level_report);
      j["remainder_bounded"] = cg.remainder_bounded;
      if (cg.closed_form) {
        j["gf"] = gf_json(cg.gf);
        auto rem = ordered_json::array();
        for (const auto& p : cg.remainder) rem.push_back(p);
        j["remainder"] = std::move(rem);
      } else {
        auto rows = ordered_json::array();
        for (std::size_t n = 0; n < cg.coefficients.size(); ++n)
          rows.push_back({n, cg.coefficients[n].get_str()});
        j["coefficients"] = std::move(rows);
        j["fit"] = fit_json(cg.fit);
      }
      out << j.dump(2) << "\n";
    } else {
      header(out, "component", std::to_string(comp));
      header(out, "status", cg.status);
      if (cg.closed_form) {
        write_gf_tsv(out, cg.gf);
      } else {
        out << "n\tcoefficient\n";
        for (std::size_t n = 0; n < cg.coefficients.size(); ++n)
          out << n << "\t" << cg.coefficients[n].get_str() << "\n";
        write_fit_tsv(out, cg.fit);
      }
    }
    return;
  }
  if (a.univariate) {
    const auto c = component_series_prefix(cache, comp, a.terms);
    if (a.json) {
      j["component"] = comp;
      auto rows = ordered_json::array();
      for (std::size_t n = 0; n < c.size(); ++n) rows.push_back({n, c[n].get_str()});
      j["coefficients"] = std::move(rows);
      out << j.dump(2) << "\n";
    } else {
      header(out, "component", std::to_string(comp));
      out << "n\tcoefficient\n";
      for (std::size_t n = 0; n < c.size(); ++n) out << n << "\t" << c[n].get_str() << "\n";
    }
    return;
  }
  if (a.json) {
    j["component"] = comp;
    auto rows = ordered_json::array();
    for (int n = 0; n <= a.terms; ++n)
      for_each_composition(n, r, [&](const Multidegree& md) {
        rows.push_back({md, cache.component_dimension(md, comp)});
      });
    j["coefficients"] = std::move(rows);
    out << j.dump(2) << "\n";
  } else {
    header(out, "component", std::to_string(comp));
    out << "A\tcoefficient\n";
    for (int n = 0; n <= a.terms; ++n)
      for_each_composition(n, r, [&](const Multidegree& md) {
        out << join_ints(md) << "\t" << cache.component_dimension(md, comp) << "\n";
      });
  }
}

struct CodimArgs {
  std::string group;
  int max_n = 1;
  bool json = false;
};

void cmd_codim(const CodimArgs& a, std::ostream& out) {
  const FiniteGroup g = make_group(a.group);
  CodimComputer computer(g);
  const auto rows = computer.table(a.max_n);
  if (a.json) {
    ordered_json j;
    j["command"] = "codim";
    j["group"] = a.group;
    j["max_n"] = a.max_n;
    auto arr = ordered_json::array();
    for (const auto& rec : rows) {
      ordered_json e;
      e["n"] = rec.n;
      e["c"] = rec.value.get_str();
      e["lower"] = rec.lower.get_str();
      e["upper"] = rec.upper.get_str();
      e["ratio"] = rec.ratio.get_str();
      e["exp_estimate"] = nth_root_estimate(rec.value, rec.n);
      arr.push_back(std::move(e));
    }
    j["rows"] = std::move(arr);
    out << j.dump(2) << "\n";
    return;
  }
  header(out, "command", "codim");
  header(out, "group", a.group);
  header(out, "max-n", std::to_string(a.max_n));
  out << "n\tc_n\tlower\tupper\tratio\texp_estimate\n";
  for (const auto& rec : rows)
    out << rec.n << "\t" << rec.value.get_str() << "\t" << rec.lower.get_str() << "\t"
        << rec.upper.get_str() << "\t" << rec.ratio.get_str() << "\t"
        << fmt_double(nth_root_estimate(rec.value, rec.n)) << "\n";
}

struct RichwordArgs {
  std::string group;
  std::string tuple;
  std::string target;
  bool json = false;
};

void cmd_richword(const RichwordArgs& a, std::ostream& out) {
  const FiniteGroup g = make_group(a.group);
  const auto degrees = parse_tuple_spec(g, a.tuple);
  const GradingTuple tuple = make_grading_tuple(g, degrees);
  const int target = parse_element(g, a.target);
  const auto word = rich_word(tuple, target);
  const auto md = word_multidegree(word, tuple.arity());
  const ProductSet ps = product_set(tuple, md);
  if (a.json) {
    ordered_json j;
    j["command"] = "richword";
    j["group"] = a.group;
    j["tuple"] = degrees;
    j["target"] = target;
    j["word"] = word;
    j["multidegree"] = md;
    j["products"] = ps.elements;
    j["coset"] = ps.coset_label;
    out << j.dump(2) << "\n";
    return;
  }
  header(out, "command", "richword");
  header(out, "group", a.group);
  header(out, "tuple", join_ints(degrees));
  header(out, "target", std::to_string(target));
  out << "word\t" << join_ints(word) << "\n";
  out << "multidegree\t" << join_ints(md) << "\n";
  out << "products\t" << join_ints(ps.elements) << "\n";
  out << "coset\t" << ps.coset_label << "\n";
}

struct FitArgs {
  std::string input;
  int guard = 5;
  bool json = false;
};

void cmd_fit(const FitArgs& a, std::ostream& out) {
  std::ifstream in(a.input);
  if (!in) throw std::invalid_argument("cannot open coefficient file: " + a.input);
  SeriesPrefix c;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    c.push_back(parse_rational_token(t));
  }
  const auto fit = rational_fit(c, a.guard);
  if (a.json) {
    ordered_json j;
    j["command"] = "fit";
    j["input"] = a.input;
    j["guard"] = a.guard;
    j["terms"] = c.size();
    j["status"] = fit ? "fit" : "no-fit";
    j["fit"] = fit_json(fit);
    out << j.dump(2) << "\n";
    return;
  }
  header(out, "command", "fit");
  header(out, "input", a.input);
  header(out, "guard", std::to_string(a.guard));
  header(out, "terms", std::to_string(c.size()));
  write_fit_tsv(out, fit);
}

struct HilbertGenericArgs {
  std::string algebra;
  std::string tuple;
  std::string component;
  int terms = 6;
  bool exact = false;
  bool probabilistic = false;
  bool fit = false;
  bool json = false;
  std::uint64_t seed = 0;
};

void cmd_hilbert_generic(const HilbertGenericArgs& a, std::ostream& out) {
  const GradedAlgebraSpec spec = load_algebra(a.algebra);
  const auto degrees = parse_tuple_spec(spec.group, a.tuple);
  const GradingTuple tuple = make_grading_tuple(spec.group, degrees);
  std::optional<int> comp;
  if (!a.component.empty()) comp = parse_element(spec.group, a.component);
  const RankMode mode = a.exact          ? RankMode::exact
                        : a.probabilistic ? RankMode::probabilistic
                                          : RankMode::automatic;
  const char* mode_name = a.exact ? "exact" : a.probabilistic ? "probabilistic" : "auto";

  std::vector<mpz_class> values;
  std::vector<bool> exact_rows;
  for (int n = 0; n <= a.terms; ++n) {
    mpz_class sum = 0;
    bool exact_row = true;
    for_each_composition(n, tuple.arity(), [&](const Multidegree& md) {
      const RankResult rr = component_dimension_generic(spec, tuple, md, comp, mode, a.seed);
      sum += rr.value;
      exact_row = exact_row && rr.exact;
    });
    values.push_back(std::move(sum));
    exact_rows.push_back(exact_row);
  }

  std::optional<UnivariateRational> fit;
  if (a.fit) {
    SeriesPrefix prefix;
    for (const auto& v : values) prefix.emplace_back(v);
    fit = rational_fit(prefix, 5);
  }

  if (a.json) {
    ordered_json j;
    j["command"] = "hilbert generic";
    j["algebra"] = a.algebra;
    j["group"] = spec.group.name;
    j["tuple"] = degrees;
    j["terms"] = a.terms;
    j["mode"] = mode_name;
    j["seed"] = a.seed;
    if (comp) j["component"] = *comp;
    auto rows = ordered_json::array();
    for (std::size_t n = 0; n < values.size(); ++n)
      rows.push_back({n, values[n].get_str(), exact_rows[n] ? "exact" : "lower-bound"});
    j["coefficients"] = std::move(rows);
    if (a.fit) j["fit"] = fit_json(fit);
    out << j.dump(2) << "\n";
    return;
  }
  header(out, "command", "hilbert generic");
  header(out, "algebra", a.algebra);
  header(out, "group", spec.group.name);
  header(out, "tuple", join_ints(degrees));
  header(out, "terms", std::to_string(a.terms));
  header(out, "mode", mode_name);
  header(out, "seed", std::to_string(a.seed));
  if (comp) header(out, "component", std::to_string(*comp));
  out << "n\tcoefficient\tkind\n";
  for (std::size_t n = 0; n < values.size(); ++n)
    out << n << "\t" << values[n].get_str() << "\t" << (exact_rows[n] ? "exact" : "lower-bound")
        << "\n";
  if (a.fit) write_fit_tsv(out, fit);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert series and codimension sequences of relatively free graded algebras"};
  app.name("relfree");
  app.set_version_flag("--version", std::string("relfree ") + kVersion + " (format " +
                                        std::to_string(kFormatVersion) + ")");
  app.require_subcommand(1);

  auto* group = app.add_subcommand("group", "Group inspection and cocycle utilities");
  group->require_subcommand(1);

  GroupShowArgs show_args;
  auto* show = group->add_subcommand("show", "Print the element ordering and structural data");
  show->add_option("--group", show_args.group, "Group spec (C<n>, D<n>, S<n>, Q8, products with x, table:<path>)")
      ->required();
  show->add_flag("--json", show_args.json, "JSON output");

  CocycleArgs cocycle_args;
  auto* checkc = group->add_subcommand("check-cocycle", "Validate a 2-cocycle file against a group");
  checkc->add_option("--group", cocycle_args.group, "Group spec")->required();
  checkc->add_option("--cocycle", cocycle_args.cocycle, "Cocycle file (order x order rationals)")->required();
  checkc->add_flag("--json", cocycle_args.json, "JSON output");

  GroupAlgebraArgs galg_args;
  auto* galg = group->add_subcommand("algebra", "Emit the (twisted) group algebra as an algebra JSON file");
  galg->add_option("--group", galg_args.group, "Group spec")->required();
  galg->add_option("--cocycle", galg_args.cocycle, "Optional cocycle file for the twist");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series computations");
  hilbert->require_subcommand(1);

  HilbertFgArgs fg_args;
  auto* fg = hilbert->add_subcommand("fg", "Series of the relatively free algebra of a (twisted) group algebra");
  fg->add_option("--group", fg_args.group, "Group spec")->required();
  fg->add_option("--tuple", fg_args.tuple, "Comma-separated generator degrees (indices or labels)")->required();
  fg->add_option("--component", fg_args.component, "Restrict to one g-component");
  fg->add_option("--box", fg_args.box, "Search box bound B (default 2|G|)")->check(CLI::NonNegativeNumber);
  fg->add_option("--terms", fg_args.terms, "Coefficient table order (default 20)")->check(CLI::NonNegativeNumber);
  fg->add_option("--guard", fg_args.guard, "Guard coefficients for the fitted fallback (default 5)")
      ->check(CLI::NonNegativeNumber);
  fg->add_option("--samples", fg_args.samples, "Certification sample count (default 200)")
      ->check(CLI::NonNegativeNumber);
  fg->add_option("--seed", fg_args.seed, "Random seed (default 0)");
  fg->add_flag("--closed-form", fg_args.closed_form, "Print the rational closed form with its certification");
  fg->add_flag("--univariate", fg_args.univariate, "Total-degree coefficient table");
  fg->add_flag("--json", fg_args.json, "JSON output");

  HilbertGenericArgs gen_args;
  auto* gen = hilbert->add_subcommand("generic", "Series coefficients of a finite-dimensional graded algebra");
  gen->add_option("--algebra", gen_args.algebra, "Algebra JSON file")->required();
  gen->add_option("--tuple", gen_args.tuple, "Comma-separated generator degrees (indices or labels)")->required();
  gen->add_option("--terms", gen_args.terms, "Coefficient table order (default 6)")->check(CLI::NonNegativeNumber);
  gen->add_option("--component", gen_args.component, "Restrict to one g-component");
  auto* exact_flag = gen->add_flag("--exact", gen_args.exact, "Force exact symbolic ranks");
  auto* prob_flag = gen->add_flag("--probabilistic", gen_args.probabilistic, "Force probabilistic ranks");
  exact_flag->excludes(prob_flag);
  prob_flag->excludes(exact_flag);
  gen->add_flag("--fit", gen_args.fit, "Fit a rational closed form to the coefficients");
  gen->add_option("--seed", gen_args.seed, "Random seed (default 0)");
  gen->add_flag("--json", gen_args.json, "JSON output");

  CodimArgs codim_args;
  auto* codim_cmd = app.add_subcommand("codim", "Graded codimension sequence with its proved bounds");
  codim_cmd->add_option("--group", codim_args.group, "Group spec")->required();
  codim_cmd->add_option("--max-n", codim_args.max_n, "Largest degree")->required()->check(CLI::PositiveNumber);
  codim_cmd->add_flag("--json", codim_args.json, "JSON output");

  RichwordArgs rich_args;
  auto* rich = app.add_subcommand("richword", "Word whose permutations exhaust a full coset");
  rich->add_option("--group", rich_args.group, "Group spec")->required();
  rich->add_option("--tuple", rich_args.tuple, "Comma-separated generator degrees (indices or labels)")->required();
  rich->add_option("--target", rich_args.target, "Target element (index or label)")->required();
  rich->add_flag("--json", rich_args.json, "JSON output");

  FitArgs fit_args;
  auto* fit_cmd = app.add_subcommand("fit", "Fit a minimal rational function to a coefficient file");
  fit_cmd->add_option("--input", fit_args.input, "File with one coefficient per line")->required();
  fit_cmd->add_option("--guard", fit_args.guard, "Held-out verification coefficients (default 5)")
      ->check(CLI::NonNegativeNumber);
  fit_cmd->add_flag("--json", fit_args.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (show->parsed()) {
      cmd_group_show(show_args, out);
    } else if (checkc->parsed()) {
      cmd_group_check_cocycle(cocycle_args, out);
    } else if (galg->parsed()) {
      cmd_group_algebra(galg_args, out);
    } else if (fg->parsed()) {
      cmd_hilbert_fg(fg_args, out);
    } else if (gen->parsed()) {
      cmd_hilbert_generic(gen_args, out);
    } else if (codim_cmd->parsed()) {
      cmd_codim(codim_args, out);
    } else if (rich->parsed()) {
      cmd_richword(rich_args, out);
    } else if (fit_cmd->parsed()) {
      cmd_fit(fit_args, out);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace relfree
