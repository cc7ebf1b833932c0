#include "cacti/pconj.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

namespace cacti {

GroupSpec GroupSpec::integers() { return GroupSpec{}; }

GroupSpec GroupSpec::finite(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("a multiplication table needs at least one element");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error("multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw Error("multiplication table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error("multiplication table is not associative");
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a) ok = ok && table[e][a] == a && table[a][e] == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw Error("multiplication table has no identity");
  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0) throw Error("a table element has no inverse");
  }
  GroupSpec s;
  s.kind = Kind::finite;
  s.table = std::move(table);
  s.identity = identity;
  s.inverse = std::move(inverse);
  return s;
}

GroupSpec GroupSpec::symmetric3() {
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int t = 0; t < 6; ++t)
      if (perms[t] == p) return t;
    throw Error("permutation lookup failed");
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = index_of(c);
    }
  return finite(std::move(table));
}

int GroupSpec::order() const {
  return is_finite() ? static_cast<int>(table.size()) : -1;
}

std::int64_t GroupSpec::id() const { return is_finite() ? identity : 0; }

std::int64_t GroupSpec::mul(std::int64_t a, std::int64_t b) const {
  return is_finite() ? table[a][b] : a + b;
}

std::int64_t GroupSpec::inv(std::int64_t a) const {
  return is_finite() ? inverse[a] : -a;
}

std::vector<std::int64_t> GroupSpec::sample_elements(int window) const {
  std::vector<std::int64_t> out;
  if (is_finite()) {
    for (int a = 0; a < order(); ++a) out.push_back(a);
  } else {
    for (int a = -window; a <= window; ++a) out.push_back(a);
  }
  return out;
}

std::vector<std::int64_t> GroupSpec::letter_elements() const {
  std::vector<std::int64_t> out;
  if (is_finite()) {
    for (int a = 0; a < order(); ++a)
      if (a != identity) out.push_back(a);
  } else {
    out.push_back(1);
  }
  return out;
}

FreeProductWord reduce_word(std::vector<FreeLetter> letters, const GroupSpec& G) {
  FreeProductWord w;
  for (const FreeLetter& l : letters) {
    if (l.elem == G.id()) continue;
    if (!w.letters.empty() && w.letters.back().factor == l.factor) {
      std::int64_t prod = G.mul(w.letters.back().elem, l.elem);
      if (prod == G.id())
        w.letters.pop_back();
      else
        w.letters.back().elem = prod;
    } else {
      w.letters.push_back(l);
    }
  }
  return w;
}

FreeProductWord FreeProductWord::generator(int factor, std::int64_t elem,
                                           const GroupSpec& G) {
  return reduce_word({FreeLetter{factor, elem}}, G);
}

std::string FreeProductWord::str() const {
  if (letters.empty()) return "e";
  std::string out;
  for (const FreeLetter& l : letters) {
    if (!out.empty()) out += " ";
    out += "x" + std::to_string(l.factor) + "^" + std::to_string(l.elem);
  }
  return out;
}

FreeProductWord concat(const FreeProductWord& a, const FreeProductWord& b,
                       const GroupSpec& G) {
  std::vector<FreeLetter> joined = a.letters;
  joined.insert(joined.end(), b.letters.begin(), b.letters.end());
  return reduce_word(std::move(joined), G);
}

FreeProductWord apply_generator(const PartialConj& a, const FreeProductWord& w,
                                const GroupSpec& G) {
  std::vector<FreeLetter> out;
  for (const FreeLetter& l : w.letters) {
    if (l.factor == a.j) {
      out.push_back({a.i, G.inv(a.g)});
      out.push_back(l);
      out.push_back({a.i, a.g});
    } else {
      out.push_back(l);
    }
  }
  return reduce_word(std::move(out), G);
}

FreeProductWord apply_product(const std::vector<PartialConj>& word,
                              const FreeProductWord& w, const GroupSpec& G) {
  FreeProductWord out = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = apply_generator(*it, out, G);
  return out;
}

namespace {

std::string conj_str(const PartialConj& a) {
  return "alpha^" + std::to_string(a.g) + "_{" + std::to_string(a.i) + "," +
         std::to_string(a.j) + "}";
}

std::string product_str(const std::vector<PartialConj>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (const auto& a : word) {
    if (!out.empty()) out += ".";
    out += conj_str(a);
  }
  return out;
}

// Equality of the induced endomorphisms, tested on one letter per factor and
// per generating element; enough because both sides are homomorphisms.
bool same_automorphism(const std::vector<PartialConj>& lhs,
                       const std::vector<PartialConj>& rhs, int factors,
                       const GroupSpec& G, std::string* witness) {
  for (int k = 1; k <= factors; ++k)
    for (std::int64_t c : G.letter_elements()) {
      FreeProductWord x = FreeProductWord::generator(k, c, G);
      FreeProductWord l = apply_product(lhs, x, G);
      FreeProductWord r = apply_product(rhs, x, G);
      if (!(l == r)) {
        if (witness)
          *witness = product_str(lhs) + " and " + product_str(rhs) +
                     " differ on " + x.str() + ": " + l.str() + " vs " + r.str();
        return false;
      }
    }
  return true;
}

struct Tuple {
  int family = 1;  // 1..4 as in RelationReport field order
  int i = 0, j = 0, k = 0, l = 0;
};

struct TupleOutcome {
  bool ok = true;
  bool weakened_found = false;
  std::int64_t checked = 0;
  std::string violation;
};

TupleOutcome run_tuple(const Tuple& t, int n, const GroupSpec& G,
                       const std::vector<std::int64_t>& sample) {
  TupleOutcome out;
  auto record = [&](bool ok, const std::string& msg) {
    ++out.checked;
    if (!ok && out.ok) {
      out.ok = false;
      out.violation = msg;
    }
  };
  for (std::int64_t g : sample)
    for (std::int64_t h : sample) {
      if (t.family == 1) {
        PartialConj ag{t.i, t.j, g}, ah{t.i, t.j, h};
        PartialConj agh{t.i, t.j, G.mul(g, h)};
        std::string w;
        record(same_automorphism({ag, ah}, {agh}, n, G, &w), w);
      } else if (t.family == 2) {
        PartialConj A{t.i, t.j, g}, B{t.i, t.k, h};
        std::string w;
        record(same_automorphism({A, B}, {B, A}, n, G, &w), w);
      } else if (t.family == 3) {
        PartialConj A{t.i, t.j, g}, B{t.k, t.l, h};
        std::string w;
        record(same_automorphism({A, B}, {B, A}, n, G, &w), w);
      } else {
        PartialConj A1{t.i, t.j, g}, A2{t.i, t.k, g}, B{t.j, t.k, h};
        std::string w;
        record(same_automorphism({A1, A2, B}, {B, A1, A2}, n, G, &w), w);
        if (!same_automorphism({A1, B}, {B, A1}, n, G, nullptr))
          out.weakened_found = true;
      }
    }
  return out;
}

}  // namespace

RelationReport verify_relations(int n, const GroupSpec& G,
                                const std::vector<std::int64_t>& sample, int jobs) {
  if (n < 2) throw Error("relations need arity at least 2");
  std::vector<Tuple> tuples;
  for (int i = 1; i <= n; ++i)
    for (int j = 2; j <= n; ++j) {
      if (i == j) continue;
      tuples.push_back({1, i, j, 0, 0});
      for (int k = 2; k <= n; ++k) {
        if (k == i || k == j) continue;
        tuples.push_back({2, i, j, k, 0});
        tuples.push_back({4, i, j, k, 0});
      }
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        for (int l = 2; l <= n; ++l) {
          if (l == i || l == j || l == k) continue;
          tuples.push_back({3, i, j, k, l});
        }
      }
    }

  std::vector<TupleOutcome> outcomes(tuples.size());
  if (jobs <= 1) {
    for (std::size_t t = 0; t < tuples.size(); ++t)
      outcomes[t] = run_tuple(tuples[t], n, G, sample);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (std::size_t t = next.fetch_add(1); t < tuples.size(); t = next.fetch_add(1))
        outcomes[t] = run_tuple(tuples[t], n, G, sample);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  RelationReport report;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const TupleOutcome& o = outcomes[t];
    report.checked += o.checked;
    if (o.weakened_found) report.weakened_fails = true;
    if (!o.ok) {
      bool* field = tuples[t].family == 1   ? &report.composition
                    : tuples[t].family == 2 ? &report.same_source
                    : tuples[t].family == 3 ? &report.disjoint
                                            : &report.correction;
      *field = false;
      if (report.first_violation.empty()) report.first_violation = o.violation;
    }
  }
  return report;
}

std::vector<PartialConj> expand_tree_element(const RootedTree& t, int j,
                                             std::int64_t g) {
  validate_tree(t);
  if (j < 1 || j > t.n || t.parent[j] == 0)
    throw Error("the labeled edge must point into a non-root vertex");
  int i = t.parent[j];
  std::vector<int> reach;
  std::vector<int> stack{j};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    reach.push_back(v);
    for (int c : t.children(v)) stack.push_back(c);
  }
  std::sort(reach.begin(), reach.end());
  std::vector<PartialConj> out;
  for (int v : reach) out.push_back({i, v, g});
  return out;
}

namespace {

RootedTree generator_tree(int n, int i, int j) {
  RootedTree t;
  t.n = n;
  t.root = 1;
  t.parent.assign(n + 1, 0);
  for (int v = 2; v <= n; ++v) t.parent[v] = 1;
  t.parent[j] = i;
  validate_tree(t);
  return t;
}

RootedTree corolla(int m, int s) {
  RootedTree t;
  t.n = m;
  t.root = s;
  t.parent.assign(m + 1, 0);
  for (int v = 1; v <= m; ++v)
    if (v != s) t.parent[v] = s;
  return t;
}

// Labels over the two-point label space {identity, g}; degrees both zero.
DecoratedTree with_marked_edge(const RootedTree& t, int target) {
  DecoratedTree d;
  d.tree = t;
  d.labels.assign(t.n + 1, -1);
  for (int v = 1; v <= t.n; ++v)
    if (v != t.root) d.labels[v] = v == target ? 1 : 0;
  return d;
}

int marked_target(const DecoratedTree& d) {
  for (int v = 1; v <= d.tree.n; ++v)
    if (v != d.tree.root && d.labels[v] == 1) return v;
  throw Error("composite tree lost its marked edge");
}

}  // namespace

CompositionReport verify_composition_formulas(int n, int m, const GroupSpec& G,
                                              const std::vector<std::int64_t>& sample) {
  if (n < 2 || m < 2) throw Error("composition formulas need arities at least 2");
  const std::vector<int> degrees{0, 0};
  CompositionReport report;
  auto record = [&](const std::vector<PartialConj>& lhs,
                    const std::vector<PartialConj>& rhs, const std::string& where) {
    ++report.checked;
    std::string w;
    if (!same_automorphism(lhs, rhs, n + m - 1, G, &w) && report.pass) {
      report.pass = false;
      report.first_violation = where + ": " + w;
    }
  };

  for (int i = 1; i <= n; ++i)
    for (int j = 2; j <= n; ++j) {
      if (i == j) continue;
      DecoratedTree rep = with_marked_edge(generator_tree(n, i, j), j);
      for (std::int64_t g : sample) {
        // identity o_a generator: the corolla keeps root 1
        for (int a = 1; a <= m; ++a) {
          auto [comp, parity] =
              compose_decorated(with_marked_edge(corolla(m, 1), 0), a, rep, degrees);
          (void)parity;
          std::vector<PartialConj> lhs =
              expand_tree_element(comp.tree, marked_target(comp), g);
          std::vector<PartialConj> rhs{{i + a - 1, j + a - 1, g}};
          record(lhs, rhs, "e o_" + std::to_string(a) + " " +
                               conj_str(PartialConj{i, j, g}));
        }
        // generator o_b identity over every inner root landing back at root 1
        for (int b = 1; b <= n; ++b)
          for (int s = 1; s <= m; ++s) {
            if (b == 1 && s != 1) continue;
            auto [comp, parity] =
                compose_decorated(rep, b, with_marked_edge(corolla(m, s), 0), degrees);
            (void)parity;
            std::vector<PartialConj> lhs =
                expand_tree_element(comp.tree, marked_target(comp), g);
            auto shift = [&](int v) {
              if (v < b) return v;
              if (v > b) return v + m - 1;
              return v + s - 1;
            };
            std::vector<PartialConj> rhs;
            if (b == j) {
              for (int l = 1; l <= m; ++l) rhs.push_back({shift(i), l + b - 1, g});
            } else {
              rhs.push_back({shift(i), shift(j), g});
            }
            record(lhs, rhs, conj_str(PartialConj{i, j, g}) + " o_" +
                                 std::to_string(b) + " e(root " + std::to_string(s) +
                                 ")");
          }
      }
    }
  return report;
}

}  // namespace cacti
