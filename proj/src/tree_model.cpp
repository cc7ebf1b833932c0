#include "cacti/tree_model.hpp"

#include <algorithm>
#include <sstream>

namespace cacti {

RootedTree RootedTree::single() {
  RootedTree t;
  t.n = 1;
  t.root = 1;
  t.parent = {0, 0};
  return t;
}

std::vector<int> RootedTree::children(int v) const {
  std::vector<int> c;
  for (int w = 1; w <= n; ++w)
    if (w != root && parent[w] == v) c.push_back(w);
  return c;
}

int RootedTree::depth(int v) const {
  int d = 0;
  while (v != root) {
    v = parent[v];
    ++d;
  }
  return d;
}

bool RootedTree::operator<(const RootedTree& o) const {
  if (n != o.n) return n < o.n;
  if (root != o.root) return root < o.root;
  return parent < o.parent;
}

void validate_tree(const RootedTree& t) {
  if (t.n < 1 || static_cast<int>(t.parent.size()) != t.n + 1 || t.root < 1 || t.root > t.n)
    throw Error("malformed tree");
  if (t.parent[t.root] != 0) throw Error("root has a parent");
  for (int v = 1; v <= t.n; ++v) {
    if (v == t.root) continue;
    if (t.parent[v] < 1 || t.parent[v] > t.n || t.parent[v] == v)
      throw Error("bad parent of vertex " + std::to_string(v));
    int u = v, steps = 0;
    while (u != t.root) {
      u = t.parent[u];
      if (++steps > t.n) throw Error("parent map has a cycle at vertex " + std::to_string(v));
    }
  }
}

int level(const RootedTree& t) {
  int total = 0;
  for (int v = 1; v <= t.n; ++v) total += t.depth(v);
  return total;
}

namespace {

bool reaches_zero(const std::vector<int>& parent, int v, int n) {
  int steps = 0;
  while (v != 0) {
    v = parent[v];
    if (++steps > n) return false;
  }
  return true;
}

}  // namespace

std::vector<RootedTree> enumerate_rooted_trees(int n, int bound) {
  if (n < 1) throw Error("arity must be positive");
  if (n > bound)
    throw Error("tree enumeration bound exceeded: n = " + std::to_string(n));
  std::vector<RootedTree> out;
  RootedTree t;
  t.n = n;
  for (int root = 1; root <= n; ++root) {
    t.root = root;
    t.parent.assign(n + 1, 0);
    std::vector<int> vs;
    for (int v = 1; v <= n; ++v)
      if (v != root) vs.push_back(v);
    // odometer over parent choices, lexicographic in the parent tuple
    std::vector<int> pick(vs.size(), 0);
    auto first_choice = [&](std::size_t k) { return vs[k] == 1 ? 2 : 1; };
    auto next_choice = [&](std::size_t k, int c) { return c + 1 == vs[k] ? c + 2 : c + 1; };
    for (std::size_t k = 0; k < vs.size(); ++k) pick[k] = first_choice(k);
    for (;;) {
      for (std::size_t k = 0; k < vs.size(); ++k) t.parent[vs[k]] = pick[k];
      bool ok = true;
      for (int v = 1; v <= n && ok; ++v)
        if (v != root) ok = reaches_zero(t.parent, v, n);
      if (ok) out.push_back(t);
      // advance
      int k = static_cast<int>(vs.size()) - 1;
      while (k >= 0) {
        pick[k] = next_choice(k, pick[k]);
        if (pick[k] <= n) break;
        pick[k] = first_choice(k);
        --k;
      }
      if (k < 0) break;
    }
  }
  return out;
}

bool DecoratedTree::operator<(const DecoratedTree& o) const {
  if (!(tree == o.tree)) return tree < o.tree;
  return labels < o.labels;
}

std::string DecoratedTree::str(const std::vector<std::string>& label_names) const {
  std::ostringstream os;
  os << "root:" << tree.root << "; parents:";
  bool first = true;
  for (int v = 1; v <= tree.n; ++v) {
    if (v == tree.root) continue;
    os << (first ? " " : ", ") << v << "->" << tree.parent[v];
    first = false;
  }
  os << "; labels:";
  first = true;
  for (int v = 1; v <= tree.n; ++v) {
    if (v == tree.root) continue;
    os << (first ? " " : ", ") << v << ":" << label_names.at(labels[v]);
    first = false;
  }
  return os.str();
}

TreeVector::TreeVector(const DecoratedTree& t, const Scalar& c) : field(c.field()) {
  if (!c.is_zero()) terms.push_back({t, c});
}

void TreeVector::add_term(const DecoratedTree& t, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms.begin(), terms.end(), t,
                             [](const auto& a, const DecoratedTree& b) { return a.first < b; });
  if (it != terms.end() && it->first == t) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  } else {
    terms.insert(it, {t, c});
  }
}

TreeVector& TreeVector::operator+=(const TreeVector& o) {
  for (const auto& [t, c] : o.terms) add_term(t, c);
  return *this;
}

TreeVector TreeVector::operator*(const Scalar& c) const {
  TreeVector out(field);
  if (c.is_zero()) return out;
  out.terms = terms;
  for (auto& [t, v] : out.terms) v *= c;
  return out;
}

int koszul_parity(std::vector<std::pair<int, int>> tokens) {
  int parity = 0;
  for (std::size_t x = 0; x < tokens.size(); ++x)
    for (std::size_t y = x + 1; y < tokens.size(); ++y)
      if (tokens[x].first > tokens[y].first)
        parity ^= tokens[x].second & tokens[y].second & 1;
  return parity;
}

std::pair<DecoratedTree, int> compose_decorated(const DecoratedTree& t1, int i,
                                                const DecoratedTree& t2,
                                                const std::vector<int>& degrees) {
  const RootedTree& a = t1.tree;
  const RootedTree& b = t2.tree;
  if (i < 1 || i > a.n) throw Error("composition slot out of range");
  const int m = b.n;
  const int r2 = b.root;
  auto f1 = [&](int v) { return v < i ? v : (v == i ? r2 + i - 1 : v + m - 1); };
  auto f2 = [&](int v) { return v + i - 1; };

  DecoratedTree out;
  out.tree.n = a.n + m - 1;
  out.tree.root = f1(a.root);
  out.tree.parent.assign(out.tree.n + 1, 0);
  out.labels.assign(out.tree.n + 1, -1);

  std::vector<std::pair<int, int>> tokens;  // (new target, degree) in source order
  for (int v = 1; v <= a.n; ++v) {
    if (v == a.root) continue;
    int nv = f1(v);
    out.tree.parent[nv] = f1(a.parent[v]);
    out.labels[nv] = t1.labels[v];
    tokens.push_back({nv, degrees.at(t1.labels[v])});
  }
  for (int v = 1; v <= m; ++v) {
    if (v == r2) continue;
    int nv = f2(v);
    out.tree.parent[nv] = f2(b.parent[v]);
    out.labels[nv] = t2.labels[v];
    tokens.push_back({nv, degrees.at(t2.labels[v])});
  }
  return {out, koszul_parity(std::move(tokens))};
}

TreeVector nap_compose(const TreeVector& a, int i, const TreeVector& b,
                       const std::vector<int>& degrees) {
  TreeVector out(a.field);
  for (const auto& [ta, ca] : a.terms)
    for (const auto& [tb, cb] : b.terms) {
      auto [t, parity] = compose_decorated(ta, i, tb, degrees);
      Scalar c = ca * cb;
      if (parity) c = -c;
      out.add_term(t, c);
    }
  return out;
}

std::pair<DecoratedTree, int> sym_action_decorated(const Perm& sigma, const DecoratedTree& t,
                                                   const std::vector<int>& degrees) {
  const int n = t.tree.n;
  if (static_cast<int>(sigma.size()) != n + 1) throw Error("permutation size mismatch");
  DecoratedTree out;
  out.tree.n = n;
  out.tree.root = sigma[t.tree.root];
  out.tree.parent.assign(n + 1, 0);
  out.labels.assign(n + 1, -1);
  std::vector<std::pair<int, int>> tokens;
  for (int v = 1; v <= n; ++v) {
    if (v == t.tree.root) continue;
    out.tree.parent[sigma[v]] = sigma[t.tree.parent[v]];
    out.labels[sigma[v]] = t.labels[v];
    tokens.push_back({sigma[v], degrees.at(t.labels[v])});
  }
  return {out, koszul_parity(std::move(tokens))};
}

TreeVector nap_sym_action(const Perm& sigma, const TreeVector& v,
                          const std::vector<int>& degrees) {
  TreeVector out(v.field);
  for (const auto& [t, c] : v.terms) {
    auto [s, parity] = sym_action_decorated(sigma, t, degrees);
    out.add_term(s, parity ? -c : c);
  }
  return out;
}

int composition_sign_closed_form(const DecoratedTree& t1, int i, const DecoratedTree& t2,
                                 const std::vector<int>& degrees, bool corrected) {
  int deg_t2 = 0;
  for (int v = 1; v <= t2.tree.n; ++v)
    if (v != t2.tree.root) deg_t2 += degrees.at(t2.labels[v]);
  int high = 0;
  for (int v = i + 1; v <= t1.tree.n; ++v)
    if (v != t1.tree.root) high += degrees.at(t1.labels[v]);
  int parity = deg_t2 & high & 1;
  if (corrected && i != t1.tree.root) {
    int low2 = 0;
    for (int v = 1; v < t2.tree.root; ++v) low2 += degrees.at(t2.labels[v]);
    parity ^= degrees.at(t1.labels[i]) & low2 & 1;
  }
  return parity;
}

std::vector<int> reducible_targets(const DecoratedTree& t, int unit_label) {
  std::vector<int> out;
  for (int j = 1; j <= t.tree.n; ++j) {
    if (j == t.tree.root || t.labels[j] != unit_label) continue;
    if (t.tree.parent[j] != t.tree.root) out.push_back(j);
  }
  return out;
}

TreeVector cactus_reduce_once(const DecoratedTree& t, int j, const CoalgebraSpec& c) {
  if (j < 1 || j > t.tree.n || j == t.tree.root) throw Error("bad reduction target");
  const int i = t.tree.parent[j];
  if (t.labels[j] != c.unit_index || i == t.tree.root)
    throw Error("edge into " + std::to_string(j) + " is not reducible");
  const int k = t.tree.parent[i];
  const int label = t.labels[i];
  int between = 0;
  for (int y = std::min(i, j) + 1; y < std::max(i, j); ++y)
    if (y != t.tree.root) between += c.degrees[t.labels[y]];

  TreeVector out(c.field);
  for (const auto& term : c.coproduct[label]) {
    DecoratedTree s = t;
    s.tree.parent[j] = k;
    s.labels[i] = term.left;
    s.labels[j] = term.right;
    // the right factor moves to position j, across everything in between; when
    // it moves left it also passes the left factor
    int parity = c.degrees[term.right] & between & 1;
    if (j < i) parity ^= c.degrees[term.right] & c.degrees[term.left] & 1;
    out.add_term(s, parity ? -term.coeff : term.coeff);
  }
  return out;
}

TreeVector cactus_normal_form(const TreeVector& v, const CoalgebraSpec& c,
                              const ReductionChooser& choose) {
  TreeVector work = v;
  for (;;) {
    bool changed = false;
    TreeVector next(work.field);
    for (const auto& [t, coeff] : work.terms) {
      auto red = reducible_targets(t, c.unit_index);
      if (red.empty()) {
        next.add_term(t, coeff);
        continue;
      }
      std::size_t pick = choose ? choose(t, red) : 0;
      next += cactus_reduce_once(t, red.at(pick), c) * coeff;
      changed = true;
    }
    work = std::move(next);
    if (!changed) return work;
  }
}

int PlantedForestStar::edge_count() const {
  int e = 0;
  for (int v = 1; v <= n; ++v)
    if (parent[v] != 0) ++e;
  return e;
}

std::vector<PlantedForestStar> enumerate_planted_forests_star(int n, int bound) {
  if (n < 1) throw Error("arity must be positive");
  if (n > bound)
    throw Error("forest enumeration bound exceeded: n = " + std::to_string(n));
  std::vector<PlantedForestStar> out;
  PlantedForestStar f;
  f.n = n;
  f.parent.assign(n + 1, 0);
  std::vector<int> pick(n + 1, 0);
  for (;;) {
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) ok = reaches_zero(pick, v, n);
    if (ok) {
      f.parent = pick;
      for (int r = 1; r <= n; ++r) {
        if (pick[r] != 0) continue;
        f.star_root = r;
        out.push_back(f);
      }
    }
    int v = n;
    while (v >= 1) {
      ++pick[v];
      if (pick[v] == v) ++pick[v];
      if (pick[v] <= n) break;
      pick[v] = 0;
      --v;
    }
    if (v < 1) break;
  }
  return out;
}

std::map<int, BigInt> bcact_dim_oracle(int n, const std::vector<int>& reduced_degrees) {
  auto forests = enumerate_planted_forests_star(n);
  std::vector<BigInt> by_edges(n, 0);
  for (const auto& f : forests) by_edges[f.edge_count()] += 1;

  std::map<int, BigInt> label_poly;
  for (int d : reduced_degrees) label_poly[d] += 1;
  std::vector<std::map<int, BigInt>> powers{{{0, 1}}};
  for (int k = 1; k < n; ++k) {
    std::map<int, BigInt> nx;
    for (const auto& [da, ca] : powers.back())
      for (const auto& [db, cb] : label_poly) nx[da + db] += ca * cb;
    powers.push_back(std::move(nx));
  }

  std::map<int, BigInt> total;
  for (int k = 0; k < n; ++k) {
    if (by_edges[k] == 0) continue;
    for (const auto& [d, c] : powers[k]) total[d] += by_edges[k] * c;
  }
  return total;
}

namespace {

Row mu_rows(const BCactAlgebra& alg, int c, const Row& x, const Row& y, const FieldSpec& f) {
  Row out(alg.dim, Scalar::zero(f));
  for (int i = 0; i < alg.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < alg.dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (int k = 0; k < alg.dim; ++k) out[k] += w * alg.mu[c][i][j][k];
    }
  }
  return out;
}

Row basis_row(int i, int dim, const FieldSpec& f) {
  Row r(dim, Scalar::zero(f));
  r[i] = Scalar::one(f);
  return r;
}

}  // namespace

AlgebraReport check_bcact_algebra(const BCactAlgebra& alg, const CoalgebraSpec& c) {
  AlgebraReport rep;
  const FieldSpec& F = c.field;
  if (static_cast<int>(alg.mu.size()) != c.dim())
    throw Error("algebra needs one product per coalgebra basis element");

  auto fail = [&](const std::string& what) {
    if (rep.pass) {
      rep.pass = false;
      rep.first_violation = what;
    }
  };

  // commutation family: mu_{c'}(mu_{c''}(x, z), y) = +- mu_{c''}(mu_{c'}(x, y), z)
  for (int cp = 0; cp < c.dim() && rep.commutation_pass; ++cp)
    for (int cpp = 0; cpp < c.dim() && rep.commutation_pass; ++cpp) {
      bool odd = (c.degrees[cp] & c.degrees[cpp] & 1) != 0;
      for (int x = 0; x < alg.dim && rep.commutation_pass; ++x)
        for (int y = 0; y < alg.dim && rep.commutation_pass; ++y)
          for (int z = 0; z < alg.dim; ++z) {
            Row lhs = mu_rows(alg, cp, alg.mu[cpp][x][z], basis_row(y, alg.dim, F), F);
            Row rhs = mu_rows(alg, cpp, alg.mu[cp][x][y], basis_row(z, alg.dim, F), F);
            if (odd)
              for (auto& v : rhs) v = -v;
            if (lhs != rhs) {
              rep.commutation_pass = false;
              fail("commutation family at " + c.names[cp] + ", " + c.names[cpp] + " on (" +
                   std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) +
                   ")");
              break;
            }
          }
    }

  // unit family: mu_c(x, mu_unit(y, z)) = sum mu_{c(1)}(mu_{c(2)}(x, y), z)
  for (int cc = 0; cc < c.dim() && rep.unit_pass; ++cc)
    for (int x = 0; x < alg.dim && rep.unit_pass; ++x)
      for (int y = 0; y < alg.dim && rep.unit_pass; ++y)
        for (int z = 0; z < alg.dim; ++z) {
          Row lhs =
              mu_rows(alg, cc, basis_row(x, alg.dim, F), alg.mu[c.unit_index][y][z], F);
          Row rhs(alg.dim, Scalar::zero(F));
          for (const auto& term : c.coproduct[cc]) {
            Row inner = alg.mu[term.right][x][y];
            Row outer = mu_rows(alg, term.left, inner, basis_row(z, alg.dim, F), F);
            for (int k = 0; k < alg.dim; ++k) rhs[k] += term.coeff * outer[k];
          }
          if (lhs != rhs) {
            rep.unit_pass = false;
            fail("unit family at " + c.names[cc] + " on (" + std::to_string(x) + ", " +
                 std::to_string(y) + ", " + std::to_string(z) + ")");
            break;
          }
        }

  return rep;
}

BCactAlgebra nap_family_from_matrices(const std::vector<std::vector<Row>>& perm_product,
                                      const std::vector<std::vector<Row>>& g_matrices,
                                      const FieldSpec& f) {
  BCactAlgebra alg;
  alg.dim = static_cast<int>(perm_product.size());
  for (const auto& g : g_matrices) {
    std::vector<std::vector<Row>> table(
        alg.dim, std::vector<Row>(alg.dim, Row(alg.dim, Scalar::zero(f))));
    for (int i = 0; i < alg.dim; ++i)
      for (int j = 0; j < alg.dim; ++j)
        for (int k = 0; k < alg.dim; ++k) {
          if (g[k][j].is_zero()) continue;
          for (int t = 0; t < alg.dim; ++t)
            table[i][j][t] += g[k][j] * perm_product[i][k][t];
        }
    alg.mu.push_back(std::move(table));
  }
  return alg;
}

BCactAlgebra two_point_example_algebra(const std::vector<std::vector<long long>>& p,
                                       const FieldSpec& f) {
  BCactAlgebra alg;
  alg.dim = 2;
  auto zero = [&] {
    return std::vector<std::vector<Row>>(2, std::vector<Row>(2, Row(2, Scalar::zero(f))));
  };
  auto base = zero();
  base[0][0][0] = Scalar::one(f);  // a *0* a = a
  base[1][0][1] = Scalar::one(f);  // b *0* a = b
  auto deformed = zero();
  for (int k = 0; k < 2; ++k) {
    deformed[0][0][k] = Scalar::of_int(p[0][k], f);  // a *1* a
    deformed[1][0][k] = Scalar::of_int(p[1][k], f);  // b *1* a
  }
  alg.mu.push_back(std::move(base));
  alg.mu.push_back(std::move(deformed));
  return alg;
}

}  // namespace cacti
