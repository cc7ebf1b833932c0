#include "cacti/shuffle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cacti {

ShuffleAlphabet expand_generators(const std::vector<SymmetricGenerator>& gens) {
  ShuffleAlphabet a;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& g = gens[k];
    int plain = a.size();
    a.plain_of.push_back(plain);
    a.names.push_back(g.name);
    a.degree.push_back(g.degree);
    a.source.push_back(static_cast<int>(k));
    a.tilde.push_back(false);
    switch (g.sym) {
      case Symmetry::none:
        a.partner.push_back(plain + 1);
        a.swap_parity.push_back(0);
        a.names.push_back(g.name + "~");
        a.degree.push_back(g.degree);
        a.source.push_back(static_cast<int>(k));
        a.tilde.push_back(true);
        a.partner.push_back(plain);
        a.swap_parity.push_back(0);
        break;
      case Symmetry::symmetric:
        a.partner.push_back(plain);
        a.swap_parity.push_back(0);
        break;
      case Symmetry::antisymmetric:
        a.partner.push_back(plain);
        a.swap_parity.push_back(1);
        break;
    }
  }
  return a;
}

int TreeMonomial::arity() const {
  int n = 0;
  for (int c : code)
    if (c > 0) ++n;
  return n;
}

int TreeMonomial::weight() const {
  int w = 0;
  for (int c : code)
    if (c < 0) ++w;
  return w;
}

int TreeMonomial::degree(const ShuffleAlphabet& alph) const {
  int d = 0;
  for (int c : code)
    if (c < 0) d += alph.degree[-c - 1];
  return d;
}

int TreeMonomial::subtree_end(int pos) const {
  if (code[pos] > 0) return pos + 1;
  int e = subtree_end(pos + 1);
  return subtree_end(e);
}

int TreeMonomial::min_leaf(int pos) const {
  // children are ordered by least leaf, so the first leaf in the block is it
  while (code[pos] < 0) ++pos;
  return code[pos];
}

namespace {

void str_rec(const TreeMonomial& m, int pos, const ShuffleAlphabet& alph,
             std::ostringstream& os) {
  if (m.code[pos] > 0) {
    os << m.code[pos];
    return;
  }
  int g = -m.code[pos] - 1;
  os << alph.names[g] << "(";
  int mid = m.subtree_end(pos + 1);
  str_rec(m, pos + 1, alph, os);
  os << ", ";
  str_rec(m, mid, alph, os);
  os << ")";
}

}  // namespace

std::string TreeMonomial::str(const ShuffleAlphabet& alph) const {
  std::ostringstream os;
  str_rec(*this, 0, alph, os);
  return os.str();
}

TreeMonomial corolla(int gen) { return TreeMonomial{{-(gen + 1), 1, 2}}; }

namespace {

struct CanonPart {
  std::vector<int> code;
  int min = 0;
  int deg = 0;
  int parity = 0;
};

CanonPart canon_rec(const std::vector<int>& raw, int& pos, const ShuffleAlphabet& alph) {
  if (raw[pos] > 0) {
    CanonPart p;
    p.code = {raw[pos]};
    p.min = raw[pos];
    ++pos;
    return p;
  }
  int g = -raw[pos] - 1;
  ++pos;
  CanonPart a = canon_rec(raw, pos, alph);
  CanonPart b = canon_rec(raw, pos, alph);
  CanonPart out;
  out.parity = a.parity ^ b.parity;
  if (a.min < b.min) {
    out.code.reserve(1 + a.code.size() + b.code.size());
    out.code.push_back(-(g + 1));
    out.code.insert(out.code.end(), a.code.begin(), a.code.end());
    out.code.insert(out.code.end(), b.code.begin(), b.code.end());
  } else {
    int h = alph.partner[g];
    out.parity ^= alph.swap_parity[g] ^ (a.deg & b.deg & 1);
    out.code.push_back(-(h + 1));
    out.code.insert(out.code.end(), b.code.begin(), b.code.end());
    out.code.insert(out.code.end(), a.code.begin(), a.code.end());
    g = h;
  }
  out.min = std::min(a.min, b.min);
  out.deg = alph.degree[g] + a.deg + b.deg;
  return out;
}

}  // namespace

std::pair<TreeMonomial, int> canonicalize(const std::vector<int>& raw,
                                          const ShuffleAlphabet& alph) {
  int pos = 0;
  CanonPart p = canon_rec(raw, pos, alph);
  if (pos != static_cast<int>(raw.size())) throw Error("trailing symbols in monomial code");
  return {TreeMonomial{std::move(p.code)}, p.parity};
}

std::pair<TreeMonomial, int> apply_leaf_perm(const TreeMonomial& m, const Perm& sigma,
                                             const ShuffleAlphabet& alph) {
  std::vector<int> raw = m.code;
  for (int& c : raw)
    if (c > 0) c = sigma.at(c);
  return canonicalize(raw, alph);
}

std::vector<int> identity_subset(int i, int /*n*/, int m) {
  std::vector<int> s;
  for (int k = 1; k < m; ++k) s.push_back(i + k);
  return s;
}

std::vector<std::vector<int>> shuffle_subsets(int i, int n, int m) {
  std::vector<int> pool;
  for (int v = i + 1; v <= n + m - 1; ++v) pool.push_back(v);
  int want = m - 1;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographic combinations
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == want) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < pool.size(); ++k) {
      cur.push_back(pool[k]);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::pair<TreeMonomial, int> shuffle_compose(const TreeMonomial& m1, int i,
                                             const TreeMonomial& m2,
                                             const std::vector<int>& subset,
                                             const ShuffleAlphabet& alph) {
  const int n = m1.arity(), m = m2.arity();
  if (i < 1 || i > n) throw Error("composition slot out of range");
  if (static_cast<int>(subset.size()) != m - 1) throw Error("shuffle subset has wrong size");
  std::vector<bool> taken(n + m, false);
  int prev = i;
  for (int v : subset) {
    if (v <= prev || v > n + m - 1) throw Error("shuffle subset not increasing in range");
    prev = v;
    taken[v] = true;
  }
  std::vector<int> lmap2(m + 1, 0);
  lmap2[1] = i;
  for (int k = 2; k <= m; ++k) lmap2[k] = subset[k - 2];
  std::vector<int> lmap1(n + 1, 0);
  for (int k = 1; k < i; ++k) lmap1[k] = k;
  {
    int next = i + 1;
    for (int k = i + 1; k <= n; ++k) {
      while (taken[next]) ++next;
      lmap1[k] = next++;
    }
  }

  std::vector<int> out;
  out.reserve(m1.code.size() + m2.code.size() - 1);
  int after_deg = 0;
  bool seen = false;
  for (int c : m1.code) {
    if (c < 0) {
      if (seen) after_deg += alph.degree[-c - 1];
      out.push_back(c);
    } else if (c == i) {
      seen = true;
      for (int d : m2.code) out.push_back(d < 0 ? d : lmap2[d]);
    } else {
      out.push_back(lmap1[c]);
    }
  }
  int deg2 = m2.degree(alph);
  return {TreeMonomial{std::move(out)}, deg2 & after_deg & 1};
}

namespace {

void enum_rec(const std::vector<int>& leaves, const ShuffleAlphabet& alph,
              std::map<std::vector<int>, std::vector<std::vector<int>>>& memo,
              std::vector<std::vector<int>>& out);

const std::vector<std::vector<int>>& enum_memo(const std::vector<int>& leaves,
                                               const ShuffleAlphabet& alph,
                                               std::map<std::vector<int>, std::vector<std::vector<int>>>& memo) {
  auto it = memo.find(leaves);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<int>> res;
  enum_rec(leaves, alph, memo, res);
  return memo.emplace(leaves, std::move(res)).first->second;
}

void enum_rec(const std::vector<int>& leaves, const ShuffleAlphabet& alph,
              std::map<std::vector<int>, std::vector<std::vector<int>>>& memo,
              std::vector<std::vector<int>>& out) {
  if (leaves.size() == 1) {
    out.push_back({leaves[0]});
    return;
  }
  const int rest = static_cast<int>(leaves.size()) - 1;
  // left part keeps the least leaf; iterate over subsets of the rest
  for (int mask = 0; mask + 1 < (1 << rest); ++mask) {
    std::vector<int> left = {leaves[0]}, right;
    for (int k = 0; k < rest; ++k)
      ((mask >> k) & 1 ? left : right).push_back(leaves[k + 1]);
    const auto& ls = enum_memo(left, alph, memo);
    const auto& rs = enum_memo(right, alph, memo);
    for (int g = 0; g < alph.size(); ++g)
      for (const auto& lc : ls)
        for (const auto& rc : rs) {
          std::vector<int> code;
          code.reserve(1 + lc.size() + rc.size());
          code.push_back(-(g + 1));
          code.insert(code.end(), lc.begin(), lc.end());
          code.insert(code.end(), rc.begin(), rc.end());
          out.push_back(std::move(code));
        }
  }
}

}  // namespace

std::vector<TreeMonomial> enumerate_monomials(const ShuffleAlphabet& alph, int arity) {
  if (arity < 1) throw Error("arity must be positive");
  std::vector<int> leaves(arity);
  for (int k = 0; k < arity; ++k) leaves[k] = k + 1;
  std::map<std::vector<int>, std::vector<std::vector<int>>> memo;
  std::vector<std::vector<int>> codes;
  enum_rec(leaves, alph, memo, codes);
  std::vector<TreeMonomial> out;
  out.reserve(codes.size());
  for (auto& c : codes) out.push_back(TreeMonomial{std::move(c)});
  return out;
}

OrderSpec OrderSpec::path_lex_plain(const ShuffleAlphabet& a) {
  OrderSpec o;
  o.precedence.assign(a.size(), 0);
  int rank = 0;
  for (int g = 0; g < a.size(); ++g)
    if (!a.tilde[g]) o.precedence[g] = rank++;
  for (int g = 0; g < a.size(); ++g)
    if (a.tilde[g]) o.precedence[g] = rank++;
  return o;
}

OrderSpec OrderSpec::path_lex_tilde_first(const ShuffleAlphabet& a) {
  OrderSpec o;
  o.precedence.assign(a.size(), 0);
  int rank = 0;
  for (int g = 0; g < a.size(); ++g)
    if (a.tilde[g]) o.precedence[g] = rank++;
  for (int g = 0; g < a.size(); ++g)
    if (!a.tilde[g]) o.precedence[g] = rank++;
  return o;
}

OrderSpec OrderSpec::depth_lex(const ShuffleAlphabet& a, bool flipped) {
  OrderSpec o = path_lex_plain(a);
  o.depth_compare = true;
  o.flipped = flipped;
  return o;
}

OrderSpec OrderSpec::count_first(const ShuffleAlphabet& a,
                                 const std::vector<bool>& counted_sources) {
  OrderSpec o;
  o.kind = OrderKind::count_first;
  o.counted.assign(a.size(), false);
  o.precedence.assign(a.size(), 0);
  for (int g = 0; g < a.size(); ++g) o.counted[g] = counted_sources.at(a.source[g]);
  int rank = 0;
  for (int pass = 0; pass < 4; ++pass) {
    bool want_counted = pass >= 2;
    bool want_tilde = (pass % 2) == 1;
    for (int g = 0; g < a.size(); ++g)
      if (o.counted[g] == want_counted && a.tilde[g] == want_tilde) o.precedence[g] = rank++;
  }
  return o;
}

namespace {

struct PathKey {
  std::vector<std::vector<int>> words;  // indexed by leaf label
  std::vector<int> leaf_seq;
};

int key_rec(const TreeMonomial& m, int pos, std::vector<int>& word, PathKey& key) {
  if (m.code[pos] > 0) {
    key.words[m.code[pos]] = word;
    key.leaf_seq.push_back(m.code[pos]);
    return pos + 1;
  }
  word.push_back(-m.code[pos] - 1);
  int mid = key_rec(m, pos + 1, word, key);
  int end = key_rec(m, mid, word, key);
  word.pop_back();
  return end;
}

PathKey path_key(const TreeMonomial& m, int arity) {
  PathKey key;
  key.words.resize(arity + 1);
  key.leaf_seq.reserve(arity);
  std::vector<int> word;
  key_rec(m, 0, word, key);
  return key;
}

// -1: a earlier (smaller), +1: a later. Shorter words come first outright;
// letter precedence only separates words of one length. Comparing by length
// first is what survives composition: a common suffix extends both words, and
// a letter-first rule would let the suffix's head overturn a prefix decision.
int word_cmp(const std::vector<int>& a, const std::vector<int>& b,
             const std::vector<int>& prec) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    int pa = prec[a[k]], pb = prec[b[k]];
    if (pa != pb) return pa < pb ? -1 : 1;
  }
  return 0;
}

}  // namespace

int ShuffleContext::cmp(const TreeMonomial& a, const TreeMonomial& b) const {
  if (a.code == b.code) return 0;
  const int n = a.arity();
  PathKey ka = path_key(a, n), kb = path_key(b, n);
  if (order.kind == OrderKind::count_first) {
    int ca = 0, cb = 0;
    for (int c : a.code)
      if (c < 0 && order.counted[-c - 1]) ++ca;
    for (int c : b.code)
      if (c < 0 && order.counted[-c - 1]) ++cb;
    if (ca != cb) return ca > cb ? 1 : -1;  // more distinguished generators lead
    // then the distinguished generators' spread along the paths: a leaf with
    // fewer of them above it pushes the monomial up
    for (int leaf = 1; leaf <= n; ++leaf) {
      int da = 0, db = 0;
      for (int g : ka.words[leaf]) da += order.counted[g];
      for (int g : kb.words[leaf]) db += order.counted[g];
      if (da != db) return da < db ? 1 : -1;
    }
  }
  int flip = order.flipped ? -1 : 1;
  if (order.depth_compare) {
    for (int leaf = 1; leaf <= n; ++leaf) {
      std::size_t da = ka.words[leaf].size(), db = kb.words[leaf].size();
      if (da != db) return (da < db ? 1 : -1) * flip;  // shallower leaf leads
    }
  }
  for (int leaf = 1; leaf <= n; ++leaf) {
    int c = word_cmp(ka.words[leaf], kb.words[leaf], order.precedence);
    if (c != 0) return -c * flip;  // smaller path word leads
  }
  if (ka.leaf_seq != kb.leaf_seq)
    return (ka.leaf_seq < kb.leaf_seq ? 1 : -1) * flip;  // smaller planar order leads
  return 0;
}

const TreeMonomial& ShuffleElement::lm() const {
  if (terms.empty()) throw Error("zero element has no leading monomial");
  return terms.front().first;
}

const Scalar& ShuffleElement::lc() const {
  if (terms.empty()) throw Error("zero element has no leading coefficient");
  return terms.front().second;
}

ShuffleElement make_element(std::vector<std::pair<TreeMonomial, Scalar>> terms,
                            const ShuffleContext& ctx) {
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    int c = ctx.cmp(x.first, y.first);
    if (c != 0) return c > 0;
    return x.first.code < y.first.code;
  });
  ShuffleElement out;
  for (auto& [m, c] : terms) {
    if (!out.terms.empty() && out.terms.back().first == m)
      out.terms.back().second += c;
    else
      out.terms.push_back({std::move(m), c});
    if (!out.terms.empty() && out.terms.back().second.is_zero()) out.terms.pop_back();
  }
  return out;
}

ShuffleElement axpy(const ShuffleElement& f, const Scalar& c, const ShuffleElement& g,
                    const ShuffleContext& ctx) {
  ShuffleElement out;
  std::size_t i = 0, j = 0;
  while (i < f.terms.size() || j < g.terms.size()) {
    if (j == g.terms.size()) {
      out.terms.push_back(f.terms[i++]);
      continue;
    }
    if (i == f.terms.size()) {
      Scalar v = c * g.terms[j].second;
      if (!v.is_zero()) out.terms.push_back({g.terms[j].first, v});
      ++j;
      continue;
    }
    int d = ctx.cmp(f.terms[i].first, g.terms[j].first);
    if (d > 0) {
      out.terms.push_back(f.terms[i++]);
    } else if (d < 0) {
      Scalar v = c * g.terms[j].second;
      if (!v.is_zero()) out.terms.push_back({g.terms[j].first, v});
      ++j;
    } else {
      Scalar v = f.terms[i].second + c * g.terms[j].second;
      if (!v.is_zero()) out.terms.push_back({f.terms[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

ShuffleElement scale(const ShuffleElement& f, const Scalar& c) {
  ShuffleElement out;
  if (c.is_zero()) return out;
  out.terms = f.terms;
  for (auto& [m, v] : out.terms) v *= c;
  return out;
}

ShuffleElement make_monic(const ShuffleElement& f) {
  if (f.is_zero()) return f;
  return scale(f, f.lc().inverse());
}

std::string element_str(const ShuffleElement& f, const ShuffleAlphabet& alph) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms) {
    if (!first) os << " + ";
    os << c.str() << "*" << m.str(alph);
    first = false;
  }
  return os.str();
}

namespace {

bool match_rec(const TreeMonomial& host, int hpos, const TreeMonomial& pat, int ppos,
               Embedding& emb) {
  if (pat.code[ppos] > 0) {
    int leaf = pat.code[ppos];
    emb.leaf_ranges[leaf - 1] = {hpos, host.subtree_end(hpos)};
    return true;
  }
  if (host.code[hpos] != pat.code[ppos]) return false;
  emb.vertices.push_back(hpos);
  int pmid = pat.subtree_end(ppos + 1);
  int hmid = host.subtree_end(hpos + 1);
  if (!match_rec(host, hpos + 1, pat, ppos + 1, emb)) return false;
  return match_rec(host, hmid, pat, pmid, emb);
}

}  // namespace

std::vector<Embedding> find_divisors(const TreeMonomial& host, const TreeMonomial& pattern) {
  std::vector<Embedding> out;
  const int k = pattern.arity();
  for (int pos = 0; pos < static_cast<int>(host.code.size()); ++pos) {
    if (host.code[pos] > 0) continue;
    Embedding emb;
    emb.anchor = pos;
    emb.leaf_ranges.assign(k, {0, 0});
    if (!match_rec(host, pos, pattern, 0, emb)) continue;
    bool standard = true;
    int prev = 0;
    for (int leaf = 0; leaf < k && standard; ++leaf) {
      int m = host.min_leaf(emb.leaf_ranges[leaf].first);
      if (m <= prev) standard = false;
      prev = m;
    }
    if (standard) out.push_back(std::move(emb));
  }
  return out;
}

bool embeddings_overlap(const Embedding& a, const Embedding& b) {
  for (int v : a.vertices)
    for (int w : b.vertices)
      if (v == w) return true;
  return false;
}

namespace {

// Koszul parity of collecting class-tagged generator tokens into class order.
int class_parity(const std::vector<std::pair<int, int>>& tokens /*(class, degree)*/) {
  int parity = 0;
  for (std::size_t x = 0; x < tokens.size(); ++x)
    for (std::size_t y = x + 1; y < tokens.size(); ++y)
      if (tokens[x].first > tokens[y].first)
        parity ^= tokens[x].second & tokens[y].second & 1;
  return parity;
}

}  // namespace

ShuffleElement embed_element(const TreeMonomial& host, const Embedding& e,
                             const ShuffleElement& elt, const ShuffleContext& ctx) {
  const auto& alph = ctx.alph;
  const int aend = host.subtree_end(e.anchor);
  const int k = static_cast<int>(e.leaf_ranges.size());

  // classes: 0 context, 1 pattern, 1+leaf argument subtrees
  std::vector<int> cls(host.code.size(), 0);
  for (int v : e.vertices) cls[v] = 1;
  for (int leaf = 0; leaf < k; ++leaf)
    for (int p = e.leaf_ranges[leaf].first; p < e.leaf_ranges[leaf].second; ++p)
      if (host.code[p] < 0) cls[p] = 2 + leaf;
  std::vector<std::pair<int, int>> tokens;
  for (std::size_t p = 0; p < host.code.size(); ++p)
    if (host.code[p] < 0) tokens.push_back({cls[p], alph.degree[-host.code[p] - 1]});
  const int host_parity = class_parity(tokens);

  std::vector<std::pair<TreeMonomial, Scalar>> result;
  for (const auto& [mono, coeff] : elt.terms) {
    std::vector<int> code(host.code.begin(), host.code.begin() + e.anchor);
    std::vector<std::pair<int, int>> toks;
    for (int p = 0; p < e.anchor; ++p)
      if (host.code[p] < 0) toks.push_back({0, alph.degree[-host.code[p] - 1]});
    for (int c : mono.code) {
      if (c < 0) {
        code.push_back(c);
        toks.push_back({1, alph.degree[-c - 1]});
      } else {
        auto [rb, re] = e.leaf_ranges[c - 1];
        for (int p = rb; p < re; ++p) {
          code.push_back(host.code[p]);
          if (host.code[p] < 0) toks.push_back({1 + c, alph.degree[-host.code[p] - 1]});
        }
      }
    }
    for (std::size_t p = aend; p < host.code.size(); ++p) {
      code.push_back(host.code[p]);
      if (host.code[p] < 0) toks.push_back({0, alph.degree[-host.code[p] - 1]});
    }
    int parity = host_parity ^ class_parity(toks);
    result.push_back({TreeMonomial{std::move(code)},
                      parity ? -coeff : coeff});
  }
  return make_element(std::move(result), ctx);
}

std::pair<TreeMonomial, int> expand_term(const RelationTerm& t, const ShuffleAlphabet& alph) {
  int go = alph.plain_of.at(t.outer), gi = alph.plain_of.at(t.inner);
  std::vector<int> raw;
  if (t.slot == 1)
    raw = {-(go + 1), -(gi + 1), t.leaves[0], t.leaves[1], t.leaves[2]};
  else if (t.slot == 2)
    raw = {-(go + 1), t.leaves[0], -(gi + 1), t.leaves[1], t.leaves[2]};
  else
    throw Error("relation slot must be 1 or 2");
  return canonicalize(raw, alph);
}

namespace {

const std::array<std::array<int, 4>, 6> kS3 = {{{0, 1, 2, 3},
                                                {0, 1, 3, 2},
                                                {0, 2, 1, 3},
                                                {0, 2, 3, 1},
                                                {0, 3, 1, 2},
                                                {0, 3, 2, 1}}};

}  // namespace

std::vector<ShuffleElement> row_reduce_elements(const std::vector<ShuffleElement>& rows,
                                                const ShuffleContext& ctx) {
  std::vector<TreeMonomial> monos;
  for (const auto& r : rows)
    for (const auto& [m, c] : r.terms) monos.push_back(m);
  std::sort(monos.begin(), monos.end(), [&](const TreeMonomial& x, const TreeMonomial& y) {
    int c = ctx.cmp(x, y);
    if (c != 0) return c > 0;
    return x.code < y.code;
  });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::map<TreeMonomial, int> col;
  for (std::size_t k = 0; k < monos.size(); ++k) col[monos[k]] = static_cast<int>(k);

  Matrix m(ctx.field, static_cast<int>(monos.size()));
  for (const auto& r : rows) {
    Row row(monos.size(), Scalar::zero(ctx.field));
    for (const auto& [mono, c] : r.terms) row[col[mono]] = c;
    m.add_row(std::move(row));
  }
  rref(m);
  std::vector<ShuffleElement> out;
  for (const auto& row : m.a) {
    ShuffleElement e;
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (!row[k].is_zero()) e.terms.push_back({monos[k], row[k]});
    out.push_back(std::move(e));
  }
  return out;
}

ShufflePresentation expand_presentation(const SymmetricPresentation& p,
                                        const OrderSpec& order) {
  ShuffleAlphabet alph = expand_generators(p.gens);
  ShuffleContext ctx{p.field, std::move(alph), order};
  std::vector<ShuffleElement> rows;
  for (const auto& rel : p.relations) {
    if (rel.empty()) throw Error("empty relation");
    for (const auto& sigma : kS3) {
      std::vector<std::pair<TreeMonomial, Scalar>> terms;
      for (const auto& t : rel) {
        RelationTerm s = t;
        for (int k = 0; k < 3; ++k) s.leaves[k] = sigma[t.leaves[k]];
        auto [mono, parity] = expand_term(s, ctx.alph);
        terms.push_back({std::move(mono), parity ? -t.coeff : t.coeff});
      }
      ShuffleElement e = make_element(std::move(terms), ctx);
      if (!e.is_zero()) rows.push_back(std::move(e));
    }
  }
  std::vector<ShuffleElement> reduced = row_reduce_elements(rows, ctx);
  return ShufflePresentation{std::move(ctx), std::move(reduced)};
}

bool same_row_space(const std::vector<ShuffleElement>& a,
                    const std::vector<ShuffleElement>& b, const ShuffleContext& ctx) {
  std::vector<TreeMonomial> monos;
  for (const auto* rows : {&a, &b})
    for (const auto& r : *rows)
      for (const auto& [m, c] : r.terms) monos.push_back(m);
  std::sort(monos.begin(), monos.end());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::map<TreeMonomial, int> col;
  for (std::size_t k = 0; k < monos.size(); ++k) col[monos[k]] = static_cast<int>(k);
  auto to_matrix = [&](const std::vector<ShuffleElement>& rows) {
    Matrix m(ctx.field, static_cast<int>(monos.size()));
    for (const auto& r : rows) {
      Row row(monos.size(), Scalar::zero(ctx.field));
      for (const auto& [mono, c] : r.terms) row[col[mono]] = c;
      m.add_row(std::move(row));
    }
    rref(m);
    return m;
  };
  Matrix ma = to_matrix(a), mb = to_matrix(b);
  return ma.a == mb.a;
}

}  // namespace cacti
