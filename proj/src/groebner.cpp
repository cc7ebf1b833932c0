#include "cacti/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace cacti {

int GroebnerBasis::max_element_weight() const {
  int w = 2;
  for (const auto& e : elements) w = std::max(w, e.lm().weight());
  return w;
}

ShuffleElement reduce(const ShuffleElement& f, const std::vector<ShuffleElement>& basis,
                      const ShuffleContext& ctx) {
  ShuffleElement work = f;
  ShuffleElement remainder;
  while (!work.is_zero()) {
    bool hit = false;
    for (const auto& elt : basis) {
      auto embs = find_divisors(work.lm(), elt.lm());
      if (embs.empty()) continue;
      Scalar c = work.lc();
      work = axpy(work, -c, embed_element(work.lm(), embs.front(), elt, ctx), ctx);
      hit = true;
      break;
    }
    if (!hit) {
      remainder.terms.push_back(work.terms.front());
      work.terms.erase(work.terms.begin());
    }
  }
  return remainder;
}

namespace {

void inter_reduce(std::vector<ShuffleElement>& elems, const ShuffleContext& ctx) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      std::vector<ShuffleElement> others;
      others.reserve(elems.size() - 1);
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (j != i) others.push_back(elems[j]);
      ShuffleElement r = reduce(elems[i], others, ctx);
      if (r.is_zero()) {
        elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      r = make_monic(r);
      if (!(r == elems[i])) {
        elems[i] = r;
        changed = true;
      }
    }
  }
}

}  // namespace

GroebnerBasis buchberger(const ShufflePresentation& p, int max_weight, int jobs) {
  GroebnerBasis gb{p.ctx, {}, 2, false};
  for (const auto& r : p.relations) {
    if (r.is_zero()) throw Error("zero relation in presentation");
    gb.elements.push_back(make_monic(r));
  }
  const ShuffleContext& ctx = gb.ctx;

  for (int w = 3; w <= max_weight; ++w) {
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<ShuffleElement> snapshot = gb.elements;
      const std::vector<TreeMonomial> hosts = enumerate_monomials(ctx.alph, w + 1);

      auto process_host = [&](std::size_t h,
                              std::vector<std::pair<std::int64_t, ShuffleElement>>& out) {
        const TreeMonomial& host = hosts[h];
        std::vector<std::pair<std::size_t, Embedding>> embs;
        for (std::size_t ei = 0; ei < snapshot.size(); ++ei) {
          if (snapshot[ei].lm().arity() > w + 1) continue;
          for (auto& e : find_divisors(host, snapshot[ei].lm()))
            embs.push_back({ei, std::move(e)});
        }
        std::int64_t pi = 0;
        for (std::size_t x = 0; x < embs.size(); ++x)
          for (std::size_t y = x + 1; y < embs.size(); ++y) {
            if (!embeddings_overlap(embs[x].second, embs[y].second)) continue;
            ++pi;
            ShuffleElement s =
                axpy(embed_element(host, embs[x].second, snapshot[embs[x].first], ctx),
                     -Scalar::one(ctx.field),
                     embed_element(host, embs[y].second, snapshot[embs[y].first], ctx), ctx);
            ShuffleElement r = reduce(s, snapshot, ctx);
            if (!r.is_zero())
              out.push_back({static_cast<std::int64_t>(h) * 100000 + pi, std::move(r)});
          }
      };

      std::vector<std::pair<std::int64_t, ShuffleElement>> found;
      if (jobs <= 1) {
        for (std::size_t h = 0; h < hosts.size(); ++h) process_host(h, found);
      } else {
        std::atomic<std::size_t> next{0};
        std::mutex mu;
        auto worker = [&]() {
          std::vector<std::pair<std::int64_t, ShuffleElement>> local;
          for (std::size_t h = next.fetch_add(1); h < hosts.size(); h = next.fetch_add(1))
            process_host(h, local);
          std::scoped_lock lock(mu);
          for (auto& item : local) found.push_back(std::move(item));
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
      std::sort(found.begin(), found.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });

      for (auto& [key, r] : found) {
        ShuffleElement rr = reduce(r, gb.elements, ctx);
        if (rr.is_zero()) continue;
        gb.elements.push_back(make_monic(rr));
        grew = true;
      }
    }
    inter_reduce(gb.elements, ctx);
    gb.complete_below = w;
    if (w == 3 && gb.max_element_weight() <= 2) {
      gb.complete_below = std::numeric_limits<int>::max();
      break;
    }
  }
  gb.quadratic = gb.max_element_weight() <= 2;
  return gb;
}

namespace {

bool has_divisor(const TreeMonomial& m, const std::vector<ShuffleElement>& elems) {
  for (const auto& e : elems)
    if (!find_divisors(m, e.lm()).empty()) return true;
  return false;
}

void require_complete(const GroebnerBasis& gb, int arity) {
  int needed = arity - 1;
  if (needed > gb.complete_below) {
    std::ostringstream os;
    os << "Groebner basis closed through weight " << gb.complete_below << " only; arity "
       << arity << " needs completion through weight " << needed
       << " (rerun with max weight >= " << needed << ")";
    throw Error(os.str());
  }
}

}  // namespace

std::vector<TreeMonomial> normal_monomials(const GroebnerBasis& gb, int arity) {
  if (arity < 1) throw Error("arity must be positive");
  if (arity == 1) return {TreeMonomial{{1}}};
  require_complete(gb, arity);
  std::vector<TreeMonomial> out;
  for (auto& m : enumerate_monomials(gb.ctx.alph, arity))
    if (!has_divisor(m, gb.elements)) out.push_back(std::move(m));
  return out;
}

BigInt gb_dimension(const GroebnerBasis& gb, int arity) {
  return static_cast<BigInt>(normal_monomials(gb, arity).size());
}

std::map<int, BigInt> gb_dimension_by_degree(const GroebnerBasis& gb, int arity) {
  std::map<int, BigInt> out;
  for (const auto& m : normal_monomials(gb, arity)) out[m.degree(gb.ctx.alph)] += 1;
  return out;
}

std::vector<BigInt> gb_dims(const GroebnerBasis& gb, int max_arity) {
  std::vector<BigInt> out;
  for (int n = 1; n <= max_arity; ++n) out.push_back(gb_dimension(gb, n));
  return out;
}

bool is_quadratic_gb(const ShufflePresentation& p, int probe_weight, int jobs) {
  for (const auto& r : p.relations)
    if (r.is_zero() || r.lm().weight() != 2)
      throw Error("quadraticity certificate needs nonzero weight-2 relations");
  if (probe_weight < 3) throw Error("probe weight must be at least 3");
  return buchberger(p, probe_weight, jobs).quadratic;
}

BigInt suboperad_dims(const GroebnerBasis& gb, const std::vector<std::string>& subset,
                      int arity) {
  const ShuffleAlphabet& alph = gb.ctx.alph;
  std::vector<bool> allowed(alph.size(), false);
  for (const auto& name : subset) {
    bool seen = false;
    for (int g = 0; g < alph.size(); ++g)
      if (alph.names[g] == name || alph.names[g] == name + "~") {
        allowed[g] = true;
        seen = true;
      }
    if (!seen) throw Error("unknown generator in suboperad subset: " + name);
  }
  if (arity == 1) return 1;
  require_complete(gb, arity);

  std::vector<TreeMonomial> normal = normal_monomials(gb, arity);
  std::map<TreeMonomial, int> col;
  for (std::size_t k = 0; k < normal.size(); ++k) col[normal[k]] = static_cast<int>(k);

  Matrix m(gb.ctx.field, normal.size());
  Scalar one = Scalar::one(gb.ctx.field);
  for (const auto& mono : enumerate_monomials(alph, arity)) {
    bool ok = true;
    for (int c : mono.code)
      if (c < 0 && !allowed[-c - 1]) ok = false;
    if (!ok) continue;
    ShuffleElement nf = reduce(make_element({{mono, one}}, gb.ctx), gb.elements, gb.ctx);
    Row row = m.zero_row();
    for (const auto& [nm, coeff] : nf.terms) row[col.at(nm)] = coeff;
    m.add_row(std::move(row));
  }
  return static_cast<BigInt>(rank(std::move(m)));
}

QuadraticOperad make_operad(const SymmetricPresentation& p, const OrderSpec& order) {
  return QuadraticOperad{p.gens, expand_presentation(p, order)};
}

namespace {

// Pairing of a weight-2 monomial with its dual-alphabet twin: a fixed sign
// per shape, negated once per swapped generator.
int pairing_sign(const TreeMonomial& m, const ShuffleAlphabet& alph) {
  int outer = -m.code[0] - 1;
  int inner;
  int shape;  // 0: (12)3-shape, 1: (13)2-shape, 2: 1(23)-shape
  if (m.code[1] < 0) {
    inner = -m.code[1] - 1;
    shape = m.code[4] == 3 ? 0 : 1;
  } else {
    inner = -m.code[2] - 1;
    shape = 2;
  }
  int sign = shape == 0 ? 1 : -1;
  if (alph.tilde[outer]) sign = -sign;
  if (alph.tilde[inner]) sign = -sign;
  return sign;
}

}  // namespace

QuadraticOperad koszul_dual(const QuadraticOperad& p) {
  for (const auto& r : p.pres.relations)
    if (r.is_zero() || r.lm().weight() != 2)
      throw Error("Koszul dual needs a binary quadratic presentation");

  std::vector<SymmetricGenerator> dual_gens;
  for (const auto& g : p.gens) {
    Symmetry s = g.sym == Symmetry::symmetric    ? Symmetry::antisymmetric
                 : g.sym == Symmetry::antisymmetric ? Symmetry::symmetric
                                                    : Symmetry::none;
    dual_gens.push_back({g.name + "!", -g.degree, s});
  }
  ShuffleAlphabet dual_alph = expand_generators(dual_gens);

  const ShuffleContext& ctx = p.pres.ctx;
  std::vector<TreeMonomial> monos = enumerate_monomials(ctx.alph, 3);
  std::sort(monos.begin(), monos.end());
  std::map<TreeMonomial, int> col;
  for (std::size_t k = 0; k < monos.size(); ++k) col[monos[k]] = static_cast<int>(k);

  Matrix m(ctx.field, monos.size());
  for (const auto& r : p.pres.relations) {
    Row row = m.zero_row();
    for (const auto& [mono, c] : r.terms)
      row[col.at(mono)] = c * sign_scalar(pairing_sign(mono, ctx.alph) < 0 ? 1 : 0, ctx.field);
    m.add_row(std::move(row));
  }

  ShuffleContext dual_ctx{ctx.field, dual_alph, OrderSpec::path_lex_plain(dual_alph)};
  std::vector<ShuffleElement> rows;
  for (const auto& v : nullspace(m)) {
    std::vector<std::pair<TreeMonomial, Scalar>> terms;
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (!v[k].is_zero()) terms.push_back({monos[k], v[k]});
    rows.push_back(make_element(std::move(terms), dual_ctx));
  }
  std::vector<ShuffleElement> reduced = row_reduce_elements(rows, dual_ctx);
  return QuadraticOperad{std::move(dual_gens),
                         ShufflePresentation{std::move(dual_ctx), std::move(reduced)}};
}

}  // namespace cacti
