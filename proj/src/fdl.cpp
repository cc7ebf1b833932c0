#include "cacti/fdl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cacti {

namespace {

enum class Block { vv, vw, wv, ww };

// Which of the four two-vertex blocks a weight-2 monomial lies in; a_sources
// counts the symmetric generators belonging to A.
Block block_of(const TreeMonomial& m, const ShuffleAlphabet& alph, int a_sources) {
  int outer = -m.code[0] - 1;
  int inner = m.code[1] < 0 ? -m.code[1] - 1 : -m.code[2] - 1;
  bool outer_a = alph.source[outer] < a_sources;
  bool inner_a = alph.source[inner] < a_sources;
  if (outer_a) return inner_a ? Block::vv : Block::vw;
  return inner_a ? Block::wv : Block::ww;
}

RelationTerm shift_term(const RelationTerm& t, int offset) {
  RelationTerm s = t;
  s.outer += offset;
  s.inner += offset;
  return s;
}

void require_indices(const std::vector<SymRelation>& rels, int bound,
                     const std::string& what) {
  for (const auto& rel : rels)
    for (const auto& t : rel)
      if (t.outer < 0 || t.outer >= bound || t.inner < 0 || t.inner >= bound)
        throw Error(what + " references a generator out of range");
}

}  // namespace

AssembledFdl assemble(const FdlSpec& spec) {
  if (spec.a.gens.empty()) throw Error("the A part needs at least one generator");
  int na = static_cast<int>(spec.a.gens.size());
  int nb = static_cast<int>(spec.b.gens.size());

  std::vector<SymmetricGenerator> combined = spec.a.gens;
  for (const auto& g : spec.b.gens) combined.push_back(g);
  {
    std::set<std::string> names;
    for (const auto& g : combined)
      if (!names.insert(g.name).second)
        throw Error("duplicate generator name '" + g.name + "'");
  }
  require_indices(spec.a.relations, na, "an A relation");
  require_indices(spec.b.relations, nb, "a B relation");
  require_indices(spec.q_relations, na + nb, "a Q relation");
  require_indices(spec.d_rules, na + nb, "a D rule");

  ShuffleAlphabet alph = expand_generators(combined);
  std::vector<std::string> counted;
  for (const auto& g : spec.a.gens) counted.push_back(g.name);
  OrderSpec order = order_by_name("count-first", alph, counted);

  auto expand_family = [&](const std::vector<SymRelation>& fam) {
    SymmetricPresentation p;
    p.field = spec.field;
    p.gens = combined;
    p.relations = fam;
    return expand_presentation(p, order);
  };

  // The D family must triangulate to one rewriting rule per mixed monomial.
  ShufflePresentation d_part = expand_family(spec.d_rules);
  const ShuffleContext& ctx = d_part.ctx;
  std::set<TreeMonomial> mixed;
  for (const auto& m : enumerate_monomials(ctx.alph, 3))
    if (block_of(m, ctx.alph, na) == Block::wv) mixed.insert(m);
  {
    std::set<TreeMonomial> pivots;
    for (const auto& row : d_part.relations) pivots.insert(row.lm());
    if (pivots != mixed)
      throw Error("d rules must rewrite each mixed monomial exactly once; the "
                  "triangulated family covers a different set");
    for (const auto& row : d_part.relations)
      for (const auto& [m, c] : row.terms)
        if (block_of(m, ctx.alph, na) == Block::vv)
          throw Error("a d rule image involves two A generators");
  }
  std::map<TreeMonomial, const ShuffleElement*> rewrite;
  for (const auto& row : d_part.relations) rewrite[row.lm()] = &row;

  std::vector<SymRelation> s_shifted;
  for (const auto& rel : spec.b.relations) {
    SymRelation out;
    for (const auto& t : rel) out.push_back(shift_term(t, na));
    s_shifted.push_back(std::move(out));
  }
  ShufflePresentation s_part = expand_family(s_shifted);
  std::map<TreeMonomial, const ShuffleElement*> absorb;
  for (const auto& row : s_part.relations) absorb[row.lm()] = &row;

  // Deformed A relations: normalize mixed right-hand terms through the d
  // rules, then the pure A part must reproduce the A relation space.  The
  // orbit of a deformed relation can contain combinations with no A part at
  // all; those must lie in the B relation span and contribute nothing new.
  ShufflePresentation q_part = expand_family(spec.q_relations);
  std::vector<ShuffleElement> q_rows;
  for (ShuffleElement row : q_part.relations) {
    for (bool again = true; again;) {
      again = false;
      for (const auto& [m, c] : row.terms)
        if (block_of(m, ctx.alph, na) == Block::wv) {
          row = axpy(row, -c, *rewrite.at(m), ctx);
          again = true;
          break;
        }
    }
    if (row.is_zero()) continue;
    if (block_of(row.lm(), ctx.alph, na) == Block::vv) {
      q_rows.push_back(std::move(row));
      continue;
    }
    while (!row.is_zero()) {
      auto it = absorb.find(row.lm());
      if (it == absorb.end()) break;
      row = axpy(row, -row.lc(), *it->second, ctx);
    }
    if (!row.is_zero())
      throw Error("a deformed relation leaves a residue outside the B relation "
                  "span");
  }
  {
    std::vector<ShuffleElement> projections;
    for (const auto& row : q_rows) {
      ShuffleElement p;
      for (const auto& [m, c] : row.terms)
        if (block_of(m, ctx.alph, na) == Block::vv) p.terms.push_back({m, c});
      projections.push_back(std::move(p));
    }
    ShufflePresentation a_rows = expand_family(spec.a.relations);
    if (!same_row_space(projections, a_rows.relations, ctx))
      throw Error("the pure A parts of the deformed relations do not span the A "
                  "relation space");
  }

  AssembledFdl out;
  out.sym.field = spec.field;
  out.sym.gens = combined;
  out.sym.relations = spec.q_relations;
  for (const auto& r : spec.d_rules) out.sym.relations.push_back(r);
  for (const auto& r : s_shifted) out.sym.relations.push_back(r);
  out.order = order;
  out.q_rows = static_cast<int>(q_rows.size());
  out.d_rows = static_cast<int>(d_part.relations.size());
  out.s_rows = static_cast<int>(s_part.relations.size());
  std::vector<ShuffleElement> relations = std::move(q_rows);
  for (const auto& r : d_part.relations) relations.push_back(r);
  for (const auto& r : s_part.relations) relations.push_back(r);
  out.pres = ShufflePresentation{ctx, std::move(relations)};
  return out;
}

std::vector<BigInt> composite_dims(const std::vector<BigInt>& dims_a,
                                   const std::vector<BigInt>& dims_b, int max_arity) {
  TruncatedSeries fa = egf_from_dims(dims_a, max_arity);
  TruncatedSeries fb = egf_from_dims(dims_b, max_arity);
  return dims_from_egf(fa.compose(fb));
}

namespace {

std::vector<BigInt> part_dims(const FdlPart& part, const FieldSpec& field, int max_arity,
                              int jobs) {
  SymmetricPresentation p;
  p.field = field;
  p.gens = part.gens;
  p.relations = part.relations;
  ShufflePresentation pres =
      expand_presentation(p, OrderSpec::path_lex_plain(expand_generators(part.gens)));
  return gb_dims(buchberger(pres, max_arity - 1, jobs), max_arity);
}

}  // namespace

Weight3Report check_weight3(const FdlSpec& spec, int jobs) {
  AssembledFdl e = assemble(spec);
  GroebnerBasis gb = buchberger(e.pres, 3, jobs);
  BigInt dim_e3 = gb_dimension(gb, 4);

  std::vector<BigInt> da = part_dims(spec.a, spec.field, 4, jobs);
  std::vector<BigInt> db = spec.b.gens.empty()
                               ? std::vector<BigInt>{1, 0, 0, 0}
                               : part_dims(spec.b, spec.field, 4, jobs);
  BigInt dim_ab3 = composite_dims(da, db, 4)[3];
  if (dim_e3 > dim_ab3)
    throw Error("the assembled operad exceeds the composition product in weight 3; "
                "this indicates an engine bug");
  return Weight3Report{dim_e3 == dim_ab3, dim_e3, dim_ab3};
}

bool check_inversion(const std::vector<BigInt>& dims_p,
                     const std::vector<BigInt>& dims_dual, int N) {
  return inversion_holds(dims_p, dims_dual, N);
}

const std::vector<std::string>& fdl_preset_names() {
  static const std::vector<std::string> names = {"as", "postlie", "ctd", "bcact"};
  return names;
}

namespace {

RelationTerm rt(const FieldSpec& F, std::int64_t c, int outer, int inner, int slot, int l1,
                int l2, int l3) {
  return RelationTerm{Scalar::of_int(c, F), outer, inner, slot, {l1, l2, l3}};
}

}  // namespace

FdlSpec fdl_preset(const std::string& name, const FieldSpec& F,
                   const CoalgebraSpec& coalgebra) {
  FdlSpec s;
  s.name = name;
  s.field = F;

  if (name == "as") {
    // A = the commutative product, B = the bracket; the associative operad.
    s.a.gens = {{"s", 0, Symmetry::symmetric}};
    s.a.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3)}};
    s.b.gens = {{"b", 0, Symmetry::antisymmetric}};
    s.b.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, 1, 0, 0, 1, 2, 3, 1),
                      rt(F, 1, 0, 0, 1, 3, 1, 2)}};
    // (a*b)*c - a*(b*c) = [b,[a,c]]
    s.q_relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3),
                      rt(F, -1, 1, 1, 2, 2, 1, 3)}};
    // [a*b,c] = a*[b,c] + [a,c]*b
    s.d_rules = {{rt(F, 1, 1, 0, 1, 1, 2, 3), rt(F, -1, 0, 1, 2, 1, 2, 3),
                  rt(F, -1, 0, 1, 1, 1, 3, 2)}};
    s.splitting_note = "the retraction onto the commutative part needs characteristic "
                       "zero";
  } else if (name == "postlie") {
    s.a.gens = {{"b", 0, Symmetry::antisymmetric}};
    s.a.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, 1, 0, 0, 1, 2, 3, 1),
                      rt(F, 1, 0, 0, 1, 3, 1, 2)}};
    s.b.gens = {{"m", 0, Symmetry::none}};
    // undeformed bracket relations: s = 0
    s.q_relations = s.a.relations;
    // [a,b]oc = [aoc,b] + [a,boc]
    // ao[b,c] = (aob)oc - ao(boc) - (aoc)ob + ao(cob)
    s.d_rules = {{rt(F, 1, 1, 0, 1, 1, 2, 3), rt(F, -1, 0, 1, 1, 1, 3, 2),
                  rt(F, -1, 0, 1, 2, 1, 2, 3)},
                 {rt(F, 1, 1, 0, 2, 1, 2, 3), rt(F, -1, 1, 1, 1, 1, 2, 3),
                  rt(F, 1, 1, 1, 2, 1, 2, 3), rt(F, 1, 1, 1, 1, 1, 3, 2),
                  rt(F, -1, 1, 1, 2, 1, 3, 2)}};
    s.splitting_note = "the bracket relations are undeformed, so the projection is the "
                       "identity on them";
  } else if (name == "ctd") {
    // A = the one-sided product, B = the commutative product.
    s.a.gens = {{"z", 0, Symmetry::none}};
    s.a.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3),
                      rt(F, -1, 0, 0, 2, 1, 3, 2)}};
    s.b.gens = {{"s", 0, Symmetry::symmetric}};
    s.b.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3)}};
    // (a<b)<c - a<(b<c) - a<(c<b) = a<(b*c)
    s.q_relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3),
                      rt(F, -1, 0, 0, 2, 1, 3, 2), rt(F, -1, 0, 1, 2, 1, 2, 3)}};
    // a*(b<c) = (a*b)<c and (a<c)*b = (a*b)<c
    s.d_rules = {{rt(F, 1, 1, 0, 2, 1, 2, 3), rt(F, -1, 0, 1, 1, 1, 2, 3)},
                 {rt(F, 1, 1, 0, 1, 1, 3, 2), rt(F, -1, 0, 1, 1, 1, 2, 3)}};
    s.splitting_note = "each arity of the one-sided block is a free symmetric-group "
                       "module, so the quotient splits";
  } else if (name == "bcact") {
    BcactGenerators bg = bcact_generators(coalgebra);
    const SplitCoalgebra& split = bg.split;
    int nr = split.dim();
    s.a.gens = {bg.gens[0]};
    s.a.relations = {{rt(F, 1, 0, 0, 1, 1, 3, 2), rt(F, -1, 0, 0, 1, 1, 2, 3)},
                     {rt(F, 1, 0, 0, 2, 1, 2, 3), rt(F, -1, 0, 0, 1, 1, 2, 3)}};
    for (int k = 0; k < nr; ++k) s.b.gens.push_back(bg.gens[k + 1]);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nr; ++j) {
        std::int64_t sign = (split.degrees[i] * split.degrees[j]) % 2 ? -1 : 1;
        s.b.relations.push_back(
            {rt(F, 1, i, j, 1, 1, 3, 2), rt(F, -sign, j, i, 1, 1, 2, 3)});
      }
    // unit relations undeformed
    s.q_relations = s.a.relations;
    for (int c = 0; c < nr; ++c) {
      s.d_rules.push_back(
          {rt(F, 1, c + 1, 0, 1, 1, 2, 3), rt(F, -1, 0, c + 1, 1, 1, 3, 2)});
      SymRelation distr2{rt(F, 1, c + 1, 0, 2, 1, 2, 3), rt(F, -1, c + 1, 0, 1, 1, 2, 3),
                         rt(F, -1, 0, c + 1, 1, 1, 2, 3)};
      for (const auto& t : split.delta_bar[c])
        distr2.push_back(RelationTerm{-t.coeff, t.left + 1, t.right + 1, 1, {1, 2, 3}});
      s.d_rules.push_back(std::move(distr2));
    }
    s.splitting_note = "the unit-class relations are undeformed, so the first summand "
                       "splits off";
  } else {
    throw Error("unknown distributive-law preset '" + name + "'");
  }
  return s;
}

FdlSpec fdl_preset(const std::string& name, const FieldSpec& F) {
  return fdl_preset(name, F, coalgebra_preset("point", F));
}

const std::vector<FdlCatalogEntry>& fdl_catalog() {
  static const std::vector<FdlCatalogEntry> catalog = [] {
    auto dims = [](std::vector<long> v) {
      std::vector<BigInt> out;
      for (long x : v) out.push_back(BigInt(x));
      return out;
    };
    FieldSpec Q = FieldSpec::rationals();
    std::vector<FdlCatalogEntry> entries;
    entries.push_back({"as", "", dims({1, 2, 6, 24}),
                       fdl_preset("as", Q).splitting_note});
    entries.push_back({"postlie", "", dims({1, 3, 20, 210}),
                       fdl_preset("postlie", Q).splitting_note});
    entries.push_back({"ctd", "", dims({1, 3, 13, 75}),
                       fdl_preset("ctd", Q).splitting_note});
    std::string bnote = fdl_preset("bcact", Q).splitting_note;
    entries.push_back({"bcact", "point", dims({1, 2, 3, 4}), bnote});
    entries.push_back({"bcact", "discrete(2)", dims({1, 4, 24, 200}), bnote});
    entries.push_back({"bcact", "circle", dims({1, 4, 24, 200}), bnote});
    entries.push_back({"bcact", "sphere(2)", dims({1, 4, 24, 200}), bnote});
    entries.push_back({"bcact", "wedge_of_circles(2)", dims({1, 6, 63, 972}), bnote});
    return entries;
  }();
  return catalog;
}

}  // namespace cacti
