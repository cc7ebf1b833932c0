#include "cacti/presets.hpp"

#include <sstream>

namespace cacti {

namespace {

RelationTerm rt(const FieldSpec& F, std::int64_t c, int outer, int inner, int slot, int l1,
                int l2, int l3) {
  return RelationTerm{Scalar::of_int(c, F), outer, inner, slot, {l1, l2, l3}};
}

SymmetricGenerator gen(const std::string& name, int degree, Symmetry s) {
  return SymmetricGenerator{name, degree, s};
}

}  // namespace

BcactGenerators bcact_generators(const CoalgebraSpec& c) {
  ReducedSplit rs = reduced_split(c);
  std::vector<SymmetricGenerator> gens;
  gens.push_back(gen(c.names[c.unit_index], 0, Symmetry::none));
  for (int k = 0; k < rs.split.dim(); ++k)
    gens.push_back(gen(rs.split.names[k], rs.split.degrees[k], Symmetry::none));
  return {std::move(gens), std::move(rs.split)};
}

const std::vector<std::string>& operad_preset_names() {
  static const std::vector<std::string> names = {"com",     "lie",      "as",  "perm",
                                                 "prelie",  "mag",      "zinb", "leib",
                                                 "postlie", "comtrias", "ctd", "ctd-dual",
                                                 "nap",     "bcact"};
  return names;
}

OrderSpec order_by_name(const std::string& name, const ShuffleAlphabet& alph,
                        const std::vector<std::string>& counted) {
  if (name == "path-lex") return OrderSpec::path_lex_plain(alph);
  if (name == "path-lex-tilde-first") return OrderSpec::path_lex_tilde_first(alph);
  if (name == "depth-lex") return OrderSpec::depth_lex(alph, false);
  if (name == "depth-lex-flipped") return OrderSpec::depth_lex(alph, true);
  if (name == "count-first") {
    int sources = static_cast<int>(alph.plain_of.size());
    std::vector<bool> mask(sources, false);
    bool any = false;
    for (int s = 0; s < sources; ++s) {
      const std::string& plain = alph.names[alph.plain_of[s]];
      for (const auto& want : counted)
        if (plain == want) {
          mask[s] = true;
          any = true;
        }
    }
    if (!any) throw Error("count-first order needs at least one counted generator");
    return OrderSpec::count_first(alph, mask);
  }
  throw Error("unknown order '" + name + "'");
}

OperadPreset operad_preset(const std::string& name, const FieldSpec& F,
                           const CoalgebraSpec& coalgebra) {
  SymmetricPresentation p;
  p.field = F;
  std::string order_name;
  std::vector<std::string> counted;

  if (name == "com") {
    p.gens = {gen("m", 0, Symmetry::symmetric)};
    p.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3)}};
    order_name = "path-lex";
  } else if (name == "lie") {
    p.gens = {gen("b", 0, Symmetry::antisymmetric)};
    p.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, 1, 0, 0, 1, 2, 3, 1),
                    rt(F, 1, 0, 0, 1, 3, 1, 2)}};
    order_name = "path-lex";
  } else if (name == "as") {
    // s = a*b symmetric, b = [a,b] antisymmetric; the associative operad:
    //   [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0
    //   [a*b,c] = a*[b,c] + [a,c]*b
    //   (a*b)*c - a*(b*c) = [b,[a,c]]
    p.gens = {gen("s", 0, Symmetry::symmetric), gen("b", 0, Symmetry::antisymmetric)};
    p.relations = {{rt(F, 1, 1, 1, 2, 1, 2, 3), rt(F, 1, 1, 1, 2, 2, 3, 1),
                    rt(F, 1, 1, 1, 2, 3, 1, 2)},
                   {rt(F, 1, 1, 0, 1, 1, 2, 3), rt(F, -1, 0, 1, 2, 1, 2, 3),
                    rt(F, -1, 0, 1, 1, 1, 3, 2)},
                   {rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3),
                    rt(F, -1, 1, 1, 2, 2, 1, 3)}};
    order_name = "count-first";
    counted = {"s"};
  } else if (name == "perm") {
    p.gens = {gen("m", 0, Symmetry::none)};
    p.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3)},
                   {rt(F, 1, 0, 0, 2, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 3, 2)}};
    order_name = "path-lex-tilde-first";
  } else if (name == "prelie") {
    p.gens = {gen("t", 0, Symmetry::none)};
    p.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3),
                    rt(F, -1, 0, 0, 1, 1, 3, 2), rt(F, 1, 0, 0, 2, 1, 3, 2)}};
    order_name = "path-lex";
  } else if (name == "mag") {
    p.gens = {gen("m", 0, Symmetry::none)};
    order_name = "path-lex";
  } else if (name == "zinb") {
    // (a<b)<c = a<(b<c) + a<(c<b)
    p.gens = {gen("z", 0, Symmetry::none)};
    p.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3),
                    rt(F, -1, 0, 0, 2, 1, 3, 2)}};
    order_name = "depth-lex-flipped";
  } else if (name == "leib") {
    // [[a,b],c] = [[a,c],b] + [a,[b,c]]
    p.gens = {gen("b", 0, Symmetry::none)};
    p.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 1, 1, 3, 2),
                    rt(F, -1, 0, 0, 2, 1, 2, 3)}};
    order_name = "depth-lex";
  } else if (name == "postlie") {
    // b = [a,b] antisymmetric, m = a∘b:
    //   Jacobi
    //   (a∘b)∘c - a∘(b∘c) - (a∘c)∘b + a∘(c∘b) = a∘[b,c]
    //   [a,b]∘c = [a∘c,b] + [a,b∘c]
    p.gens = {gen("b", 0, Symmetry::antisymmetric), gen("m", 0, Symmetry::none)};
    p.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, 1, 0, 0, 1, 2, 3, 1),
                    rt(F, 1, 0, 0, 1, 3, 1, 2)},
                   {rt(F, 1, 1, 1, 1, 1, 2, 3), rt(F, -1, 1, 1, 2, 1, 2, 3),
                    rt(F, -1, 1, 1, 1, 1, 3, 2), rt(F, 1, 1, 1, 2, 1, 3, 2),
                    rt(F, -1, 1, 0, 2, 1, 2, 3)},
                   {rt(F, 1, 1, 0, 1, 1, 2, 3), rt(F, -1, 0, 1, 1, 1, 3, 2),
                    rt(F, -1, 0, 1, 2, 1, 2, 3)}};
    order_name = "count-first";
    counted = {"b"};
  } else if (name == "comtrias") {
    // s = a*b with no symmetry, d = a.b symmetric:
    //   (a*b)*c = a*(b*c) = a*(c*b); (a.b).c = a.(b.c);
    //   a*(b*c) = a*(b.c); a.(b*c) = (a.b)*c
    p.gens = {gen("s", 0, Symmetry::none), gen("d", 0, Symmetry::symmetric)};
    p.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3)},
                   {rt(F, 1, 0, 0, 2, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 3, 2)},
                   {rt(F, 1, 1, 1, 1, 1, 2, 3), rt(F, -1, 1, 1, 2, 1, 2, 3)},
                   {rt(F, 1, 0, 0, 2, 1, 2, 3), rt(F, -1, 0, 1, 2, 1, 2, 3)},
                   {rt(F, 1, 1, 0, 2, 1, 2, 3), rt(F, -1, 0, 1, 1, 1, 2, 3)}};
    order_name = "count-first";
    counted = {"s"};
  } else if (name == "ctd") {
    // s = a*b symmetric, z = a<b:
    //   (a<b)<c = a<(b<c) + a<(c<b) + a<(b*c)
    //   (a*b)<c = a*(b<c) = (a<c)*b
    //   (a*b)*c = a*(b*c)
    p.gens = {gen("s", 0, Symmetry::symmetric), gen("z", 0, Symmetry::none)};
    p.relations = {{rt(F, 1, 1, 1, 1, 1, 2, 3), rt(F, -1, 1, 1, 2, 1, 2, 3),
                    rt(F, -1, 1, 1, 2, 1, 3, 2), rt(F, -1, 1, 0, 2, 1, 2, 3)},
                   {rt(F, 1, 1, 0, 1, 1, 2, 3), rt(F, -1, 0, 1, 2, 1, 2, 3)},
                   {rt(F, 1, 1, 0, 1, 1, 2, 3), rt(F, -1, 0, 1, 1, 1, 3, 2)},
                   {rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, -1, 0, 0, 2, 1, 2, 3)}};
    order_name = "count-first";
    counted = {"z"};
  } else if (name == "ctd-dual") {
    // b = [a,b] antisymmetric, d = a.b:
    //   Jacobi; a.[b,c] = a.(b.c);
    //   [a,b].c = [a.c,b] + [a,b.c]; (a.b).c = a.(b.c) + (a.c).b
    p.gens = {gen("b", 0, Symmetry::antisymmetric), gen("d", 0, Symmetry::none)};
    p.relations = {{rt(F, 1, 0, 0, 1, 1, 2, 3), rt(F, 1, 0, 0, 1, 2, 3, 1),
                    rt(F, 1, 0, 0, 1, 3, 1, 2)},
                   {rt(F, 1, 1, 0, 2, 1, 2, 3), rt(F, -1, 1, 1, 2, 1, 2, 3)},
                   {rt(F, 1, 1, 0, 1, 1, 2, 3), rt(F, -1, 0, 1, 1, 1, 3, 2),
                    rt(F, -1, 0, 1, 2, 1, 2, 3)},
                   {rt(F, 1, 1, 1, 1, 1, 2, 3), rt(F, -1, 1, 1, 2, 1, 2, 3),
                    rt(F, -1, 1, 1, 1, 1, 3, 2)}};
    order_name = "count-first";
    counted = {"b"};
  } else if (name == "nap") {
    // One generator per class of the coalgebra's underlying space D:
    //   d'∘₁d''.(23) = (-1)^{|d'||d''|} d''∘₁d'
    for (int i = 0; i < coalgebra.dim(); ++i)
      p.gens.push_back(gen(coalgebra.names[i], coalgebra.degrees[i], Symmetry::none));
    for (int i = 0; i < coalgebra.dim(); ++i)
      for (int j = 0; j < coalgebra.dim(); ++j) {
        std::int64_t sign = (coalgebra.degrees[i] * coalgebra.degrees[j]) % 2 ? -1 : 1;
        p.relations.push_back(
            {rt(F, 1, i, j, 1, 1, 3, 2), rt(F, -sign, j, i, 1, 1, 2, 3)});
      }
    order_name = "path-lex";
  } else if (name == "bcact") {
    // Unit class u = index 0, reduced classes after; the split relations:
    //   u∘₁u.(23) = u∘₁u                 and  u∘₂u = u∘₁u          (Perm part)
    //   c'∘₁c''.(23) = ±c''∘₁c'                                  (NAP part)
    //   c∘₁u = u∘₁c.(23)                 and  c∘₂u = Σ c₍₁₎∘₁c₍₂₎  (rewriting)
    BcactGenerators bg = bcact_generators(coalgebra);
    const SplitCoalgebra& split = bg.split;
    p.gens = std::move(bg.gens);
    p.relations.push_back({rt(F, 1, 0, 0, 1, 1, 3, 2), rt(F, -1, 0, 0, 1, 1, 2, 3)});
    p.relations.push_back({rt(F, 1, 0, 0, 2, 1, 2, 3), rt(F, -1, 0, 0, 1, 1, 2, 3)});
    for (int i = 0; i < split.dim(); ++i)
      for (int j = 0; j < split.dim(); ++j) {
        std::int64_t sign = (split.degrees[i] * split.degrees[j]) % 2 ? -1 : 1;
        p.relations.push_back(
            {rt(F, 1, i + 1, j + 1, 1, 1, 3, 2), rt(F, -sign, j + 1, i + 1, 1, 1, 2, 3)});
      }
    for (int c = 0; c < split.dim(); ++c) {
      p.relations.push_back(
          {rt(F, 1, c + 1, 0, 1, 1, 2, 3), rt(F, -1, 0, c + 1, 1, 1, 3, 2)});
      SymRelation distr2{rt(F, 1, c + 1, 0, 2, 1, 2, 3), rt(F, -1, c + 1, 0, 1, 1, 2, 3),
                         rt(F, -1, 0, c + 1, 1, 1, 2, 3)};
      for (const auto& t : split.delta_bar[c])
        distr2.push_back(
            RelationTerm{-t.coeff, t.left + 1, t.right + 1, 1, {1, 2, 3}});
      p.relations.push_back(std::move(distr2));
    }
    order_name = "count-first";
    counted = {coalgebra.names[coalgebra.unit_index]};
  } else {
    throw Error("unknown operad preset '" + name + "'");
  }

  OperadPreset out;
  out.name = name;
  out.order_name = order_name;
  ShuffleAlphabet alph = expand_generators(p.gens);
  out.order = order_by_name(order_name, alph, counted);
  out.pres = expand_presentation(p, out.order);
  out.sym = std::move(p);
  return out;
}

OperadPreset operad_preset(const std::string& name, const FieldSpec& F) {
  return operad_preset(name, F, coalgebra_preset("point", F));
}

namespace {

void print_term(std::ostream& os, const RelationTerm& t,
                const std::vector<SymmetricGenerator>& gens) {
  const std::string& o = gens[t.outer].name;
  const std::string& i = gens[t.inner].name;
  if (t.slot == 1)
    os << o << "(" << i << "(" << t.leaves[0] << "," << t.leaves[1] << "),"
       << t.leaves[2] << ")";
  else
    os << o << "(" << t.leaves[0] << "," << i << "(" << t.leaves[1] << ","
       << t.leaves[2] << "))";
}

}  // namespace

std::string preset_text(const OperadPreset& p) {
  std::ostringstream os;
  for (const auto& g : p.sym.gens) {
    const char* s = g.sym == Symmetry::none
                        ? "none"
                        : (g.sym == Symmetry::symmetric ? "symmetric" : "antisymmetric");
    os << "generator " << g.name << " arity 2 degree " << g.degree << " symmetry " << s
       << "\n";
  }
  os << "order " << p.order_name;
  if (p.order.kind == OrderKind::count_first) {
    int sources = static_cast<int>(p.sym.gens.size());
    ShuffleAlphabet alph = expand_generators(p.sym.gens);
    for (int s = 0; s < sources; ++s)
      if (p.order.counted[alph.plain_of[s]]) os << " " << p.sym.gens[s].name;
  }
  os << "\n";
  for (const auto& rel : p.sym.relations) {
    os << "relation ";
    bool first = true;
    for (const auto& t : rel) {
      std::string cs = t.coeff.str();
      if (first)
        os << cs << "*";
      else if (!cs.empty() && cs[0] == '-')
        os << " - " << (-t.coeff).str() << "*";
      else
        os << " + " << cs << "*";
      first = false;
      print_term(os, t, p.sym.gens);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cacti
