#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cacti/fdl.hpp"
#include "cacti/parse.hpp"
#include "cacti/pconj.hpp"
#include "cacti/series.hpp"
#include "cacti/tree_model.hpp"

using namespace cacti;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Flat key = value report; stdout stays byte-identical across reruns, so the
// wall-clock line goes to stderr.
struct Report {
  std::vector<std::pair<std::string, std::string>> rows;

  void put(const std::string& k, const std::string& v) { rows.emplace_back(k, v); }
  void put(const std::string& k, const char* v) { rows.emplace_back(k, v); }
  void put(const std::string& k, const BigInt& v) { put(k, v.str()); }
  void put(const std::string& k, std::int64_t v) { put(k, std::to_string(v)); }
  void put(const std::string& k, int v) { put(k, std::to_string(v)); }
  void put_bool(const std::string& k, bool v) { put(k, v ? "true" : "false"); }

  int finish(bool pass) {
    put("status", pass ? "pass" : "fail");
    for (const auto& [k, v] : rows) std::cout << k << " = " << v << "\n";
    return pass ? 0 : 1;
  }
};

struct CommonOpts {
  std::string field = "q";
  std::string preset;
  std::string file;
  std::string coalgebra = "point";
  std::string order;
  std::vector<std::string> counted;
  std::string dump_preset;
  int jobs = 1;
  int max_arity = 4;
};

void add_field(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--field", o.field, "coefficient field: q, f2, f3, f<p>");
}

void add_source(CLI::App* cmd, CommonOpts& o) {
  add_field(cmd, o);
  cmd->add_option("--preset", o.preset, "embedded presentation preset");
  cmd->add_option("file", o.file, "presentation file");
  cmd->add_option("--coalgebra", o.coalgebra,
                  "coalgebra preset name, or a file path containing '.' or '/'");
  cmd->add_option("--order", o.order, "override the monomial order");
  cmd->add_option("--counted", o.counted, "counted generators for count-first");
  cmd->add_option("--jobs", o.jobs, "worker threads; output does not depend on it");
  cmd->add_option("--dump-preset", o.dump_preset, "print a preset's text form and exit");
}

FieldSpec field_of(const CommonOpts& o) { return FieldSpec::parse(o.field); }

CoalgebraSpec coalg_of(const CommonOpts& o, const FieldSpec& F) {
  if (o.coalgebra.find('.') != std::string::npos ||
      o.coalgebra.find('/') != std::string::npos)
    return parse_coalgebra(read_file(o.coalgebra), F);
  return coalgebra_preset(o.coalgebra, F);
}

OperadPreset operad_of(const CommonOpts& o, const FieldSpec& F, const CoalgebraSpec& c) {
  OperadPreset p;
  if (!o.preset.empty())
    p = operad_preset(o.preset, F, c);
  else if (!o.file.empty())
    p = resolve_presentation(parse_presentation(read_file(o.file), F), F, c);
  else
    throw Error("give --preset <name> or a presentation file");
  if (!o.order.empty()) {
    p.order_name = o.order;
    ShuffleAlphabet alph = expand_generators(p.sym.gens);
    p.order = order_by_name(o.order, alph, o.counted);
    p.pres = expand_presentation(p.sym, p.order);
  }
  return p;
}

bool dump_requested(const CommonOpts& o, const FieldSpec& F) {
  if (o.dump_preset.empty()) return false;
  std::cout << preset_text(operad_preset(o.dump_preset, F, coalg_of(o, F)));
  return true;
}

std::string dims_value(const std::vector<BigInt>& dims) {
  std::string s;
  for (size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + dims[i].str();
  return s;
}

std::vector<BigInt> parse_dims_list(const std::string& s) {
  std::vector<BigInt> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw Error("dimension lists are comma-separated nonnegative integers");
    out.emplace_back(item);
  }
  if (out.empty()) throw Error("empty dimension list");
  return out;
}

std::vector<BigInt> part_dims(const FdlPart& part, const FieldSpec& F, int max_arity,
                              int jobs) {
  if (part.gens.empty()) {
    std::vector<BigInt> dims(max_arity, BigInt(0));
    dims[0] = 1;
    return dims;
  }
  SymmetricPresentation sym{F, part.gens, part.relations};
  ShuffleAlphabet alph = expand_generators(sym.gens);
  auto pres = expand_presentation(sym, OrderSpec::path_lex_plain(alph));
  return gb_dims(buchberger(pres, max_arity - 1, jobs), max_arity);
}

// --- verbs -------------------------------------------------------------------

int run_coalgebra_validate(const CommonOpts& o) {
  FieldSpec F = field_of(o);
  if (!o.dump_preset.empty()) {
    std::cout << coalgebra_preset(o.dump_preset, F).str();
    return 0;
  }
  CoalgebraSpec c =
      o.file.empty() ? coalg_of(o, F) : parse_coalgebra(read_file(o.file), F);
  CoalgebraReport rep = validate(c);
  Report out;
  out.put("field", F.str());
  out.put("dim", c.dim());
  out.put("unit", c.names[c.unit_index]);
  std::string failing;
  for (const auto& check : rep.checks) {
    out.put("axiom." + check.axiom, check.pass ? "pass" : "fail");
    if (!check.pass) {
      out.put("axiom." + check.axiom + ".witness", check.detail);
      if (failing.empty()) failing = check.axiom;
    }
  }
  if (!failing.empty()) out.put("failing", failing);
  return out.finish(rep.all_pass);
}

int run_operad_dims(const CommonOpts& o) {
  FieldSpec F = field_of(o);
  if (dump_requested(o, F)) return 0;
  CoalgebraSpec c = coalg_of(o, F);
  OperadPreset p = operad_of(o, F, c);
  GroebnerBasis gb = buchberger(p.pres, o.max_arity - 1, o.jobs);
  std::vector<BigInt> dims = gb_dims(gb, o.max_arity);
  Report out;
  out.put("preset", o.preset.empty() ? o.file : o.preset);
  out.put("coalgebra", o.coalgebra);
  out.put("field", F.str());
  out.put("order", p.order_name);
  out.put("max_arity", o.max_arity);
  out.put("complete_below", gb.complete_below);
  out.put_bool("quadratic", gb.quadratic);
  out.put("dims", dims_value(dims));
  for (int n = 1; n <= o.max_arity; ++n)
    out.put("dim." + std::to_string(n), dims[n - 1]);
  return out.finish(true);
}

int run_operad_gb(const CommonOpts& o, int max_weight, int probe_weight) {
  FieldSpec F = field_of(o);
  if (dump_requested(o, F)) return 0;
  CoalgebraSpec c = coalg_of(o, F);
  OperadPreset p = operad_of(o, F, c);
  GroebnerBasis gb = buchberger(p.pres, max_weight, o.jobs);
  Report out;
  out.put("preset", o.preset.empty() ? o.file : o.preset);
  out.put("field", F.str());
  out.put("order", p.order_name);
  out.put("max_weight", max_weight);
  out.put("relations", static_cast<int>(p.pres.relations.size()));
  out.put("basis_size", static_cast<int>(gb.elements.size()));
  out.put("max_element_weight", gb.max_element_weight());
  out.put("complete_below", gb.complete_below);
  out.put_bool("quadratic_at_bound", gb.quadratic);
  out.put("probe_weight", probe_weight);
  out.put_bool("quadratic", is_quadratic_gb(p.pres, probe_weight, o.jobs));
  for (size_t i = 0; i < gb.elements.size(); ++i)
    out.put("element." + std::to_string(i + 1), element_str(gb.elements[i], gb.ctx.alph));
  return out.finish(true);
}

int run_operad_dual(const CommonOpts& o) {
  FieldSpec F = field_of(o);
  if (dump_requested(o, F)) return 0;
  CoalgebraSpec c = coalg_of(o, F);
  OperadPreset p = operad_of(o, F, c);
  QuadraticOperad dual = koszul_dual(QuadraticOperad{p.sym.gens, p.pres});
  Report out;
  out.put("preset", o.preset.empty() ? o.file : o.preset);
  out.put("field", F.str());
  for (size_t i = 0; i < dual.gens.size(); ++i) {
    const auto& g = dual.gens[i];
    const char* s = g.sym == Symmetry::none
                        ? "none"
                        : (g.sym == Symmetry::symmetric ? "symmetric" : "antisymmetric");
    out.put("dual.generator." + std::to_string(i + 1),
            g.name + " degree " + std::to_string(g.degree) + " symmetry " + s);
  }
  out.put("dual.relations", static_cast<int>(dual.pres.relations.size()));
  for (size_t i = 0; i < dual.pres.relations.size(); ++i)
    out.put("dual.relation." + std::to_string(i + 1),
            element_str(dual.pres.relations[i], dual.pres.ctx.alph));
  if (o.max_arity > 0) {
    GroebnerBasis gb = buchberger(dual.pres, o.max_arity - 1, o.jobs);
    out.put("dual.dims", dims_value(gb_dims(gb, o.max_arity)));
  }
  return out.finish(true);
}

int run_operad_suboperad(const CommonOpts& o, const std::vector<std::string>& gens) {
  FieldSpec F = field_of(o);
  if (dump_requested(o, F)) return 0;
  CoalgebraSpec c = coalg_of(o, F);
  OperadPreset p = operad_of(o, F, c);
  GroebnerBasis gb = buchberger(p.pres, o.max_arity - 1, o.jobs);
  std::vector<BigInt> dims;
  for (int n = 1; n <= o.max_arity; ++n) dims.push_back(suboperad_dims(gb, gens, n));
  Report out;
  out.put("preset", o.preset.empty() ? o.file : o.preset);
  out.put("field", F.str());
  std::string joined;
  for (size_t i = 0; i < gens.size(); ++i) joined += (i ? "," : "") + gens[i];
  out.put("generators", joined);
  out.put("dims", dims_value(dims));
  return out.finish(true);
}

int run_fdl_check(const CommonOpts& o) {
  FieldSpec F = field_of(o);
  if (dump_requested(o, F)) return 0;
  if (o.preset.empty()) throw Error("give --preset as|postlie|ctd|bcact");
  CoalgebraSpec c = coalg_of(o, F);
  FdlSpec spec = fdl_preset(o.preset, F, c);
  AssembledFdl a = assemble(spec);
  Weight3Report rep = check_weight3(spec, o.jobs);
  Report out;
  out.put("preset", o.preset);
  out.put("coalgebra", o.coalgebra);
  out.put("field", F.str());
  out.put("q_rows", a.q_rows);
  out.put("d_rows", a.d_rows);
  out.put("s_rows", a.s_rows);
  out.put("dim_e3", rep.dim_e3);
  out.put("dim_ab3", rep.dim_ab3);
  out.put_bool("weight3", rep.passes);
  return out.finish(rep.passes);
}

int run_cacti_dims(const CommonOpts& o) {
  FieldSpec F = field_of(o);
  if (dump_requested(o, F)) return 0;
  CoalgebraSpec c = coalg_of(o, F);
  ReducedSplit rs = reduced_split(c);
  OperadPreset b = operad_preset("bcact", F, c);
  GroebnerBasis gb = buchberger(b.pres, o.max_arity - 1, o.jobs);
  FdlSpec spec = fdl_preset("bcact", F, c);
  std::vector<BigInt> perm = part_dims(spec.a, F, o.max_arity, o.jobs);
  std::vector<BigInt> nap_reduced = part_dims(spec.b, F, o.max_arity, o.jobs);
  std::vector<BigInt> composite = composite_dims(perm, nap_reduced, o.max_arity);

  Report out;
  out.put("coalgebra", o.coalgebra);
  out.put("field", F.str());
  out.put("max_arity", o.max_arity);
  bool match = true;
  std::string mismatch;
  std::vector<BigInt> totals;
  for (int n = 1; n <= o.max_arity; ++n) {
    auto graded = gb_dimension_by_degree(gb, n);
    auto oracle = bcact_dim_oracle(n, rs.split.degrees);
    BigInt total = 0;
    for (const auto& [deg, d] : graded) total += d;
    totals.push_back(total);
    if (graded != oracle && mismatch.empty()) {
      match = false;
      mismatch = "arity " + std::to_string(n);
    }
    if (total != composite[n - 1] && mismatch.empty()) {
      match = false;
      mismatch = "arity " + std::to_string(n) + " against the composite";
    }
  }
  out.put("dims", dims_value(totals));
  out.put("composite_dims", dims_value(composite));
  out.put_bool("forest_oracle_match", match);
  if (!mismatch.empty()) out.put("mismatch", mismatch);
  return out.finish(match);
}

int run_series_check(const CommonOpts& o, const std::string& dims_a,
                     const std::string& dims_b, int n) {
  FieldSpec F = field_of(o);
  if (dump_requested(o, F)) return 0;
  Report out;
  std::vector<BigInt> a, bdims;
  if (!dims_a.empty() || !dims_b.empty()) {
    if (dims_a.empty() || dims_b.empty())
      throw Error("give both --dims-a and --dims-b, or a presentation");
    a = parse_dims_list(dims_a);
    bdims = parse_dims_list(dims_b);
    if (n == 0) n = static_cast<int>(std::min(a.size(), bdims.size()));
  } else {
    if (n == 0) n = 4;
    CoalgebraSpec c = coalg_of(o, F);
    OperadPreset p = operad_of(o, F, c);
    a = gb_dims(buchberger(p.pres, n - 1, o.jobs), n);
    QuadraticOperad dual = koszul_dual(QuadraticOperad{p.sym.gens, p.pres});
    bdims = gb_dims(buchberger(dual.pres, n - 1, o.jobs), n);
    out.put("preset", o.preset.empty() ? o.file : o.preset);
  }
  bool ok = inversion_holds(a, bdims, n);
  out.put("field", F.str());
  out.put("n", n);
  out.put("dims", dims_value(a));
  out.put("dual_dims", dims_value(bdims));
  out.put_bool("inversion", ok);
  return out.finish(ok);
}

int run_groups_verify(int n, const std::string& group, const std::string& table_path,
                      int window, int compose_n, int compose_m, int jobs) {
  GroupSpec G = GroupSpec::integers();
  std::string gname = group;
  if (!table_path.empty()) {
    G = parse_group_table(read_file(table_path));
    gname = "table";
  } else if (group == "S3") {
    G = GroupSpec::symmetric3();
  } else if (group != "Z") {
    throw Error("--group must be Z or S3; use --group-table for other finite groups");
  }
  auto sample = G.sample_elements(window);
  RelationReport rel = verify_relations(n, G, sample, jobs);
  if (compose_n == 0) compose_n = std::min(n, 3);
  if (compose_m == 0) compose_m = std::min(n, 3);
  CompositionReport comp = verify_composition_formulas(compose_n, compose_m, G, sample);
  Report out;
  out.put("group", gname);
  out.put("n", n);
  out.put("window", window);
  out.put_bool("relations.composition", rel.composition);
  out.put_bool("relations.same_source", rel.same_source);
  out.put_bool("relations.disjoint", rel.disjoint);
  out.put_bool("relations.correction", rel.correction);
  out.put_bool("relations.weakened_fails", rel.weakened_fails);
  out.put("relations.checked", rel.checked);
  if (!rel.first_violation.empty()) out.put("relations.violation", rel.first_violation);
  out.put("compositions.n", compose_n);
  out.put("compositions.m", compose_m);
  out.put_bool("compositions.pass", comp.pass);
  out.put("compositions.checked", comp.checked);
  if (!comp.first_violation.empty()) out.put("compositions.violation", comp.first_violation);
  bool ok = rel.pass() && rel.weakened_fails && comp.pass;
  return out.finish(ok);
}

int run_algebra_check(const CommonOpts& o, const std::string& p_entries) {
  FieldSpec F = field_of(o);
  CommonOpts oc = o;
  if (oc.coalgebra == "point") oc.coalgebra = "discrete(2)";
  CoalgebraSpec c = coalg_of(oc, F);
  std::vector<long long> entries;
  std::stringstream ss(p_entries);
  std::string item;
  while (std::getline(ss, item, ',')) entries.push_back(std::stoll(item));
  if (entries.size() != 4) throw Error("--p takes four entries: a,b,c,d row-major");
  std::vector<std::vector<long long>> p = {{entries[0], entries[1]},
                                           {entries[2], entries[3]}};
  BCactAlgebra alg = two_point_example_algebra(p, F);
  AlgebraReport rep = check_bcact_algebra(alg, c);
  Report out;
  out.put("coalgebra", oc.coalgebra);
  out.put("field", F.str());
  out.put("dim", alg.dim);
  out.put_bool("commutation", rep.commutation_pass);
  out.put_bool("unit", rep.unit_pass);
  if (!rep.first_violation.empty()) out.put("violation", rep.first_violation);
  return out.finish(rep.pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for operads of based cacti"};
  app.require_subcommand(0, 1);

  CommonOpts o;
  int max_weight = 3, probe_weight = 4;
  std::vector<std::string> sub_gens;
  std::string dims_a, dims_b, group = "Z", table_path, p_entries = "0,0,0,1";
  int series_n = 0, gv_n = 3, window = 2, compose_n = 0, compose_m = 0;

  CLI::App* cv = app.add_subcommand("coalgebra-validate", "check the coalgebra axioms");
  add_field(cv, o);
  cv->add_option("file", o.file, "coalgebra file");
  cv->add_option("--preset", o.coalgebra, "coalgebra preset");
  cv->add_option("--dump-preset", o.dump_preset, "print a coalgebra preset and exit");

  CLI::App* od = app.add_subcommand("operad-dims", "normal-form dimensions per arity");
  add_source(od, o);
  od->add_option("--max-arity", o.max_arity, "largest arity to report");

  CLI::App* og = app.add_subcommand("operad-gb", "Groebner basis and certificate");
  add_source(og, o);
  og->add_option("--max-weight", max_weight, "completion bound for the listed basis");
  og->add_option("--probe-weight", probe_weight, "bound for the quadraticity probe");

  CLI::App* du = app.add_subcommand("operad-dual", "Koszul dual presentation");
  add_source(du, o);
  du->add_option("--max-arity", o.max_arity, "also report dual dimensions up to here");

  CLI::App* so = app.add_subcommand("operad-suboperad", "dimensions of a generated suboperad");
  add_source(so, o);
  so->add_option("--generator", sub_gens, "generating subset")->required();
  so->add_option("--max-arity", o.max_arity, "largest arity to report");

  CLI::App* fc = app.add_subcommand("fdl-check", "weight-3 distributive-law check");
  add_source(fc, o);

  CLI::App* cd = app.add_subcommand("cacti-dims", "cacti dimensions against the forest oracle");
  add_source(cd, o);
  cd->add_option("--max-arity", o.max_arity, "largest arity to compare");

  CLI::App* sc = app.add_subcommand("series-check", "generating-series inversion");
  add_source(sc, o);
  sc->add_option("--dims-a", dims_a, "primal dimensions, comma-separated");
  sc->add_option("--dims-b", dims_b, "dual dimensions, comma-separated");
  sc->add_option("--n", series_n, "truncation order");

  CLI::App* gv = app.add_subcommand("groups-verify", "group presentation relations");
  gv->add_option("--n", gv_n, "number of free factors");
  gv->add_option("--group", group, "Z or S3");
  gv->add_option("--group-table", table_path, "finite group multiplication table file");
  gv->add_option("--window", window, "integer sample window");
  gv->add_option("--compose-n", compose_n, "outer arity for composition formulas");
  gv->add_option("--compose-m", compose_m, "inner arity for composition formulas");
  gv->add_option("--jobs", o.jobs, "worker threads");

  CLI::App* ac = app.add_subcommand("algebra-check", "two-point algebra example");
  add_field(ac, o);
  ac->add_option("--coalgebra", o.coalgebra, "coalgebra preset or file");
  ac->add_option("--p", p_entries, "matrix of the deformed product, row-major");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  int rc = 2;
  try {
    if (cv->parsed())
      rc = run_coalgebra_validate(o);
    else if (od->parsed())
      rc = run_operad_dims(o);
    else if (og->parsed())
      rc = run_operad_gb(o, max_weight, probe_weight);
    else if (du->parsed())
      rc = run_operad_dual(o);
    else if (so->parsed())
      rc = run_operad_suboperad(o, sub_gens);
    else if (fc->parsed())
      rc = run_fdl_check(o);
    else if (cd->parsed())
      rc = run_cacti_dims(o);
    else if (sc->parsed())
      rc = run_series_check(o, dims_a, dims_b, series_n);
    else if (gv->parsed())
      rc = run_groups_verify(gv_n, group, table_path, window, compose_n, compose_m, o.jobs);
    else if (ac->parsed())
      rc = run_algebra_check(o, p_entries);
    else {
      std::cerr << "error = no command given; see --help\n";
      return 2;
    }
  } catch (const Error& e) {
    std::cerr << "error = " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error = " << e.what() << "\n";
    return 2;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "time_ms = " << ms << "\n";
  return rc;
}
