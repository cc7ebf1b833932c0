#include "cacti/coalgebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cacti {

namespace {

using Dense = std::vector<std::vector<Scalar>>;

Dense dense_coproduct(const CoalgebraSpec& c, int i) {
  Dense m(c.dim(), Row(c.dim(), Scalar::zero(c.field)));
  for (const auto& t : c.coproduct[i]) m[t.left][t.right] += t.coeff;
  return m;
}

std::string tensor_name(const CoalgebraSpec& c, int a, int b) {
  return c.names[a] + "(x)" + c.names[b];
}

}  // namespace

int CoalgebraSpec::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (names[i] == name) return i;
  return -1;
}

std::string CoalgebraSpec::str() const {
  std::ostringstream os;
  for (int i = 0; i < dim(); ++i)
    os << "basis " << names[i] << " deg " << degrees[i] << "\n";
  os << "unit " << names[unit_index] << "\n";
  for (int i = 0; i < dim(); ++i)
    if (!counit[i].is_zero()) os << "counit " << names[i] << " " << counit[i].str() << "\n";
  for (int i = 0; i < dim(); ++i) {
    os << "coproduct " << names[i] << " =";
    if (coproduct[i].empty()) {
      os << " 0";
    } else {
      bool first = true;
      for (const auto& t : coproduct[i]) {
        os << (first ? " " : " + ") << t.coeff.str() << "*" << names[t.left] << "(x)"
           << names[t.right];
        first = false;
      }
    }
    os << "\n";
  }
  return os.str();
}

CoalgebraReport validate(const CoalgebraSpec& c) {
  CoalgebraReport rep;
  auto push = [&](const std::string& axiom, bool pass, const std::string& detail) {
    rep.checks.push_back({axiom, pass, pass ? "" : detail});
    rep.all_pass = rep.all_pass && pass;
  };
  const int n = c.dim();
  if (static_cast<int>(c.degrees.size()) != n || static_cast<int>(c.counit.size()) != n ||
      static_cast<int>(c.coproduct.size()) != n)
    throw Error("coalgebra tables have inconsistent sizes");
  if (c.unit_index < 0 || c.unit_index >= n) throw Error("unit index out of range");

  std::vector<Dense> delta;
  delta.reserve(n);
  for (int i = 0; i < n; ++i) delta.push_back(dense_coproduct(c, i));

  // counit: (eps (x) id) Delta = id = (id (x) eps) Delta
  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < n && ok; ++i) {
      Row left(n, Scalar::zero(c.field)), right(n, Scalar::zero(c.field));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          left[b] += c.counit[a] * delta[i][a][b];
          right[a] += c.counit[b] * delta[i][a][b];
        }
      for (int j = 0; j < n; ++j) {
        Scalar want = (j == i) ? Scalar::one(c.field) : Scalar::zero(c.field);
        if (left[j] != want || right[j] != want) {
          ok = false;
          bad = c.names[i];
          break;
        }
      }
    }
    push("counit", ok, bad);
  }

  // coassociativity
  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < n && ok; ++i) {
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          for (int d = 0; d < n && ok; ++d) {
            Scalar lhs = Scalar::zero(c.field), rhs = Scalar::zero(c.field);
            for (int m = 0; m < n; ++m) {
              lhs += delta[i][m][d] * delta[m][a][b];  // (Delta (x) id)
              rhs += delta[i][a][m] * delta[m][b][d];  // (id (x) Delta)
            }
            if (lhs != rhs) {
              ok = false;
              bad = c.names[i] + " at " + tensor_name(c, a, b) + "(x)" + c.names[d];
            }
          }
    }
    push("coassociativity", ok, bad);
  }

  // graded cocommutativity: Delta = tau Delta with the Koszul sign
  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < n && ok; ++i)
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n; ++b) {
          Scalar flipped = delta[i][b][a];
          if ((c.degrees[a] * c.degrees[b]) % 2 != 0) flipped = -flipped;
          if (delta[i][a][b] != flipped) {
            ok = false;
            bad = c.names[i] + " at " + tensor_name(c, a, b);
            break;
          }
        }
    push("cocommutativity", ok, bad);
  }

  // group-like unit
  {
    bool ok = c.counit[c.unit_index].is_one();
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n; ++b) {
        Scalar want = (a == c.unit_index && b == c.unit_index) ? Scalar::one(c.field)
                                                               : Scalar::zero(c.field);
        if (delta[c.unit_index][a][b] != want) {
          ok = false;
          break;
        }
      }
    push("unit", ok, c.names[c.unit_index]);
  }

  // degrees: coproduct preserves them, counit vanishes above degree 0
  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < n && ok; ++i) {
      if (!c.counit[i].is_zero() && c.degrees[i] != 0) {
        ok = false;
        bad = c.names[i] + " has a counit in degree " + std::to_string(c.degrees[i]);
        break;
      }
      for (const auto& t : c.coproduct[i])
        if (!t.coeff.is_zero() &&
            c.degrees[t.left] + c.degrees[t.right] != c.degrees[i]) {
          ok = false;
          bad = c.names[i] + " at " + tensor_name(c, t.left, t.right);
          break;
        }
    }
    push("grading", ok, bad);
  }

  return rep;
}

ReducedSplit reduced_split(const CoalgebraSpec& c) {
  const int n = c.dim();
  const FieldSpec& F = c.field;
  int piv = -1;
  for (int j = 0; j < n; ++j)
    if (!c.counit[j].is_zero()) {
      piv = j;
      break;
    }
  if (piv < 0) throw Error("counit is identically zero");

  ReducedSplit rs;
  rs.split.field = F;
  std::vector<int> reduced_index;  // original index of each reduced basis vector
  for (int k = 0; k < n; ++k) {
    if (k == piv) continue;
    Row u(n, Scalar::zero(F));
    u[k] = Scalar::one(F);
    if (!c.counit[k].is_zero()) u[piv] = -(c.counit[k] / c.counit[piv]);
    rs.basis.push_back(std::move(u));
    reduced_index.push_back(k);
    std::string name = c.names[k];
    if (!c.counit[k].is_zero()) name += "b";
    while (std::find(c.names.begin(), c.names.end(), name) != c.names.end() ||
           std::find(rs.split.names.begin(), rs.split.names.end(), name) !=
               rs.split.names.end())
      name += "_";
    rs.split.names.push_back(name);
    rs.split.degrees.push_back(c.degrees[k]);
  }

  // change of basis: columns of M are unit, then the reduced vectors
  Matrix aug(F, 2 * n);
  for (int r = 0; r < n; ++r) {
    Row row(2 * n, Scalar::zero(F));
    row[0] = (r == c.unit_index) ? Scalar::one(F) : Scalar::zero(F);
    for (int k = 0; k + 1 < n; ++k) row[k + 1] = rs.basis[k][r];
    row[n + r] = Scalar::one(F);
    aug.add_row(std::move(row));
  }
  if (rref(aug) != static_cast<std::size_t>(n))
    throw Error("unit and reduced basis do not span");
  // aug now holds [I | Minv]
  Dense minv(n, Row(n, Scalar::zero(F)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) minv[r][j] = aug.a[r][n + j];

  rs.split.delta_bar.resize(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    // Delta(u_i) in original coordinates
    Dense d(n, Row(n, Scalar::zero(F)));
    for (int a = 0; a < n; ++a) {
      if (rs.basis[i][a].is_zero()) continue;
      for (const auto& t : c.coproduct[a]) d[t.left][t.right] += rs.basis[i][a] * t.coeff;
    }
    // transform both tensor legs to the split basis
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Scalar v = Scalar::zero(F);
        for (int a = 0; a < n; ++a) {
          if (minv[x][a].is_zero()) continue;
          for (int b = 0; b < n; ++b) v += minv[x][a] * minv[y][b] * d[a][b];
        }
        bool unit_x = (x == 0), unit_y = (y == 0);
        if (unit_x && unit_y) {
          if (!v.is_zero()) throw Error("coproduct has a unit(x)unit component off the unit");
        } else if (unit_x || unit_y) {
          int other = unit_x ? y - 1 : x - 1;
          Scalar want = (other == i) ? Scalar::one(F) : Scalar::zero(F);
          if (v != want)
            throw Error("coproduct does not split along the counit kernel at " +
                        rs.split.names[i]);
        } else if (!v.is_zero()) {
          rs.split.delta_bar[i].push_back({v, x - 1, y - 1});
        }
      }
  }
  return rs;
}

std::vector<std::vector<Scalar>> reassemble_coproduct(const CoalgebraSpec& c,
                                                      const ReducedSplit& rs, int i) {
  const int n = c.dim();
  const FieldSpec& F = c.field;
  Dense d(n, Row(n, Scalar::zero(F)));
  for (int a = 0; a < n; ++a) {
    d[a][c.unit_index] += rs.basis[i][a];
    d[c.unit_index][a] += rs.basis[i][a];
  }
  for (const auto& t : rs.split.delta_bar[i])
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        d[a][b] += t.coeff * rs.basis[t.left][a] * rs.basis[t.right][b];
  return d;
}

namespace {

CoalgebraSpec group_like_family(const std::vector<std::string>& names, const FieldSpec& f) {
  CoalgebraSpec c;
  c.field = f;
  c.names = names;
  c.degrees.assign(names.size(), 0);
  c.unit_index = 0;
  for (int i = 0; i < c.dim(); ++i) {
    c.counit.push_back(Scalar::one(f));
    c.coproduct.push_back({{Scalar::one(f), i, i}});
  }
  return c;
}

CoalgebraSpec primitive_family(int count, int degree, const FieldSpec& f) {
  CoalgebraSpec c;
  c.field = f;
  c.names.push_back("e");
  c.degrees.push_back(0);
  c.unit_index = 0;
  c.counit.push_back(Scalar::one(f));
  c.coproduct.push_back({{Scalar::one(f), 0, 0}});
  for (int i = 1; i <= count; ++i) {
    c.names.push_back(count == 1 ? "v" : "v" + std::to_string(i));
    c.degrees.push_back(degree);
    c.counit.push_back(Scalar::zero(f));
    c.coproduct.push_back({{Scalar::one(f), i, 0}, {Scalar::one(f), 0, i}});
  }
  return c;
}

// "discrete(2)" or "discrete2" -> ("discrete", 2)
bool split_preset_name(const std::string& s, std::string& base, int& arg) {
  std::size_t i = 0;
  while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
  base = s.substr(0, i);
  if (i == s.size()) {
    arg = -1;
    return true;
  }
  std::string rest = s.substr(i);
  if (rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
  try {
    std::size_t used = 0;
    arg = std::stoi(rest, &used);
    return used == rest.size();
  } catch (...) {
    return false;
  }
}

}  // namespace

CoalgebraSpec coalgebra_preset(const std::string& name, const FieldSpec& field) {
  std::string base;
  int arg = -1;
  if (!split_preset_name(name, base, arg))
    throw Error("bad coalgebra preset name '" + name + "'");
  if (base == "point" && arg < 0) return group_like_family({"e"}, field);
  if (base == "discrete") {
    if (arg < 1) throw Error("discrete(m) needs m >= 1");
    std::vector<std::string> names{"e"};
    if (arg == 2) names.push_back("x");
    else
      for (int i = 2; i <= arg; ++i) names.push_back("x" + std::to_string(i));
    return group_like_family(names, field);
  }
  if (base == "circle" && arg < 0) return primitive_family(1, 1, field);
  if (base == "sphere") {
    if (arg < 1) throw Error("sphere(d) needs d >= 1");
    return primitive_family(1, arg, field);
  }
  if (base == "wedge_of_circles" || base == "wedge") {
    if (arg < 1) throw Error("wedge_of_circles(m) needs m >= 1");
    return primitive_family(arg, 1, field);
  }
  throw Error("unknown coalgebra preset '" + name + "'");
}

const std::vector<std::string>& coalgebra_preset_names() {
  static const std::vector<std::string> names = {"point", "discrete(2)", "circle",
                                                 "sphere(2)", "wedge_of_circles(2)"};
  return names;
}

}  // namespace cacti
