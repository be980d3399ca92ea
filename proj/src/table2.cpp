#include "rbfam/table2.hpp"

#include "rbfam/errors.hpp"
#include "rbfam/standard.hpp"

namespace rbfam {

bool operator==(const FlagTuple& a, const FlagTuple& b) {
  return a.l == b.l && a.r == b.r && a.t_r == b.t_r && a.t_l == b.t_l && a.a1 == b.a1 && a.k1 == b.k1 &&
         a.b == b.b && a.k == b.k && a.a2 == b.a2 && a.k2 == b.k2;
}

std::string to_string(const FlagTuple& t) {
  auto s = [](const Scalar& x) { return x.to_string(); };
  return "(" + s(t.l) + ", " + s(t.r) + ", " + s(t.t_r) + ", " + s(t.t_l) + ", " + s(t.a1) + ", " + s(t.k1) +
         ", (" + s(t.b[0]) + ", " + s(t.b[1]) + "), (" + s(t.k[0]) + ", " + s(t.k[1]) + "), " + s(t.a2) + ", " +
         s(t.k2) + ")";
}

FlagDatum flag_from_tuple(const HomAlgebra& base, const FlagTuple& t) {
  if (base.dim() != 1 || base.semigroup.size() != 2)
    throw InvalidInput("flag_from_tuple: needs a one-dimensional base over a two-element semigroup");
  FlagDatum fd = FlagDatum::zero(base);
  fd.l = {t.l};
  fd.r = {t.r};
  fd.t_r(0, 0) = t.t_r;
  fd.t_l(0, 0) = t.t_l;
  fd.a1 = {t.a1};
  fd.k1 = t.k1;
  fd.b = {{t.b[0]}, {t.b[1]}};
  fd.kfam = {t.k[0], t.k[1]};
  fd.a2 = {t.a2};
  fd.k2 = t.k2;
  return fd;
}

FlagTuple tuple_of(const FlagDatum& fd) {
  if (fd.base.dim() != 1 || fd.base.semigroup.size() != 2)
    throw InvalidInput("tuple_of: needs a one-dimensional base over a two-element semigroup");
  return FlagTuple{fd.l[0],    fd.r[0],  fd.t_r(0, 0), fd.t_l(0, 0),          fd.a1[0], fd.k1,
                   {fd.b[0][0], fd.b[1][0]}, {fd.kfam[0], fd.kfam[1]}, fd.a2[0], fd.k2};
}

std::string FlagRowSpec::constraint_text() const {
  std::string out;
  for (const auto& c : constraints) {
    if (!out.empty()) out += ", ";
    out += c.param + " != ";
    for (size_t i = 0; i < c.values.size(); ++i) out += (i ? "," : "") + c.values[i].to_string();
  }
  return out;
}

namespace {

using T = FlagTuple;
const Scalar L = Scalar::lambda();
const Scalar Z = Scalar();

FlagRowSpec row(std::string id, std::vector<std::string> params, std::vector<Exclusion> cons,
                std::function<T(const Params&)> flag, std::function<std::vector<RowWitness>(const Params&)> w,
                std::string note = "") {
  return FlagRowSpec{std::move(id), std::move(params), std::move(cons), std::move(note), std::move(flag),
                     std::move(w)};
}

// Rows sharing the k1-normalising witness pair: (1/c, -x/c) onto the class
// with k1 or b scaled to 1, and (1, -x) onto the unscaled class.
std::vector<RowWitness> scaled_pair(const Scalar& c, const Scalar& x, const T& unit_cls, const T& cls) {
  return {RowWitness{c.inverse(), -x / c, unit_cls}, RowWitness{1, -x, cls}};
}

std::vector<FlagRowSpec> build_rows() {
  std::vector<FlagRowSpec> rows;
  Exclusion k1nz{"k1", {0}}, b0nz{"b0", {0}};

  rows.push_back(row("1", {"tr", "ke", "ks", "k2"}, {},
                     [](const Params& p) {
                       Scalar tr = p.at("tr"), ke = p.at("ke"), ks = p.at("ks"), k2 = p.at("k2");
                       return T{Z, Z, tr, tr, tr * tr, Z, {-tr * ke, -tr * ks}, {ke, ks}, (1 - k2) * tr, k2};
                     },
                     [](const Params& p) {
                       Scalar tr = p.at("tr"), ke = p.at("ke"), ks = p.at("ks"), k2 = p.at("k2");
                       return std::vector<RowWitness>{{1, -tr, T{Z, Z, Z, Z, Z, Z, {Z, Z}, {ke, ks}, Z, k2}}};
                     }));

  rows.push_back(row("2", {"tr", "k1", "k2"}, {k1nz},
                     [](const Params& p) {
                       Scalar tr = p.at("tr"), k1 = p.at("k1"), k2 = p.at("k2");
                       return T{Z, Z, tr, tr, (tr - k1) * tr, k1, {Z, Z}, {Z, Z}, (1 - k2) * tr, k2};
                     },
                     [](const Params& p) {
                       Scalar tr = p.at("tr"), k1 = p.at("k1"), k2 = p.at("k2");
                       return scaled_pair(k1, tr, T{Z, Z, Z, Z, Z, 1, {Z, Z}, {Z, Z}, Z, k2},
                                          T{Z, Z, Z, Z, Z, k1, {Z, Z}, {Z, Z}, Z, k2});
                     }));

  for (int sg : {1, -1}) {
    rows.push_back(row(sg > 0 ? "3a" : "3b", {"tr", "k1"}, {k1nz},
                       [sg](const Params& p) {
                         Scalar tr = p.at("tr"), k1 = p.at("k1");
                         return T{Z, Z, tr, tr, (tr - k1) * tr, k1, {L * k1, sg * L * k1}, {Z, Z}, Z, 1};
                       },
                       [sg](const Params& p) {
                         Scalar tr = p.at("tr"), k1 = p.at("k1");
                         return scaled_pair(k1, tr, T{Z, Z, Z, Z, Z, 1, {L, sg * L}, {Z, Z}, Z, 1},
                                            T{Z, Z, Z, Z, Z, k1, {L * k1, sg * L * k1}, {Z, Z}, Z, 1});
                       }));
  }

  rows.push_back(row("4", {"tr", "k1", "k2"}, {k1nz},
                     [](const Params& p) {
                       Scalar tr = p.at("tr"), k1 = p.at("k1"), k2 = p.at("k2");
                       return T{Z, Z, tr, tr, (tr - k1) * tr, k1, {L * tr, L * tr}, {-L, -L}, (1 - k2) * tr, k2};
                     },
                     [](const Params& p) {
                       Scalar tr = p.at("tr"), k1 = p.at("k1"), k2 = p.at("k2");
                       return scaled_pair(k1, tr, T{Z, Z, Z, Z, Z, 1, {Z, Z}, {-L, -L}, Z, k2},
                                          T{Z, Z, Z, Z, Z, k1, {Z, Z}, {-L, -L}, Z, k2});
                     }));

  for (int sg : {1, -1}) {
    rows.push_back(row(sg > 0 ? "5a" : "5b", {"tr", "k1"}, {k1nz},
                       [sg](const Params& p) {
                         Scalar tr = p.at("tr"), k1 = p.at("k1");
                         return T{Z, Z, tr, tr, (tr - k1) * tr, k1, {L * tr - k1 * L, L * tr + sg * k1 * L},
                                  {-L, -L}, Z, 1};
                       },
                       [sg](const Params& p) {
                         Scalar tr = p.at("tr"), k1 = p.at("k1");
                         return scaled_pair(k1, tr, T{Z, Z, Z, Z, Z, 1, {-L, sg * L}, {-L, -L}, Z, 1},
                                            T{Z, Z, Z, Z, Z, k1, {-L * k1, sg * L * k1}, {-L, -L}, Z, 1});
                       }));
  }

  rows.push_back(row("6", {"tl", "k2"}, {{"k2", {0}}},
                     [](const Params& p) {
                       Scalar tl = p.at("tl"), k2 = p.at("k2");
                       return T{Z, k2, (1 - k2) * tl, tl, (1 - k2) * tl * tl, k2 * tl, {Z, Z}, {Z, Z}, (1 - k2) * tl, k2};
                     },
                     [](const Params& p) {
                       Scalar tl = p.at("tl"), k2 = p.at("k2");
                       return std::vector<RowWitness>{{1, -tl, T{Z, k2, Z, Z, Z, Z, {Z, Z}, {Z, Z}, Z, k2}}};
                     }));

  rows.push_back(row("7", {"tl", "k2"}, {{"k2", {0, 1}}},
                     [](const Params& p) {
                       Scalar tl = p.at("tl"), k2 = p.at("k2");
                       return T{Z, k2, (1 - k2) * tl, tl, (1 - k2) * tl * tl, k2 * tl, {L * tl, L * tl}, {-L, -L},
                                (1 - k2) * tl, k2};
                     },
                     [](const Params& p) {
                       Scalar tl = p.at("tl"), k2 = p.at("k2");
                       return std::vector<RowWitness>{{1, -tl, T{Z, k2, Z, Z, Z, Z, {Z, Z}, {-L, -L}, Z, k2}}};
                     }));

  // Rows 8, 9: b = (lambda tl + b0, lambda tl + b0) resp. (lambda tl + b0, lambda tl).
  for (int both : {1, 0}) {
    rows.push_back(row(both ? "8" : "9", {"tl", "b0"}, {b0nz},
                       [both](const Params& p) {
                         Scalar tl = p.at("tl"), b0 = p.at("b0");
                         return T{Z, 1, Z, tl, Z, tl, {L * tl + b0, L * tl + both * b0}, {-L, -L}, Z, 1};
                       },
                       [both](const Params& p) {
                         Scalar tl = p.at("tl"), b0 = p.at("b0");
                         return scaled_pair(b0, tl, T{Z, 1, Z, Z, Z, Z, {1, both}, {-L, -L}, Z, 1},
                                            T{Z, 1, Z, Z, Z, Z, {b0, both * b0}, {-L, -L}, Z, 1});
                       }));
  }

  rows.push_back(row("10", {"tr", "k2"}, {{"k2", {0}}},
                     [](const Params& p) {
                       Scalar tr = p.at("tr"), k2 = p.at("k2");
                       return T{k2, Z, tr, (1 - k2) * tr, (1 - k2) * tr * tr, k2 * tr, {Z, Z}, {Z, Z}, (1 - k2) * tr, k2};
                     },
                     [](const Params& p) {
                       Scalar tr = p.at("tr"), k2 = p.at("k2");
                       return std::vector<RowWitness>{{1, -tr, T{k2, Z, Z, Z, Z, Z, {Z, Z}, {Z, Z}, Z, k2}}};
                     }));

  rows.push_back(row("11", {"tr", "k2"}, {{"k2", {0, 1}}},
                     [](const Params& p) {
                       Scalar tr = p.at("tr"), k2 = p.at("k2");
                       return T{k2, Z, tr, (1 - k2) * tr, (1 - k2) * tr * tr, k2 * tr, {L * tr, L * tr}, {-L, -L},
                                (1 - k2) * tr, k2};
                     },
                     [](const Params& p) {
                       Scalar tr = p.at("tr"), k2 = p.at("k2");
                       return std::vector<RowWitness>{{1, -tr, T{k2, Z, Z, Z, Z, Z, {Z, Z}, {-L, -L}, Z, k2}}};
                     }));

  // Rows 12, 13: b = (lambda tr + b0, lambda tr) resp. (lambda tr + b0, lambda tr + b0).
  for (int both : {0, 1}) {
    rows.push_back(row(both ? "13" : "12", {"tr", "b0"}, {b0nz},
                       [both](const Params& p) {
                         Scalar tr = p.at("tr"), b0 = p.at("b0");
                         return T{1, Z, tr, Z, Z, tr, {L * tr + b0, L * tr + both * b0}, {-L, -L}, Z, 1};
                       },
                       [both](const Params& p) {
                         Scalar tr = p.at("tr"), b0 = p.at("b0");
                         return scaled_pair(b0, tr, T{1, Z, Z, Z, Z, Z, {1, both}, {-L, -L}, Z, 1},
                                            T{1, Z, Z, Z, Z, Z, {b0, both * b0}, {-L, -L}, Z, 1});
                       }));
  }

  rows.push_back(row("14", {"k1"}, {},
                     [](const Params& p) {
                       Scalar k1 = p.at("k1");
                       return T{1, 1, Z, Z, -k1 * k1 / 4, k1, {Z, Z}, {Z, Z}, Z, 1};
                     },
                     [](const Params& p) {
                       Scalar k1 = p.at("k1");
                       return std::vector<RowWitness>{{1, -k1 / 2, T{1, 1, Z, Z, Z, Z, {Z, Z}, {Z, Z}, Z, 1}}};
                     }));

  rows.push_back(row("15", {"q", "k1"}, {{"q", {0}}},
                     [](const Params& p) {
                       Scalar q = p.at("q"), k1 = p.at("k1");
                       return T{1, 1, Z, Z, q * q - k1 * k1 / 4, k1, {Z, Z}, {Z, Z}, Z, 1};
                     },
                     [](const Params& p) {
                       Scalar q = p.at("q"), k1 = p.at("k1");
                       return std::vector<RowWitness>{
                           {q.inverse(), -k1 / (2 * q), T{1, 1, Z, Z, 1, Z, {Z, Z}, {Z, Z}, Z, 1}},
                           {1, -k1 / 2, T{1, 1, Z, Z, q * q, Z, {Z, Z}, {Z, Z}, Z, 1}}};
                     },
                     "the square root of a1 is supplied as q, with a1 = q^2"));

  rows.push_back(row("16", {"b0"}, {},
                     [](const Params& p) {
                       Scalar b0 = p.at("b0");
                       return T{1, 1, Z, Z, -b0 * b0, 2 * b0, {L * b0, L * b0}, {-L, -L}, Z, 1};
                     },
                     [](const Params& p) {
                       Scalar b0 = p.at("b0");
                       return std::vector<RowWitness>{{1, -b0, T{1, 1, Z, Z, Z, Z, {Z, Z}, {-L, -L}, Z, 1}}};
                     }));

  rows.push_back(row("17", {"b0", "k1"}, {k1nz},
                     [](const Params& p) {
                       Scalar b0 = p.at("b0"), k1 = p.at("k1");
                       return T{1, 1, Z, Z, -b0 * (b0 + k1), k1 + 2 * b0, {L * b0, L * b0}, {-L, -L}, Z, 1};
                     },
                     [](const Params& p) {
                       Scalar b0 = p.at("b0"), k1 = p.at("k1");
                       return scaled_pair(k1, b0, T{1, 1, Z, Z, Z, 1, {Z, Z}, {-L, -L}, Z, 1},
                                          T{1, 1, Z, Z, Z, k1, {Z, Z}, {-L, -L}, Z, 1});
                     }));

  rows.push_back(row("18", {"a0", "a2"}, {{"a0", {0}}},
                     [](const Params& p) {
                       Scalar a0 = p.at("a0"), a2 = p.at("a2");
                       return T{-1, -1, a2, a2, Scalar(Rational(3, 4)) * a2 * a2 + a0 * a0, -a2, {Z, Z}, {Z, Z}, a2, -1};
                     },
                     [](const Params& p) {
                       Scalar a0 = p.at("a0"), a2 = p.at("a2");
                       return std::vector<RowWitness>{
                           {a0.inverse(), -a2 / (2 * a0), T{-1, -1, Z, Z, 1, Z, {Z, Z}, {Z, Z}, Z, -1}},
                           {1, -a2 / 2, T{-1, -1, Z, Z, a0 * a0, Z, {Z, Z}, {Z, Z}, Z, -1}}};
                     },
                     "a0 is read as an auxiliary parameter with a1 = 3 a2^2 / 4 + a0^2"));

  rows.push_back(row("19", {"a2", "k2"}, {{"k2", {0, 1, -1}}},
                     [](const Params& p) {
                       Scalar a2 = p.at("a2"), k2 = p.at("k2");
                       Scalar c = 1 - k2;
                       return T{k2, k2, a2, a2, (1 - 2 * k2) * a2 * a2 / (c * c), 2 * k2 * a2 / c, {Z, Z}, {Z, Z}, a2, k2};
                     },
                     [](const Params& p) {
                       Scalar a2 = p.at("a2"), k2 = p.at("k2");
                       return std::vector<RowWitness>{
                           {1, -a2 / (1 - k2), T{k2, k2, Z, Z, Z, Z, {Z, Z}, {Z, Z}, Z, k2}}};
                     }));

  rows.push_back(row("20", {"a2", "k2"}, {{"k2", {0, 1}}},
                     [](const Params& p) {
                       Scalar a2 = p.at("a2"), k2 = p.at("k2");
                       Scalar c = 1 - k2;
                       return T{k2, k2, a2, a2, (1 - 2 * k2) * a2 * a2 / (c * c), 2 * k2 * a2 / c,
                                {a2 * L / c, a2 * L / c}, {-L, -L}, a2, k2};
                     },
                     [](const Params& p) {
                       Scalar a2 = p.at("a2"), k2 = p.at("k2");
                       return std::vector<RowWitness>{
                           {1, -a2 / (1 - k2), T{k2, k2, Z, Z, Z, Z, {Z, Z}, {-L, -L}, Z, k2}}};
                     }));
  return rows;
}

}  // namespace

const std::vector<FlagRowSpec>& table2_rows() {
  static const std::vector<FlagRowSpec> rows = build_rows();
  return rows;
}

const FlagRowSpec& table2_row(const std::string& id) {
  for (const auto& r : table2_rows())
    if (r.id == id) return r;
  throw InvalidInput("unknown table row '" + id + "'");
}

void check_params(const FlagRowSpec& spec, const Params& p) {
  for (const auto& name : spec.params)
    if (!p.count(name)) throw InvalidInput("row " + spec.id + ": parameter '" + name + "' is not set");
  for (const auto& [name, v] : p) {
    bool known = false;
    for (const auto& n : spec.params) known = known || n == name;
    if (!known) throw InvalidInput("row " + spec.id + ": unknown parameter '" + name + "'");
  }
  for (const auto& c : spec.constraints)
    for (const auto& bad : c.values)
      if (p.at(c.param) == bad)
        throw InvalidInput("row " + spec.id + ": constraint " + c.param + " != " + bad.to_string() + " violated");
}

Params random_params(const FlagRowSpec& spec, std::mt19937_64& rng) {
  static const std::vector<Scalar> pool = {1, -1, 2, -2, 3, -3, 5, -5, Scalar(Rational(1, 2)), Scalar(Rational(1, 3))};
  Params p;
  for (const auto& name : spec.params) {
    std::vector<Scalar> allowed;
    for (const auto& v : pool) {
      bool ok = true;
      for (const auto& c : spec.constraints)
        if (c.param == name)
          for (const auto& bad : c.values) ok = ok && !(v == bad);
      if (ok) allowed.push_back(v);
    }
    p[name] = allowed[rng() % allowed.size()];
  }
  return p;
}

RowResult verify_table2_row(const FlagRowSpec& spec, const Params& p) {
  check_params(spec, p);
  HomAlgebra base = standard::line_R();
  RowResult out;
  out.note = spec.note;
  FlagDatum fd = flag_from_tuple(base, spec.flag(p));
  out.report.append(check_flag(fd), "row:");
  ExtendingDatum d_row = flag_to_datum(fd);
  auto ws = spec.witnesses(p);
  out.witnesses = ws.size();
  for (size_t i = 0; i < ws.size(); ++i) {
    std::string tag = "witness" + std::to_string(i + 1) + ":";
    FlagDatum cls = flag_from_tuple(base, ws[i].cls);
    out.report.append(check_flag(cls), tag + "class:");
    Matrix g(1, 1), h(1, 1);
    g(0, 0) = ws[i].g;
    h(0, 0) = ws[i].h;
    out.report.append(check_datum_equivalence(flag_to_datum(cls), d_row, {g, h}).report, tag);
  }
  return out;
}

}  // namespace rbfam
