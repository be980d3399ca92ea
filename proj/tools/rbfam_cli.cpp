// Command-line front end. Exit codes: 0 all checks pass, 1 violations found,
// 2 usage, parse or input error, 3 internal-consistency failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "rbfam/deformation.hpp"
#include "rbfam/errors.hpp"
#include "rbfam/io.hpp"
#include "rbfam/matched.hpp"
#include "rbfam/standard.hpp"
#include "rbfam/table2.hpp"

using namespace rbfam;

namespace {

constexpr int kOk = 0, kViolations = 1, kUsage = 2, kInternal = 3;

struct UsageError : Error {
  using Error::Error;
};

Params parse_sets(const std::vector<std::string>& sets) {
  Params p;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--set expects name=value, got '" + s + "'");
    p[s.substr(0, eq)] = parse_scalar(s.substr(eq + 1));
  }
  return p;
}

std::string params_text(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) out += (out.empty() ? "" : ", ") + k + "=" + v.to_string();
  return out;
}

int print_report(const std::string& head, const Report& r) {
  if (r.ok()) {
    std::cout << head << ": ok\n";
    return kOk;
  }
  std::cout << head << ": " << r.size() << (r.size() == 1 ? " violation\n" : " violations\n") << r.to_string();
  return kViolations;
}

// First datum-like block of a file. A flagrow takes its missing parameters from --set.
ExtendingDatum load_datum(const std::string& path, const std::vector<std::string>& sets) {
  Document doc = parse_file(path);
  for (const auto& b : doc.blocks) {
    if (const auto* d = std::get_if<ExtendingDatum>(&b)) {
      if (!sets.empty()) throw UsageError("--set applies to flagrow blocks only");
      return *d;
    }
    if (const auto* fr = std::get_if<FlagRowBlock>(&b)) {
      FlagRowBlock row = *fr;
      for (const auto& [k, v] : parse_sets(sets)) row.params[k] = v;
      return row.datum();
    }
  }
  throw UsageError(path + ": no datum or flagrow block");
}

template <class T>
const T& first_block(const Document& doc, const std::string& path, const std::string& kind) {
  for (const auto& b : doc.blocks)
    if (const auto* v = std::get_if<T>(&b)) return *v;
  throw UsageError(path + ": no " + kind + " block");
}

void write_algebra(const HomAlgebra& a, const std::string& out) {
  Document doc;
  doc.blocks.push_back(a.semigroup);
  doc.blocks.push_back(a);
  std::ofstream os(out);
  if (!os) throw UsageError("cannot write " + out);
  os << serialize(doc);
  std::cout << "wrote " << a.name << " (dim " << a.dim() << ") to " << out << "\n";
}

std::vector<Scalar> scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  return out;
}

Matrix matrix_arg(const std::string& text, size_t rows, size_t cols, const std::string& flag) {
  std::vector<Scalar> xs = scalar_list(text);
  if (xs.size() != rows * cols)
    throw UsageError(flag + " expects " + std::to_string(rows * cols) + " comma-separated scalars (row-major " +
                     std::to_string(rows) + "x" + std::to_string(cols) + ")");
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = xs[i * cols + j];
  return m;
}

int cmd_check(const std::string& path) {
  Document doc = parse_file(path);
  int code = kOk;
  for (const auto& b : doc.blocks) {
    if (b.index() == 0) continue;
    std::string head = block_kind(b) + " " + block_name(b);
    try {
      Report r;
      if (const auto* s = std::get_if<FiniteSemigroup>(&b)) r = semigroup_validate(*s);
      else if (const auto* a = std::get_if<HomAlgebra>(&b)) r = check_algebra(*a);
      else if (const auto* d = std::get_if<ExtendingDatum>(&b)) r = check_extending_structure(*d);
      else if (const auto* f = std::get_if<FlagBlock>(&b)) r = check_flag(f->flag);
      else if (const auto* p = std::get_if<PairBlock>(&b)) r = check_matched_pair(p->pair);
      else if (const auto* dm = std::get_if<DeformationBlock>(&b)) r = check_deformation(dm->map);
      else if (const auto* fr = std::get_if<FlagRowBlock>(&b)) {
        const FlagRowSpec& spec = table2_row(fr->row);
        if (fr->params.size() < spec.params.size()) {
          std::cout << head << ": parameters unset (" << params_text(fr->params) << ")\n";
          continue;
        }
        r = verify_table2_row(spec, fr->params).report;
      } else if (const auto* g = std::get_if<GridBlock>(&b)) {
        auto found = enumerate_flags(g->base, g->grid);
        std::cout << head << ": " << found.size() << " of " << g->grid.size() << " points pass\n";
        continue;
      }
      code = std::max(code, print_report(head, r));
    } catch (const InternalError&) {
      throw;
    } catch (const Error& e) {
      std::cout << head << ": error: " << e.what() << "\n";
      code = std::max(code, kViolations);
    }
  }
  return code;
}

int cmd_product(const std::string& path, const std::string& out) {
  ExtendingDatum d = load_datum(path, {});
  Report r = check_extending_structure(d);
  if (!r.ok()) return print_report("datum " + d.name, r);
  HomAlgebra e = build_unified_product(d).algebra;
  e.name = d.name + "_E";
  write_algebra(e, out);
  return kOk;
}

int cmd_bicrossed(const std::string& path, const std::string& out) {
  Document doc = parse_file(path);
  const PairBlock& pb = first_block<PairBlock>(doc, path, "pair");
  Report r = check_matched_pair(pb.pair);
  if (!r.ok()) return print_report("pair " + pb.name, r);
  HomAlgebra e = build_bicrossed(pb.pair);
  e.name = pb.name + "_E";
  write_algebra(e, out);
  return kOk;
}

int verify_row(const FlagRowSpec& spec, const Params& p, const std::string& tag) {
  RowResult rr = verify_table2_row(spec, p);
  std::string head = tag + " " + params_text(p);
  if (rr.report.ok()) {
    std::cout << head << ": ok (" << rr.witnesses << (rr.witnesses == 1 ? " witness)\n" : " witnesses)\n");
    return kOk;
  }
  return print_report(head, rr.report);
}

int cmd_flag_verify(const std::string& id, const std::vector<std::string>& sets, uint64_t seed, int trials) {
  const FlagRowSpec& spec = table2_row(id);
  Params fixed = parse_sets(sets);
  for (const auto& [k, v] : fixed)
    if (std::find(spec.params.begin(), spec.params.end(), k) == spec.params.end())
      throw UsageError("row " + id + " has no parameter '" + k + "'");
  std::cout << "row " << id << " (" << spec.constraint_text() << ") seed=" << seed << " trials=" << trials << "\n";
  if (!spec.note.empty()) std::cout << "note: " << spec.note << "\n";
  if (fixed.size() == spec.params.size()) return verify_row(spec, fixed, "row " + id);
  std::mt19937_64 rng(seed);
  int code = kOk;
  for (int t = 0; t < trials; ++t) {
    Params p = random_params(spec, rng);
    for (const auto& [k, v] : fixed) p[k] = v;
    code = std::max(code, verify_row(spec, p, "row " + id));
  }
  return code;
}

int cmd_flag_enumerate(const std::string& path) {
  Document doc = parse_file(path);
  const GridBlock& g = first_block<GridBlock>(doc, path, "grid");
  auto found = enumerate_flags(g.base, g.grid);
  for (const auto& fd : found) std::cout << to_string(tuple_of(fd)) << "\n";
  std::cout << found.size() << " of " << g.grid.size() << " points pass\n";
  return kOk;
}

int cmd_table2(uint64_t seed, int trials) {
  std::cout << "table2 seed=" << seed << " trials=" << trials << "\n";
  std::mt19937_64 rng(seed);
  int checks = 0, failures = 0;
  for (const auto& spec : table2_rows()) {
    for (int t = 0; t < trials; ++t) {
      Params p = random_params(spec, rng);
      ++checks;
      if (verify_row(spec, p, "row " + spec.id) != kOk) ++failures;
    }
  }
  std::cout << checks << " checks, " << failures << " failures\n";
  return failures ? kViolations : kOk;
}

int cmd_table3() {
  Table3Result t = reproduce_table3();
  std::cout << "(l, r, t_r, t_l)\n";
  for (const auto& row : t.rows)
    std::cout << "(" << row[0] << ", " << row[1] << ", " << row[2] << ", " << row[3] << ")\n";
  std::cout << t.found.size() << " passing grid points; " << (t.matches ? "matches" : "does not match")
            << " the published table\n";
  return t.matches ? kOk : kViolations;
}

int cmd_deform(const std::string& mode, const std::string& path, const std::vector<std::string>& sets,
               const std::string& dtext) {
  if (mode == "check") {
    DeformationMap dm;
    if (dtext.empty()) {
      Document doc = parse_file(path);
      bool found = false;
      for (const auto& b : doc.blocks)
        if (const auto* db = std::get_if<DeformationBlock>(&b)) {
          dm = db->map;
          found = true;
          break;
        }
      if (!found) throw UsageError(path + ": no deformation block; pass --d");
    } else {
      dm = deformation_1dim(load_datum(path, sets), parse_scalar(dtext));
    }
    int code = print_report("deformation map", check_deformation(dm));
    if (code == kOk) {
      HomAlgebra vd = build_deformed(dm);
      vd.name = "V_d";
      Document doc;
      doc.blocks.push_back(vd);
      std::cout << serialize(doc);
    }
    return code;
  }
  if (!dtext.empty()) throw UsageError("--d applies to 'deform check' only");
  ExtendingDatum d = load_datum(path, sets);
  if (mode == "solve") {
    SolutionSet s = solve_deformation_1dim(d);
    for (const auto& [label, p] : s.constraints) std::cout << label << ": " << upoly_to_string(p, "d") << " = 0\n";
    std::cout << "solutions = " << s.to_string() << "\n";
    return kOk;
  }
  std::cout << count_index_1dim(d).to_string();
  return kOk;
}

int cmd_extract(const std::string& path, const std::string& name, const std::string& rho_text, const std::string& out) {
  Document doc = parse_file(path);
  const HomAlgebra* e = nullptr;
  for (const auto& b : doc.blocks)
    if (const auto* a = std::get_if<HomAlgebra>(&b))
      if (name.empty() || a->name == name) {
        e = a;
        break;
      }
  if (!e) throw UsageError(path + ": no algebra " + (name.empty() ? std::string("block") : "'" + name + "'"));
  size_t N = e->dim();
  std::vector<Scalar> xs = scalar_list(rho_text);
  if (xs.empty() || xs.size() % N != 0)
    throw UsageError("--rho expects a row-major n x " + std::to_string(N) + " matrix");
  Matrix rho = matrix_arg(rho_text, xs.size() / N, N, "--rho");
  ExtendingDatum d = extension_to_datum(*e, rho);
  Document res;
  res.blocks.push_back(d.base.semigroup);
  res.blocks.push_back(d.base);
  res.blocks.push_back(d);
  if (out.empty()) {
    std::cout << serialize(res);
  } else {
    std::ofstream os(out);
    if (!os) throw UsageError("cannot write " + out);
    os << serialize(res);
  }
  return kOk;
}

int cmd_equiv(const std::string& left, const std::string& right, const std::string& g, const std::string& h) {
  ExtendingDatum d1 = load_datum(left, {}), d2 = load_datum(right, {});
  size_t n = d1.base.dim(), m = d1.vdim();
  EquivWitness w{matrix_arg(g, n, m, "--g"), matrix_arg(h, m, m, "--h")};
  EquivResult r = check_datum_equivalence(d1, d2, w);
  int code = print_report("equivalence " + d1.name + " -> " + d2.name, r.report);
  if (code == kOk) std::cout << "cohomologous: " << (r.cohomologous ? "yes" : "no") << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rota-Baxter family Hom-associative algebras: checks, products, deformations"};
  app.require_subcommand(1);

  std::string file, out, row, grid, datum, dtext, left, right, gtext, htext;
  std::vector<std::string> sets;
  uint64_t seed = 1;
  int trials = 3;

  auto* check = app.add_subcommand("check", "run the checker of every block in a file");
  check->add_option("file", file, "input file")->required();

  auto* format = app.add_subcommand("format", "print a file in canonical form");
  format->add_option("file", file, "input file")->required();

  auto* product = app.add_subcommand("product", "unified product of an extending datum");
  product->add_option("--datum", file, "file with a datum or flagrow block")->required();
  product->add_option("-o", out, "output file")->required();

  auto* bicrossed = app.add_subcommand("bicrossed", "bicrossed product of a matched pair");
  bicrossed->add_option("--pair", file, "file with a pair block")->required();
  bicrossed->add_option("-o", out, "output file")->required();

  auto* flag = app.add_subcommand("flag", "flag datums");
  flag->require_subcommand(1);
  auto* verify = flag->add_subcommand("verify", "verify a row of the flag classification table");
  verify->add_option("--row", row, "row id")->required();
  verify->add_option("--set", sets, "parameter value, name=scalar");
  verify->add_option("--seed", seed, "seed for unset parameters")->capture_default_str();
  verify->add_option("--trials", trials, "random instantiations")->capture_default_str()->check(CLI::PositiveNumber);
  auto* enumerate = flag->add_subcommand("enumerate", "search a finite grid of flag datums");
  enumerate->add_option("--grid", grid, "file with a grid block")->required();

  auto* table2 = app.add_subcommand("table2", "verify every row of the flag classification table");
  table2->add_option("--seed", seed, "seed")->capture_default_str();
  table2->add_option("--trials", trials, "instantiations per row")->capture_default_str()->check(CLI::PositiveNumber);

  auto* table3 = app.add_subcommand("table3", "matched pairs of line_R and line_B from the 16-point grid");

  auto* deform = app.add_subcommand("deform", "deformation maps of a datum");
  deform->require_subcommand(1);
  std::string mode;
  const std::pair<const char*, const char*> modes[] = {
      {"check", "check a deformation map and print the deformed algebra"},
      {"solve", "solve for all deformation maps (one-dimensional base and V)"},
      {"index", "count deformation classes with representatives"}};
  for (const auto& [m, help] : modes) {
    auto* sc = deform->add_subcommand(m, help);
    sc->add_option("--datum", datum, "file with a datum, flagrow or deformation block")->required();
    sc->add_option("--set", sets, "flagrow parameter, name=scalar");
    if (std::string(m) == "check") sc->add_option("--d", dtext, "d(x) = value * a1 (one-dimensional case)");
    sc->callback([&mode, m] { mode = m; });
  }

  std::string aname, rho;
  auto* extract = app.add_subcommand("extract", "extending datum of an algebra along a retraction");
  extract->add_option("--algebra", file, "file with the algebra")->required();
  extract->add_option("--name", aname, "algebra block (default: the first)");
  extract->add_option("--rho", rho, "retraction, row-major comma-separated scalars")->required();
  extract->add_option("-o", out, "output file (default: standard output)");

  auto* equiv = app.add_subcommand("equiv", "check an equivalence witness between two datums");
  equiv->set_help_flag("--help", "Print this help message and exit");
  equiv->add_option("--left", left, "file with the source datum")->required();
  equiv->add_option("--right", right, "file with the target datum")->required();
  equiv->add_option("--g", gtext, "g : V -> R, row-major comma-separated scalars")->required();
  equiv->add_option("--h", htext, "h : V -> V, row-major comma-separated scalars")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file);
    if (*format) {
      std::cout << serialize(parse_file(file));
      return kOk;
    }
    if (*product) return cmd_product(file, out);
    if (*bicrossed) return cmd_bicrossed(file, out);
    if (*verify) return cmd_flag_verify(row, sets, seed, trials);
    if (*enumerate) return cmd_flag_enumerate(grid);
    if (*table2) return cmd_table2(seed, trials);
    if (*table3) return cmd_table3();
    if (*deform) return cmd_deform(mode, datum, sets, dtext);
    if (*extract) return cmd_extract(file, aname, rho, out);
    if (*equiv) return cmd_equiv(left, right, gtext, htext);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
