#include "rbfam/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "rbfam/errors.hpp"
#include "rbfam/lexer.hpp"

namespace rbfam {

// ---------------------------------------------------------------- blocks

std::string block_kind(const Block& b) {
  static const char* kinds[] = {"import", "semigroup", "algebra", "datum", "flag",
                                "pair",   "deformation", "flagrow", "grid"};
  return kinds[b.index()];
}

std::string block_name(const Block& b) {
  struct V {
    std::string operator()(const ImportBlock&) const { return ""; }
    std::string operator()(const FiniteSemigroup& s) const { return s.name(); }
    std::string operator()(const HomAlgebra& a) const { return a.name; }
    std::string operator()(const ExtendingDatum& d) const { return d.name; }
    std::string operator()(const FlagBlock& f) const { return f.name; }
    std::string operator()(const PairBlock& p) const { return p.name; }
    std::string operator()(const DeformationBlock& d) const { return d.name; }
    std::string operator()(const FlagRowBlock& r) const { return r.name; }
    std::string operator()(const GridBlock& g) const { return g.name; }
  };
  return std::visit(V{}, b);
}

const Block* Document::find(const std::string& name) const {
  for (const auto& b : blocks)
    if (b.index() != 0 && block_name(b) == name) return &b;
  for (const auto& b : blocks)
    if (const auto* imp = std::get_if<ImportBlock>(&b))
      if (imp->doc)
        if (const Block* hit = imp->doc->find(name)) return hit;
  return nullptr;
}

ExtendingDatum FlagRowBlock::datum() const {
  ExtendingDatum d = flag_to_datum(flag());
  d.name = name;
  return d;
}

FlagDatum FlagRowBlock::flag() const {
  const FlagRowSpec& spec = table2_row(row);
  check_params(spec, params);
  return flag_from_tuple(base, spec.flag(params));
}

bool operator==(const FlagGrid& a, const FlagGrid& b) {
  return a.l == b.l && a.r == b.r && a.t_r == b.t_r && a.t_l == b.t_l && a.a1 == b.a1 && a.k1 == b.k1 &&
         a.b == b.b && a.kfam == b.kfam && a.a2 == b.a2 && a.k2 == b.k2;
}

namespace {

bool same_algebra(const HomAlgebra& a, const HomAlgebra& b) {
  return a.name == b.name && a.semigroup.name() == b.semigroup.name() && a == b;
}

struct BlockEq {
  const Block& other;
  bool operator()(const ImportBlock& a) const { return a.path == std::get<ImportBlock>(other).path; }
  bool operator()(const FiniteSemigroup& a) const {
    const auto& b = std::get<FiniteSemigroup>(other);
    return a.name() == b.name() && a == b;
  }
  bool operator()(const HomAlgebra& a) const { return same_algebra(a, std::get<HomAlgebra>(other)); }
  bool operator()(const ExtendingDatum& a) const {
    const auto& b = std::get<ExtendingDatum>(other);
    return a.name == b.name && a.base.name == b.base.name && a == b;
  }
  bool operator()(const FlagBlock& a) const {
    const auto& b = std::get<FlagBlock>(other);
    return a.name == b.name && a.flag.base.name == b.flag.base.name && a.flag == b.flag;
  }
  bool operator()(const PairBlock& a) const {
    const auto& b = std::get<PairBlock>(other);
    return a.name == b.name && a.pair.R.name == b.pair.R.name && a.pair.V.name == b.pair.V.name && a.pair == b.pair;
  }
  bool operator()(const DeformationBlock& a) const {
    const auto& b = std::get<DeformationBlock>(other);
    return a.name == b.name && a.map.datum.name == b.map.datum.name && a.map.datum == b.map.datum &&
           a.map.d == b.map.d;
  }
  bool operator()(const FlagRowBlock& a) const {
    const auto& b = std::get<FlagRowBlock>(other);
    return a.name == b.name && same_algebra(a.base, b.base) && a.row == b.row && a.params == b.params;
  }
  bool operator()(const GridBlock& a) const {
    const auto& b = std::get<GridBlock>(other);
    return a.name == b.name && same_algebra(a.base, b.base) && a.grid == b.grid;
  }
};

}  // namespace

bool operator==(const Document& a, const Document& b) {
  if (a.blocks.size() != b.blocks.size()) return false;
  for (size_t i = 0; i < a.blocks.size(); ++i) {
    if (a.blocks[i].index() != b.blocks[i].index()) return false;
    if (!std::visit(BlockEq{b.blocks[i]}, a.blocks[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------- parsing

namespace {

constexpr int kMaxImportDepth = 16;

struct Stmt {
  Token key;
  std::optional<Token> arg;  // the w of P[w]
  std::vector<Token> value;  // ends with the terminator token
};

struct Raw {
  Token kw, name;
  std::vector<Token> refs;
  std::vector<Token> weight;
  std::vector<Stmt> body;
  Token close;
};

bool is_terminator(const Token& t) {
  return t.kind == Token::Newline || t.kind == Token::End ||
         (t.kind == Token::Punct && (t.text == ";" || t.text == "}"));
}

std::string quote_name(const std::string& s) { return "'" + s + "'"; }

[[noreturn]] void fail_at(const Token& t, const std::string& expected) { TokenStream::fail_at(t, expected); }

[[noreturn]] void fail_found(const Token& t, const std::string& expected, const std::string& found) {
  throw ParseError(t.line, t.column, expected, found);
}

void expect_end(TokenStream& ts) {
  if (!is_terminator(ts.peek())) ts.fail("end of statement");
}

// ---- pass 1: split into blocks and statements

const std::vector<std::string>& block_keywords() {
  static const std::vector<std::string> kw = {"semigroup", "algebra", "datum", "flag",
                                              "pair",      "deformation", "flagrow", "grid"};
  return kw;
}

std::vector<Raw> split_blocks(TokenStream& ts) {
  std::vector<Raw> out;
  for (;;) {
    ts.skip_newlines();
    if (ts.at(Token::End)) break;
    const Token& kw = ts.peek();
    if (ts.at_ident("import")) {
      Raw r{ts.next(), {}, {}, {}, {}, {}};
      if (!ts.at(Token::String)) ts.fail("a quoted path");
      r.name = ts.next();
      if (!ts.at(Token::Newline) && !ts.at(Token::End)) ts.fail("end of line");
      out.push_back(std::move(r));
      continue;
    }
    const auto& kws = block_keywords();
    if (kw.kind != Token::Ident || std::find(kws.begin(), kws.end(), kw.text) == kws.end())
      ts.fail("a block keyword or 'import'");
    Raw r{ts.next(), {}, {}, {}, {}, {}};
    r.name = ts.expect_ident("a block name");
    const std::string& k = r.kw.text;
    if (k == "algebra") {
      ts.expect_keyword("over");
      ts.expect_keyword("QL");
      ts.expect_keyword("weight");
      while (!ts.at_ident("uses")) {
        if (ts.at(Token::Newline) || ts.at(Token::End) || ts.at_punct("{")) ts.fail("'uses'");
        r.weight.push_back(ts.next());
      }
      if (r.weight.empty()) ts.fail("a weight");
      ts.next();
      r.refs.push_back(ts.expect_ident("a semigroup name"));
    } else if (k == "deformation") {
      ts.expect_keyword("datum");
      r.refs.push_back(ts.expect_ident("a datum name"));
    } else if (k != "semigroup") {
      ts.expect_keyword("base");
      r.refs.push_back(ts.expect_ident("an algebra name"));
      if (k == "pair") {
        ts.expect_keyword("with");
        r.refs.push_back(ts.expect_ident("an algebra name"));
      }
    }
    ts.expect_punct("{");
    for (;;) {
      while (ts.at(Token::Newline) || ts.at_punct(";")) ts.next();
      if (ts.at_punct("}")) {
        r.close = ts.next();
        break;
      }
      if (ts.at(Token::End)) ts.fail("'}'");
      Stmt s{ts.expect_ident("a key"), std::nullopt, {}};
      if (ts.accept_punct("[")) {
        s.arg = ts.expect_ident("a semigroup element");
        ts.expect_punct("]");
      }
      ts.expect_punct(":");
      int depth = 0;
      for (;;) {
        const Token& t = ts.peek();
        if (t.kind == Token::End) ts.fail("'}'");
        if (depth == 0 && is_terminator(t)) {
          s.value.push_back(t);
          break;
        }
        if (t.kind == Token::Punct && t.text == "{") ++depth;
        if (t.kind == Token::Punct && t.text == "}") --depth;
        if (t.kind == Token::Newline) ts.fail("'}'");
        s.value.push_back(ts.next());
      }
      r.body.push_back(std::move(s));
    }
    if (!ts.at(Token::Newline) && !ts.at(Token::End)) ts.fail("end of line");
    out.push_back(std::move(r));
  }
  return out;
}

// ---- value parsers

struct Space {
  const std::vector<std::string>& names;
  std::string what;
  int index(const std::string& n) const {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    return -1;
  }
};

bool ends_term(const Token& t) {
  return is_terminator(t) || (t.kind == Token::Punct && t.text == ",");
}

Vec parse_combination(TokenStream& ts, const Space& sp) {
  Vec v = zero_vec(sp.names.size());
  if (ts.at(Token::Number) && ts.peek().text == "0" && ends_term(ts.peek(1))) {
    ts.next();
    return v;
  }
  bool first = true;
  for (;;) {
    bool neg = false;
    if (first) {
      neg = ts.accept_punct("-");
    } else if (ts.accept_punct("+")) {
    } else if (ts.accept_punct("-")) {
      neg = true;
    } else {
      break;
    }
    first = false;
    Scalar c = 1;
    if (!(ts.at(Token::Ident) && ts.peek().text != "l")) c = parse_coefficient(ts);
    if (!ts.at(Token::Ident)) ts.fail(sp.what);
    const Token& nt = ts.next();
    int k = sp.index(nt.text);
    if (k < 0) fail_at(nt, sp.what);
    v[k] += neg ? -c : c;
  }
  return v;
}

const Token& expect_name(TokenStream& ts, const Space& sp, int& idx) {
  if (!ts.at(Token::Ident)) ts.fail(sp.what);
  const Token& t = ts.next();
  idx = sp.index(t.text);
  if (idx < 0) fail_at(t, sp.what);
  return t;
}

std::vector<Token> parse_name_list(TokenStream& ts, const std::string& what) {
  std::vector<Token> out;
  out.push_back(ts.expect_ident(what));
  while (ts.accept_punct(",")) out.push_back(ts.expect_ident(what));
  expect_end(ts);
  std::set<std::string> seen;
  for (const auto& t : out) {
    if (t.text == "l") fail_found(t, "a name other than 'l'", quote_name(t.text));
    if (!seen.insert(t.text).second) fail_found(t, "distinct names", quote_name(t.text) + " repeated");
  }
  return out;
}

std::vector<std::string> texts(const std::vector<Token>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(t.text);
  return out;
}

Scalar parse_statement_scalar(TokenStream& ts) {
  Scalar s = parse_scalar(ts);
  expect_end(ts);
  return s;
}

std::string space_what(const std::vector<std::string>& names, const std::string& label) {
  std::string s = "a basis element of " + label + " (";
  for (size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
  return s + ")";
}

// ---- pass 2: resolution

class Resolver {
 public:
  Resolver(std::vector<Raw> raws, std::string base_dir, int depth)
      : raws_(std::move(raws)), base_dir_(std::move(base_dir)), depth_(depth), done_(raws_.size()) {}

  Document run() {
    for (size_t i = 0; i < raws_.size(); ++i) {
      const Raw& r = raws_[i];
      if (r.kw.text == "import") {
        load_import(i);
        continue;
      }
      auto [it, fresh] = index_.emplace(r.name.text, i);
      if (!fresh)
        fail_found(r.name, "a new block name",
                   quote_name(r.name.text) + " (already defined at line " + std::to_string(raws_[it->second].name.line) + ")");
    }
    for (const auto& [name, i] : index_)
      for (const auto& imp : imports_)
        if (imp->find(name)) fail_found(raws_[i].name, "a name not defined by an import", quote_name(name));
    Document doc;
    for (size_t i = 0; i < raws_.size(); ++i) doc.blocks.push_back(resolve(i));
    return doc;
  }

 private:
  void load_import(size_t i) {
    const Raw& r = raws_[i];
    if (depth_ >= kMaxImportDepth) fail_found(r.name, "an import depth below 16", "\"" + r.name.text + "\"");
    std::filesystem::path p = std::filesystem::path(base_dir_) / r.name.text;
    std::ifstream in(p);
    if (!in) fail_found(r.name, "a readable file", "\"" + r.name.text + "\"");
    std::stringstream ss;
    ss << in.rdbuf();
    std::vector<Token> toks = tokenize(ss.str());
    TokenStream ts(std::move(toks));
    Resolver sub(split_blocks(ts), p.parent_path().string(), depth_ + 1);
    auto doc = std::make_shared<const Document>(sub.run());
    imports_.push_back(doc);
    done_[i] = ImportBlock{r.name.text, doc};
  }

  const Block& lookup(const Token& ref) {
    auto it = index_.find(ref.text);
    if (it != index_.end()) return resolve(it->second);
    for (const auto& imp : imports_)
      if (const Block* b = imp->find(ref.text)) return *b;
    fail_found(ref, "a defined block name", quote_name(ref.text));
  }

  template <class T>
  const T& lookup_as(const Token& ref, const std::string& kind) {
    const Block& b = lookup(ref);
    if (const T* v = std::get_if<T>(&b)) return *v;
    fail_found(ref, "the name of " + kind, block_kind(b) + " " + quote_name(ref.text));
  }

  ExtendingDatum datum_ref(const Token& ref) {
    const Block& b = lookup(ref);
    if (const auto* d = std::get_if<ExtendingDatum>(&b)) return *d;
    if (const auto* fr = std::get_if<FlagRowBlock>(&b)) {
      try {
        return fr->datum();
      } catch (const InvalidInput& e) {
        fail_found(ref, "a flagrow with all parameters set", quote_name(ref.text));
      }
    }
    fail_found(ref, "the name of a datum", block_kind(b) + " " + quote_name(ref.text));
  }

  const Block& resolve(size_t i) {
    if (done_[i]) return *done_[i];
    if (in_progress_.count(i)) fail_found(raws_[i].name, "an acyclic reference", quote_name(raws_[i].name.text));
    in_progress_.insert(i);
    const Raw& r = raws_[i];
    const std::string& k = r.kw.text;
    Block b;
    if (k == "semigroup") b = semigroup(r);
    else if (k == "algebra") b = algebra(r);
    else if (k == "datum") b = datum(r);
    else if (k == "flag") b = flag(r);
    else if (k == "pair") b = pair(r);
    else if (k == "deformation") b = deformation(r);
    else if (k == "flagrow") b = flagrow(r);
    else b = grid(r);
    in_progress_.erase(i);
    done_[i] = std::move(b);
    return *done_[i];
  }

  // Statements with the given key, after rejecting unknown keys.
  static void check_keys(const Raw& r, const std::vector<std::string>& keys, const std::vector<std::string>& indexed) {
    std::string all;
    for (const auto& k : keys) all += (all.empty() ? "" : ", ") + k;
    for (const auto& k : indexed) all += (all.empty() ? "" : ", ") + k + "[w]";
    for (const auto& s : r.body) {
      const std::string& key = s.key.text;
      bool plain = std::find(keys.begin(), keys.end(), key) != keys.end();
      bool idx = std::find(indexed.begin(), indexed.end(), key) != indexed.end();
      if (!(plain && !s.arg) && !(idx && s.arg)) fail_found(s.key, "one of " + all, quote_name(key));
    }
  }

  static const Stmt* single(const Raw& r, const std::string& key, bool required) {
    const Stmt* hit = nullptr;
    for (const auto& s : r.body) {
      if (s.key.text != key) continue;
      if (hit) fail_found(s.key, "a single '" + key + ":' statement", quote_name(key) + " repeated");
      hit = &s;
    }
    if (!hit && required) fail_at(r.close, "'" + key + ":'");
    return hit;
  }

  static int element_of(const FiniteSemigroup& s, const Token& t) {
    int w = s.index(t.text);
    if (w < 0) {
      std::string list;
      for (size_t i = 0; i < s.size(); ++i) list += (i ? ", " : "") + s.element(i);
      fail_found(t, "an element of " + s.name() + " (" + list + ")", quote_name(t.text));
    }
    return w;
  }

  FiniteSemigroup semigroup(const Raw& r) {
    check_keys(r, {"elements", "table"}, {});
    const Stmt* es = single(r, "elements", true);
    TokenStream ets(es->value);
    std::vector<std::string> els = texts(parse_name_list(ets, "an element name"));
    size_t n = els.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n, FiniteSemigroup::kUndefined));
    FiniteSemigroup probe(r.name.text, els, table);
    for (const auto& s : r.body) {
      if (s.key.text != "table") continue;
      TokenStream ts(s.value);
      const Token& at = ts.peek();
      int a = element_of(probe, ts.expect_ident("an element name"));
      ts.expect_punct("*");
      int b = element_of(probe, ts.expect_ident("an element name"));
      ts.expect_punct("=");
      int c = element_of(probe, ts.expect_ident("an element name"));
      expect_end(ts);
      if (table[a][b] != FiniteSemigroup::kUndefined)
        fail_found(at, "a new table entry", quote_name(els[a] + "*" + els[b]) + " repeated");
      table[a][b] = c;
    }
    return FiniteSemigroup(r.name.text, els, table);
  }

  HomAlgebra algebra(const Raw& r) {
    check_keys(r, {"dim", "basis", "mul", "theta"}, {"P"});
    std::vector<Token> wt = r.weight;
    wt.push_back(Token{Token::End, "", wt.back().line, wt.back().column + static_cast<int>(wt.back().text.size())});
    TokenStream wts(wt);
    Scalar weight = parse_scalar(wts);
    if (!wts.at(Token::End)) wts.fail("'uses'");
    const FiniteSemigroup& sg = lookup_as<FiniteSemigroup>(r.refs[0], "a semigroup");

    const Stmt* bs = single(r, "basis", true);
    TokenStream bts(bs->value);
    std::vector<std::string> basis = texts(parse_name_list(bts, "a basis name"));
    if (const Stmt* ds = single(r, "dim", false)) {
      TokenStream dts(ds->value);
      const Token& at = dts.peek();
      unsigned long dim = dts.expect_uint("a dimension");
      expect_end(dts);
      if (dim != basis.size())
        fail_found(at, "dim equal to the basis size " + std::to_string(basis.size()), quote_name(at.text));
    }
    HomAlgebra a = HomAlgebra::zero(r.name.text, basis, sg, weight);
    Space sp{a.basis, space_what(a.basis, r.name.text)};
    std::set<std::string> seen;
    for (const auto& s : r.body) {
      const std::string& key = s.key.text;
      if (key != "mul" && key != "theta" && key != "P") continue;
      TokenStream ts(s.value);
      const Token& at = ts.peek();
      int i = 0, j = 0;
      std::string entry = key;
      if (s.arg) entry += "[" + s.arg->text + "]";
      int w = s.arg ? element_of(sg, *s.arg) : 0;
      expect_name(ts, sp, i);
      if (key == "mul") {
        ts.expect_punct("*");
        expect_name(ts, sp, j);
        ts.expect_punct("=");
        entry += " " + a.basis[i] + "*" + a.basis[j];
      } else {
        ts.expect_arrow();
        entry += " " + a.basis[i];
      }
      Vec v = parse_combination(ts, sp);
      expect_end(ts);
      if (!seen.insert(entry).second) fail_found(at, "a new entry", quote_name(entry) + " repeated");
      if (key == "mul") a.mu.set_on_basis(i, j, v);
      else if (key == "theta") a.theta.set_column(i, v);
      else a.P[w].set_column(i, v);
    }
    return a;
  }

  // Parses "<r>|<v> -> combination" style entries into bilinear maps.
  struct TensorTarget {
    Bilinear* t;
    const Space* left;
    const Space* right;
    const Space* out;
  };

  static void parse_tensor_entry(const Stmt& s, const TensorTarget& tt, std::set<std::string>& seen) {
    TokenStream ts(s.value);
    const Token& at = ts.peek();
    int i = 0, j = 0;
    expect_name(ts, *tt.left, i);
    ts.expect_punct("|");
    expect_name(ts, *tt.right, j);
    ts.expect_arrow();
    Vec v = parse_combination(ts, *tt.out);
    expect_end(ts);
    std::string entry = s.key.text + " " + tt.left->names[i] + "|" + tt.right->names[j];
    if (!seen.insert(entry).second) fail_found(at, "a new entry", quote_name(entry) + " repeated");
    tt.t->set_on_basis(i, j, v);
  }

  static void parse_map_entry(const Stmt& s, Matrix& m, const Space& in, const Space& out, std::set<std::string>& seen) {
    TokenStream ts(s.value);
    const Token& at = ts.peek();
    int i = 0;
    expect_name(ts, in, i);
    ts.expect_arrow();
    Vec v = parse_combination(ts, out);
    expect_end(ts);
    std::string entry = s.key.text + (s.arg ? "[" + s.arg->text + "]" : "") + " " + in.names[i];
    if (!seen.insert(entry).second) fail_found(at, "a new entry", quote_name(entry) + " repeated");
    m.set_column(i, v);
  }

  static void check_disjoint(const HomAlgebra& base, const std::vector<Token>& names) {
    for (const auto& t : names)
      if (std::find(base.basis.begin(), base.basis.end(), t.text) != base.basis.end())
        fail_found(t, "a name not in the basis of " + base.name, quote_name(t.text));
  }

  ExtendingDatum datum(const Raw& r) {
    check_keys(r, {"vdim", "vbasis", "tri_l", "tri_r", "harp_r", "harp_l", "f", "mul_V", "eta", "theta_V"},
               {"Q", "P_V"});
    const HomAlgebra& base = lookup_as<HomAlgebra>(r.refs[0], "an algebra");
    const Stmt* vs = single(r, "vbasis", true);
    TokenStream vts(vs->value);
    std::vector<Token> vnames = parse_name_list(vts, "a basis name");
    check_disjoint(base, vnames);
    if (const Stmt* ds = single(r, "vdim", false)) {
      TokenStream dts(ds->value);
      const Token& at = dts.peek();
      unsigned long dim = dts.expect_uint("a dimension");
      expect_end(dts);
      if (dim != vnames.size())
        fail_found(at, "vdim equal to the vbasis size " + std::to_string(vnames.size()), quote_name(at.text));
    }
    ExtendingDatum d = ExtendingDatum::zero(base, texts(vnames), r.name.text);
    Space rs{d.base.basis, space_what(d.base.basis, base.name)};
    Space vsp{d.vbasis, space_what(d.vbasis, "V")};
    std::map<std::string, TensorTarget> tensors = {
        {"tri_l", {&d.tri_l, &rs, &vsp, &vsp}},  {"tri_r", {&d.tri_r, &vsp, &rs, &vsp}},
        {"harp_r", {&d.harp_r, &vsp, &rs, &rs}}, {"harp_l", {&d.harp_l, &rs, &vsp, &rs}},
        {"f", {&d.f, &vsp, &vsp, &rs}},          {"mul_V", {&d.mul_V, &vsp, &vsp, &vsp}}};
    std::set<std::string> seen;
    for (const auto& s : r.body) {
      const std::string& key = s.key.text;
      if (auto it = tensors.find(key); it != tensors.end()) {
        parse_tensor_entry(s, it->second, seen);
      } else if (key == "Q") {
        parse_map_entry(s, d.Q[element_of(base.semigroup, *s.arg)], vsp, rs, seen);
      } else if (key == "P_V") {
        parse_map_entry(s, d.P_V[element_of(base.semigroup, *s.arg)], vsp, vsp, seen);
      } else if (key == "eta") {
        parse_map_entry(s, d.eta, vsp, rs, seen);
      } else if (key == "theta_V") {
        parse_map_entry(s, d.theta_V, vsp, vsp, seen);
      }
    }
    return d;
  }

  FlagBlock flag(const Raw& r) {
    check_keys(r, {"l", "r", "t_r", "t_l", "a1", "k1", "a2", "k2"}, {"b", "k"});
    const HomAlgebra& base = lookup_as<HomAlgebra>(r.refs[0], "an algebra");
    FlagDatum fd = FlagDatum::zero(base);
    Space rs{fd.base.basis, space_what(fd.base.basis, base.name)};
    std::set<std::string> seen;
    for (const auto& s : r.body) {
      const std::string& key = s.key.text;
      if (key == "t_r" || key == "t_l") {
        parse_map_entry(s, key == "t_r" ? fd.t_r : fd.t_l, rs, rs, seen);
        continue;
      }
      std::string entry = key + (s.arg ? "[" + s.arg->text + "]" : "");
      if (!seen.insert(entry).second) fail_found(s.key, "a new entry", quote_name(entry) + " repeated");
      TokenStream ts(s.value);
      if (key == "k1" || key == "k2" || key == "k") {
        Scalar v = parse_statement_scalar(ts);
        if (key == "k1") fd.k1 = v;
        else if (key == "k2") fd.k2 = v;
        else fd.kfam[element_of(base.semigroup, *s.arg)] = v;
      } else {
        Vec v = parse_combination(ts, rs);
        expect_end(ts);
        if (key == "l") fd.l = v;
        else if (key == "r") fd.r = v;
        else if (key == "a1") fd.a1 = v;
        else if (key == "a2") fd.a2 = v;
        else fd.b[element_of(base.semigroup, *s.arg)] = v;
      }
    }
    return {r.name.text, fd};
  }

  PairBlock pair(const Raw& r) {
    check_keys(r, {"tri_l", "tri_r", "harp_r", "harp_l"}, {});
    const HomAlgebra& R = lookup_as<HomAlgebra>(r.refs[0], "an algebra");
    const HomAlgebra& V = lookup_as<HomAlgebra>(r.refs[1], "an algebra");
    for (const auto& n : V.basis)
      if (std::find(R.basis.begin(), R.basis.end(), n) != R.basis.end())
        fail_found(r.refs[1], "an algebra with basis names disjoint from " + R.name, quote_name(V.name));
    MatchedPair mp = MatchedPair::zero(R, V);
    Space rs{mp.R.basis, space_what(mp.R.basis, R.name)};
    Space vsp{mp.V.basis, space_what(mp.V.basis, V.name)};
    std::map<std::string, TensorTarget> tensors = {{"tri_l", {&mp.tri_l, &rs, &vsp, &vsp}},
                                                   {"tri_r", {&mp.tri_r, &vsp, &rs, &vsp}},
                                                   {"harp_r", {&mp.harp_r, &vsp, &rs, &rs}},
                                                   {"harp_l", {&mp.harp_l, &rs, &vsp, &rs}}};
    std::set<std::string> seen;
    for (const auto& s : r.body) parse_tensor_entry(s, tensors.at(s.key.text), seen);
    return {r.name.text, mp};
  }

  DeformationBlock deformation(const Raw& r) {
    check_keys(r, {"d"}, {});
    ExtendingDatum d = datum_ref(r.refs[0]);
    DeformationMap dm{d, Matrix(d.base.dim(), d.vdim())};
    Space rs{dm.datum.base.basis, space_what(dm.datum.base.basis, dm.datum.base.name)};
    Space vsp{dm.datum.vbasis, space_what(dm.datum.vbasis, "V")};
    std::set<std::string> seen;
    for (const auto& s : r.body) parse_map_entry(s, dm.d, vsp, rs, seen);
    return {r.name.text, dm};
  }

  FlagRowBlock flagrow(const Raw& r) {
    check_keys(r, {"row", "set"}, {});
    const HomAlgebra& base = lookup_as<HomAlgebra>(r.refs[0], "an algebra");
    if (base.dim() != 1) fail_found(r.refs[0], "a one-dimensional algebra", quote_name(base.name));
    FlagRowBlock fr{r.name.text, base, "", {}};
    const Stmt* rs = single(r, "row", true);
    TokenStream ts(rs->value);
    const Token& at = ts.peek();
    std::string id;
    if (ts.at(Token::Number)) {
      id = ts.next().text;
      const Token& nx = ts.peek();
      if (nx.kind == Token::Ident && nx.line == at.line && nx.column == at.column + static_cast<int>(id.size()))
        id += ts.next().text;
    } else {
      ts.fail("a row id");
    }
    expect_end(ts);
    std::string ids;
    bool known = false;
    for (const auto& spec : table2_rows()) {
      ids += (ids.empty() ? "" : ", ") + spec.id;
      known = known || spec.id == id;
    }
    if (!known) fail_found(at, "a row id (" + ids + ")", quote_name(id));
    fr.row = id;
    const FlagRowSpec& spec = table2_row(id);
    for (const auto& s : r.body) {
      if (s.key.text != "set") continue;
      TokenStream st(s.value);
      const Token& pt = st.expect_ident("a parameter name");
      if (std::find(spec.params.begin(), spec.params.end(), pt.text) == spec.params.end()) {
        std::string ps;
        for (const auto& p : spec.params) ps += (ps.empty() ? "" : ", ") + p;
        fail_found(pt, "a parameter of row " + id + " (" + ps + ")", quote_name(pt.text));
      }
      st.expect_punct("=");
      Scalar v = parse_statement_scalar(st);
      if (!fr.params.emplace(pt.text, v).second) fail_found(pt, "a new parameter", quote_name(pt.text) + " repeated");
    }
    return fr;
  }

  GridBlock grid(const Raw& r) {
    check_keys(r, {"l", "r", "t_r", "t_l", "a1", "k1", "a2", "k2"}, {"b", "k"});
    const HomAlgebra& base = lookup_as<HomAlgebra>(r.refs[0], "an algebra");
    GridBlock g{r.name.text, base, {}};
    g.grid.b.assign(base.semigroup.size(), {});
    g.grid.kfam.assign(base.semigroup.size(), {});
    Space rs{g.base.basis, space_what(g.base.basis, base.name)};
    std::set<std::string> seen;
    auto vec_list = [&](TokenStream& ts) {
      std::vector<Vec> out;
      do out.push_back(parse_combination(ts, rs));
      while (ts.accept_punct(","));
      expect_end(ts);
      return out;
    };
    auto scalar_list = [&](TokenStream& ts) {
      std::vector<Scalar> out;
      do out.push_back(parse_scalar(ts));
      while (ts.accept_punct(","));
      expect_end(ts);
      return out;
    };
    auto matrix_list = [&](TokenStream& ts) {
      std::vector<Matrix> out;
      do {
        ts.expect_punct("{");
        Matrix m(base.dim(), base.dim());
        std::set<int> cols;
        while (!ts.at_punct("}")) {
          if (!cols.empty()) ts.expect_punct(",");
          int i = 0;
          const Token& at = ts.peek();
          expect_name(ts, rs, i);
          if (!cols.insert(i).second) fail_found(at, "a new column", quote_name(at.text) + " repeated");
          ts.expect_arrow();
          m.set_column(i, parse_combination(ts, rs));
        }
        ts.next();
        out.push_back(m);
      } while (ts.accept_punct(","));
      expect_end(ts);
      return out;
    };
    for (const auto& s : r.body) {
      const std::string& key = s.key.text;
      std::string entry = key + (s.arg ? "[" + s.arg->text + "]" : "");
      if (!seen.insert(entry).second) fail_found(s.key, "a new entry", quote_name(entry) + " repeated");
      TokenStream ts(s.value);
      if (key == "l") g.grid.l = vec_list(ts);
      else if (key == "r") g.grid.r = vec_list(ts);
      else if (key == "a1") g.grid.a1 = vec_list(ts);
      else if (key == "a2") g.grid.a2 = vec_list(ts);
      else if (key == "t_r") g.grid.t_r = matrix_list(ts);
      else if (key == "t_l") g.grid.t_l = matrix_list(ts);
      else if (key == "k1") g.grid.k1 = scalar_list(ts);
      else if (key == "k2") g.grid.k2 = scalar_list(ts);
      else if (key == "b") g.grid.b[element_of(base.semigroup, *s.arg)] = vec_list(ts);
      else g.grid.kfam[element_of(base.semigroup, *s.arg)] = scalar_list(ts);
    }
    // Fields left out contribute their zero value.
    Vec z = zero_vec(base.dim());
    Matrix zm(base.dim(), base.dim());
    for (auto* v : {&g.grid.l, &g.grid.r, &g.grid.a1, &g.grid.a2})
      if (v->empty()) v->push_back(z);
    for (auto* m : {&g.grid.t_r, &g.grid.t_l})
      if (m->empty()) m->push_back(zm);
    for (auto* k : {&g.grid.k1, &g.grid.k2})
      if (k->empty()) k->push_back(Scalar(0));
    for (auto& b : g.grid.b)
      if (b.empty()) b.push_back(z);
    for (auto& k : g.grid.kfam)
      if (k.empty()) k.push_back(Scalar(0));
    return g;
  }

  std::vector<Raw> raws_;
  std::string base_dir_;
  int depth_;
  std::vector<std::optional<Block>> done_;
  std::map<std::string, size_t> index_;
  std::set<size_t> in_progress_;
  std::vector<std::shared_ptr<const Document>> imports_;
};

}  // namespace

Document parse_document(std::string_view text, const std::string& base_dir) {
  TokenStream ts(tokenize(text));
  Resolver r(split_blocks(ts), base_dir, 0);
  return r.run();
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), std::filesystem::path(path).parent_path().string());
}

// ---------------------------------------------------------------- serialization

std::string format_combination(const Vec& v, const std::vector<std::string>& names) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    const Scalar& c = v[k];
    if (c.is_zero()) continue;
    bool first = out.empty();
    if (c.is_constant() || c.is_monomial()) {
      bool neg = c.num().lead() < 0;
      std::string mag = (neg ? -c : c).to_string();
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      out += mag + " " + names[k];
    } else {
      std::string s = c.is_polynomial() ? "(" + c.to_string() + ")" : c.to_string();
      out += (first ? "" : " + ") + s + " " + names[k];
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

void emit_tensor(std::ostringstream& os, const std::string& key, const Bilinear& t, const std::vector<std::string>& ln,
                 const std::vector<std::string>& rn, const std::vector<std::string>& on, const std::string& sep,
                 const std::string& arrow) {
  for (size_t i = 0; i < t.left_dim(); ++i)
    for (size_t j = 0; j < t.right_dim(); ++j) {
      Vec v = t.on_basis(i, j);
      if (is_zero(v)) continue;
      os << "  " << key << ": " << ln[i] << sep << rn[j] << arrow << format_combination(v, on) << "\n";
    }
}

void emit_map(std::ostringstream& os, const std::string& key, const Matrix& m, const std::vector<std::string>& in,
              const std::vector<std::string>& out) {
  for (size_t j = 0; j < m.cols(); ++j) {
    Vec v = m.column(j);
    if (is_zero(v)) continue;
    os << "  " << key << ": " << in[j] << " -> " << format_combination(v, out) << "\n";
  }
}

std::string matrix_literal(const Matrix& m, const std::vector<std::string>& names) {
  std::vector<std::string> cols;
  for (size_t j = 0; j < m.cols(); ++j) {
    Vec v = m.column(j);
    if (!is_zero(v)) cols.push_back(names[j] + " -> " + format_combination(v, names));
  }
  return "{" + join(cols) + "}";
}

struct Emit {
  std::ostringstream& os;

  void operator()(const ImportBlock& b) const { os << "import \"" << b.path << "\"\n"; }

  void operator()(const FiniteSemigroup& s) const {
    os << "semigroup " << s.name() << " {\n  elements: " << join(s.elements()) << "\n";
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = 0; j < s.size(); ++j)
        if (s.mul(i, j) != FiniteSemigroup::kUndefined)
          os << "  table: " << s.element(i) << "*" << s.element(j) << " = " << s.element(s.mul(i, j)) << "\n";
    os << "}\n";
  }

  void operator()(const HomAlgebra& a) const {
    os << "algebra " << a.name << " over QL weight " << a.weight.to_string() << " uses " << a.semigroup.name()
       << " {\n  dim: " << a.dim() << "\n  basis: " << join(a.basis) << "\n";
    for (size_t i = 0; i < a.dim(); ++i)
      for (size_t j = 0; j < a.dim(); ++j) {
        Vec v = a.mu.on_basis(i, j);
        if (!is_zero(v)) os << "  mul: " << a.basis[i] << "*" << a.basis[j] << " = " << format_combination(v, a.basis) << "\n";
      }
    emit_map(os, "theta", a.theta, a.basis, a.basis);
    for (size_t w = 0; w < a.semigroup.size(); ++w) emit_map(os, "P[" + a.semigroup.element(w) + "]", a.P[w], a.basis, a.basis);
    os << "}\n";
  }

  void operator()(const ExtendingDatum& d) const {
    const auto& rn = d.base.basis;
    const auto& vn = d.vbasis;
    os << "datum " << d.name << " base " << d.base.name << " {\n  vdim: " << d.vdim() << "\n  vbasis: " << join(vn)
       << "\n";
    emit_tensor(os, "tri_l", d.tri_l, rn, vn, vn, "|", " -> ");
    emit_tensor(os, "tri_r", d.tri_r, vn, rn, vn, "|", " -> ");
    emit_tensor(os, "harp_r", d.harp_r, vn, rn, rn, "|", " -> ");
    emit_tensor(os, "harp_l", d.harp_l, rn, vn, rn, "|", " -> ");
    emit_tensor(os, "f", d.f, vn, vn, rn, "|", " -> ");
    emit_tensor(os, "mul_V", d.mul_V, vn, vn, vn, "|", " -> ");
    const auto& sg = d.base.semigroup;
    for (size_t w = 0; w < sg.size(); ++w) emit_map(os, "Q[" + sg.element(w) + "]", d.Q[w], vn, rn);
    for (size_t w = 0; w < sg.size(); ++w) emit_map(os, "P_V[" + sg.element(w) + "]", d.P_V[w], vn, vn);
    emit_map(os, "eta", d.eta, vn, rn);
    emit_map(os, "theta_V", d.theta_V, vn, vn);
    os << "}\n";
  }

  void operator()(const FlagBlock& b) const {
    const FlagDatum& f = b.flag;
    const auto& rn = f.base.basis;
    const auto& sg = f.base.semigroup;
    os << "flag " << b.name << " base " << f.base.name << " {\n";
    auto vec = [&](const std::string& k, const Vec& v) {
      if (!is_zero(v)) os << "  " << k << ": " << format_combination(v, rn) << "\n";
    };
    auto sc = [&](const std::string& k, const Scalar& s) {
      if (!s.is_zero()) os << "  " << k << ": " << s.to_string() << "\n";
    };
    vec("l", f.l);
    vec("r", f.r);
    emit_map(os, "t_r", f.t_r, rn, rn);
    emit_map(os, "t_l", f.t_l, rn, rn);
    vec("a1", f.a1);
    sc("k1", f.k1);
    for (size_t w = 0; w < sg.size(); ++w) vec("b[" + sg.element(w) + "]", f.b[w]);
    for (size_t w = 0; w < sg.size(); ++w) sc("k[" + sg.element(w) + "]", f.kfam[w]);
    vec("a2", f.a2);
    sc("k2", f.k2);
    os << "}\n";
  }

  void operator()(const PairBlock& b) const {
    const MatchedPair& p = b.pair;
    const auto& rn = p.R.basis;
    const auto& vn = p.V.basis;
    os << "pair " << b.name << " base " << p.R.name << " with " << p.V.name << " {\n";
    emit_tensor(os, "tri_l", p.tri_l, rn, vn, vn, "|", " -> ");
    emit_tensor(os, "tri_r", p.tri_r, vn, rn, vn, "|", " -> ");
    emit_tensor(os, "harp_r", p.harp_r, vn, rn, rn, "|", " -> ");
    emit_tensor(os, "harp_l", p.harp_l, rn, vn, rn, "|", " -> ");
    os << "}\n";
  }

  void operator()(const DeformationBlock& b) const {
    os << "deformation " << b.name << " datum " << b.map.datum.name << " {\n";
    emit_map(os, "d", b.map.d, b.map.datum.vbasis, b.map.datum.base.basis);
    os << "}\n";
  }

  void operator()(const FlagRowBlock& b) const {
    os << "flagrow " << b.name << " base " << b.base.name << " {\n  row: " << b.row << "\n";
    for (const auto& [k, v] : b.params) os << "  set: " << k << " = " << v.to_string() << "\n";
    os << "}\n";
  }

  void operator()(const GridBlock& b) const {
    const auto& rn = b.base.basis;
    const auto& sg = b.base.semigroup;
    const FlagGrid& g = b.grid;
    auto vecs = [&](const std::string& k, const std::vector<Vec>& vs) {
      std::vector<std::string> xs;
      for (const auto& v : vs) xs.push_back(format_combination(v, rn));
      os << "  " << k << ": " << join(xs) << "\n";
    };
    auto mats = [&](const std::string& k, const std::vector<Matrix>& ms) {
      std::vector<std::string> xs;
      for (const auto& m : ms) xs.push_back(matrix_literal(m, rn));
      os << "  " << k << ": " << join(xs) << "\n";
    };
    auto scs = [&](const std::string& k, const std::vector<Scalar>& ss) {
      std::vector<std::string> xs;
      for (const auto& s : ss) xs.push_back(s.to_string());
      os << "  " << k << ": " << join(xs) << "\n";
    };
    os << "grid " << b.name << " base " << b.base.name << " {\n";
    vecs("l", g.l);
    vecs("r", g.r);
    mats("t_r", g.t_r);
    mats("t_l", g.t_l);
    vecs("a1", g.a1);
    scs("k1", g.k1);
    for (size_t w = 0; w < sg.size(); ++w) vecs("b[" + sg.element(w) + "]", g.b[w]);
    for (size_t w = 0; w < sg.size(); ++w) scs("k[" + sg.element(w) + "]", g.kfam[w]);
    vecs("a2", g.a2);
    scs("k2", g.k2);
    os << "}\n";
  }
};

}  // namespace

std::string serialize(const Document& doc) {
  std::ostringstream os;
  for (size_t i = 0; i < doc.blocks.size(); ++i) {
    bool imp = doc.blocks[i].index() == 0;
    if (i > 0 && !(imp && doc.blocks[i - 1].index() == 0)) os << "\n";
    std::visit(Emit{os}, doc.blocks[i]);
  }
  return os.str();
}

}  // namespace rbfam
