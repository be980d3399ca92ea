#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rbfam/errors.hpp"
#include "rbfam/io.hpp"
#include "rbfam/standard.hpp"
#include "support.hpp"

using namespace rbfam;
namespace fs = std::filesystem;

namespace {

const fs::path kData = RBFAM_TEST_DATA;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <class T>
const T& get(const Document& doc, const std::string& name) {
  const Block* b = doc.find(name);
  REQUIRE(b != nullptr);
  REQUIRE(std::holds_alternative<T>(*b));
  return std::get<T>(*b);
}

}  // namespace

TEST_CASE("fixtures round trip byte for byte") {
  for (const char* name : {"example_2_3.alg", "row10.dat", "plane_E_datum.golden", "table3.grid", "pair_1100.pair",
                           "pair_1111.pair", "deform_row10.dat"}) {
    CAPTURE(name);
    std::string text = slurp(kData / name);
    Document doc = parse_file((kData / name).string());
    CHECK(serialize(doc) == text);
    CHECK(parse_document(serialize(doc), kData.string()) == doc);
  }
}

TEST_CASE("the example algebras") {
  Document doc = parse_file((kData / "example_2_3.alg").string());
  CHECK(get<FiniteSemigroup>(doc, "S") == FiniteSemigroup::two_element());
  CHECK(get<HomAlgebra>(doc, "R") == standard::line_R());
  CHECK(get<HomAlgebra>(doc, "B") == standard::line_B());
  CHECK(get<HomAlgebra>(doc, "E") == standard::plane_E());
}

TEST_CASE("references into imports") {
  Document row = parse_file((kData / "row10.dat").string());
  const auto& fr = get<FlagRowBlock>(row, "row10");
  CHECK(fr.base == standard::line_R());
  CHECK(fr.row == "10");
  CHECK_THROWS_AS(fr.datum(), InvalidInput);
  FlagRowBlock set = fr;
  set.params = {{"tr", 3}, {"k2", 2}};
  ExtendingDatum d = set.datum();
  d.vbasis = {"x"};
  CHECK(d == testing::row10_datum(3, 2));

  Document grid = parse_file((kData / "table3.grid").string());
  CHECK(get<GridBlock>(grid, "T3").grid == table3_grid());

  Document golden = parse_file((kData / "plane_E_datum.golden").string());
  ExtendingDatum gd = get<ExtendingDatum>(golden, "E_datum");
  Matrix rho(1, 2);
  rho(0, 0) = 1;
  rho(0, 1) = -3;
  CHECK(gd == extension_to_datum(standard::plane_E(), rho));
}

TEST_CASE("pairs and deformations") {
  Document ok = parse_file((kData / "pair_1100.pair").string());
  CHECK(check_matched_pair(get<PairBlock>(ok, "M").pair).ok());
  Document bad = parse_file((kData / "pair_1111.pair").string());
  auto labels = check_matched_pair(get<PairBlock>(bad, "N").pair).labels();
  CHECK(labels == std::set<std::string>{"M3", "M4", "M6", "M7"});

  Document dd = parse_file((kData / "deform_row10.dat").string());
  const auto& dm = get<DeformationBlock>(dd, "d_minus3").map;
  CHECK(check_deformation(dm).ok());
  CHECK(dm.d(0, 0) == Scalar(-3));
}

TEST_CASE("empty and comment-only input") {
  CHECK(parse_document("").blocks.empty());
  CHECK(parse_document("\n\n# nothing here\n  \n").blocks.empty());
  CHECK(serialize(Document{}).empty());
}

TEST_CASE("malformed inputs match their goldens") {
  size_t seen = 0;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(kData / "malformed"))
    if (e.path().extension() == ".alg") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    CAPTURE(p.filename().string());
    std::string expected = slurp(fs::path(p).replace_extension(".err"));
    std::string got;
    try {
      parse_file(p.string());
    } catch (const ParseError& e) {
      got = std::string(e.what()) + "\n";
    }
    CHECK(got == expected);
    ++seen;
  }
  CHECK(seen == 20);
}

TEST_CASE("unreadable file") { CHECK_THROWS_AS(parse_file((kData / "absent.alg").string()), InvalidInput); }

TEST_CASE("random datums survive serialization") {
  testing::Rng rng(404);
  for (int t = 0; t < 40; ++t) {
    size_t n = 1 + t % 2, m = 1 + (t / 2) % 2;
    ExtendingDatum d = t % 3 ? testing::random_valid_datum(rng, n, m) : testing::random_sparse_datum(rng, n, m);
    d.name = "D";
    d.base.name = "A";
    d.base.semigroup = FiniteSemigroup("S", d.base.semigroup.elements(), {{0, 1}, {1, 0}});
    Document doc;
    doc.blocks = {d.base.semigroup, d.base, d};
    std::string text = serialize(doc);
    Document back = parse_document(text);
    CHECK(back == doc);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("statement separators and forward references") {
  const char* text =
      "datum D base A { vdim: 1; vbasis: x; mul_V: x|x -> 2 x }\n"
      "algebra A over QL weight l uses S { dim: 1; basis: a; theta: a -> 1 a }\n"
      "semigroup S { elements: e; table: e*e = e }\n";
  Document doc = parse_document(text);
  const auto& d = get<ExtendingDatum>(doc, "D");
  CHECK(d.mul_V.at(0, 0, 0) == Scalar(2));
  CHECK(d.base.theta == Matrix::identity(1));
  CHECK(parse_document(serialize(doc)) == doc);
}

TEST_CASE("linear combinations") {
  std::vector<std::string> names{"e1", "e2"};
  CHECK(format_combination(Vec{0, 0}, names) == "0");
  CHECK(format_combination(Vec{1, 0}, names) == "1 e1");
  CHECK(format_combination(Vec{-3, 2}, names) == "-3 e1 + 2 e2");
  Scalar l = Scalar::lambda();
  std::string s = format_combination(Vec{3 * l, -l}, names);
  Document doc = parse_document(
      "semigroup S { elements: e; table: e*e = e }\n"
      "algebra A over QL weight l uses S { dim: 2; basis: e1, e2; theta: e1 -> " + s + " }\n");
  CHECK(get<HomAlgebra>(doc, "A").theta.column(0) == Vec{3 * l, -l});
}
