#include <catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "munn/models.hpp"
#include "munn/serialize.hpp"
#include "support.hpp"

using namespace munn;

namespace {
  std::string data(std::string const& name) {
    return std::string(MUNN_TEST_DATA) + "/" + name;
  }
}  // namespace

TEST_CASE("monoid specs parse and print back", "[models]") {
  for (std::string s : {"S:4", "I:3", "T:2", "SGL:subsets:3", "SGL:partitions:4", "SGL:ordperm:3"}) {
    CHECK(parse_monoid_spec(s).text() == s);
  }
  auto const g = parse_monoid_spec("gens:some/file.gens");
  CHECK(g.kind == SpecKind::generators);
  CHECK(g.path == "some/file.gens");
  for (std::string bad : {"", "S", "S:", "S:0", "S:x", "X:3", "SGL:cubes:3", "SGL:subsets", "I:3:1", "gens:"}) {
    CHECK_THROWS_AS(parse_monoid_spec(bad), ParseError);
  }
}

TEST_CASE("generator files", "[models]") {
  SECTION("I_2 from a swap and a partial identity has 7 elements") {
    auto const m = MonoidModel::load(parse_monoid_spec("gens:" + data("i2.gens")));
    CHECK(m.monoid()->size() == 7);
    CHECK(m.monoid()->size() == testing::symmetric_inverse_order(2));
    CHECK(m.is_inverse());
  }
  SECTION("T_3 from a 3-cycle, a swap and a rank-2 map") {
    auto const m = MonoidModel::load(parse_monoid_spec("gens:" + data("t3.gens")));
    CHECK(m.monoid()->size() == 27);
    CHECK_FALSE(m.is_inverse());
  }
  SECTION("malformed files") {
    CHECK_THROWS_AS(MonoidModel::load(parse_monoid_spec("gens:" + data("bad_kind.gens"))), ParseError);
    CHECK_THROWS_AS(MonoidModel::load(parse_monoid_spec("gens:" + data("missing.gens"))), ParseError);
    std::istringstream wrong_degree("S 2\n(1,2,3)\n");
    auto const         list = read_generator_list(wrong_degree);
    CHECK(list.elements.size() == 1);
    std::istringstream empty("# nothing\n\n");
    CHECK_THROWS_AS(read_generator_list(empty), ParseError);
  }
}

TEST_CASE("cap is honoured by every family", "[models]") {
  for (std::string s : {"S:4", "I:3", "T:3", "SGL:ordperm:3"}) {
    CHECK_THROWS_AS(MonoidModel::load(parse_monoid_spec(s), 5), CapExceeded);
  }
}

TEST_CASE("J-class names and order", "[models]") {
  SECTION("I_3") {
    auto const               m = MonoidModel::load(parse_monoid_spec("I:3"));
    std::vector<std::string> names;
    for (auto j : m.jclass_order()) {
      names.push_back(m.jclass_name(j));
    }
    CHECK(names == std::vector<std::string>{"J3", "J2", "J1", "J0"});
    CHECK(m.jclass_parse("units") == m.jclass_parse("J3"));
    CHECK(m.jclass_parse("zero") == m.jclass_parse("0"));
    CHECK(m.jclass_parse("minimal") == m.jclass_parse("J0"));
    CHECK(m.jclass_parse("2") == m.jclass_parse("J2"));
    CHECK_THROWS_AS(m.jclass_parse("constants"), ParseError);
    CHECK_THROWS_AS(m.jclass_parse("J7"), ParseError);
  }
  SECTION("T_3 constants") {
    auto const m = MonoidModel::load(parse_monoid_spec("T:3"));
    auto const j = m.jclass_parse("constants");
    CHECK(m.jclass_name(j) == "J1");
    CHECK(m.green().J().members[j].size() == 3);
    CHECK(m.jclass_parse("minimal") == j);
  }
  SECTION("ordered partitions, n = 3") {
    auto const            m = MonoidModel::load(parse_monoid_spec("SGL:ordperm:3"));
    std::set<std::string> names;
    for (auto j : m.jclass_order()) {
      names.insert(m.jclass_name(j));
    }
    CHECK(names == std::set<std::string>{"J(3)", "J(1,2)", "J(2,1)", "J(1,1,1)", "J0"});
    CHECK(m.jclass_name(m.jclass_order().front()) == "J(3)");
    CHECK(m.jclass_name(m.jclass_order().back()) == "J0");
  }
  SECTION("set partitions, n = 3") {
    auto const            m = MonoidModel::load(parse_monoid_spec("SGL:partitions:3"));
    std::set<std::string> names;
    for (auto j : m.jclass_order()) {
      names.insert(m.jclass_name(j));
    }
    // Partition lattices have their own bottom, so no zero is adjoined.
    CHECK(names == std::set<std::string>{"J(3)", "J(2,1)", "J(1,1,1)"});
  }
}

TEST_CASE("mapping representations", "[models]") {
  for (std::string s : {"S:3", "I:3", "T:3"}) {
    auto const m   = MonoidModel::load(parse_monoid_spec(s));
    auto const rep = m.mapping_rep();
    CHECK(rep.dim() == 3);
    CHECK_NOTHROW(rep.verify_all_pairs());
  }
  CHECK_THROWS_AS(MonoidModel::load(parse_monoid_spec("SGL:subsets:2")).mapping_rep(), Unsupported);
}

TEST_CASE("representation text round trip", "[serialize]") {
  auto const         m    = MonoidModel::load(parse_monoid_spec("I:2"));
  auto const         text = to_text(m.mapping_rep(), "I:2", "monoid");
  std::ostringstream out;
  write_representation(out, text);
  std::istringstream in(out.str());
  auto const         back = read_representation(in);
  CHECK(back.monoid == "I:2");
  CHECK(back.over == "monoid");
  CHECK(back.dim == 2);
  CHECK(back.labels == text.labels);
  REQUIRE(back.matrices.size() == text.matrices.size());
  for (std::size_t i = 0; i < back.matrices.size(); ++i) {
    CHECK(back.matrices[i] == text.matrices[i]);
  }
  std::ostringstream again;
  write_representation(again, back);
  CHECK(again.str() == out.str());
}

TEST_CASE("representation text keeps fractions exact", "[serialize]") {
  RepresentationText t{"S:1", "monoid", 2, {"(1)"}, {Matrix(2, 2)}};
  t.matrices[0](0, 0) = Rational(-1, 2);
  t.matrices[0](1, 1) = Rational(7, 3);
  std::ostringstream out;
  write_representation(out, t);
  CHECK(out.str().find("row -1/2 0/1\nrow 0/1 7/3\n") != std::string::npos);
  std::istringstream in(out.str());
  CHECK(read_representation(in).matrices[0] == t.matrices[0]);
}

TEST_CASE("malformed representation text", "[serialize]") {
  for (std::string bad : {
           "",
           "representation\nmonoid S:1\n",
           "representation\nmonoid S:1\nover monoid\nelements x\ndim 1\n",
           "representation\nmonoid S:1\nover monoid\nelements 1\ndim 1\nelement (1)\nrow 1 2\nend\n",
           "representation\nmonoid S:1\nover monoid\nelements 1\ndim 2\nelement (1)\nrow 1 0\nrow 1\nend\n",
           "representation\nmonoid S:1\nover monoid\nelements 1\ndim 1\nelement (1)\nrow 1/0\nend\n",
           "representation\nmonoid S:1\nover monoid\nelements 1\ndim 1\nelement (1)\nrow 1\n",
       }) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_representation(in), ParseError);
  }
}
